#include "algindex/builders.hpp"

namespace algindex {

StructureConstants build_field() {
    StructureConstants sc(1, "field");
    sc.at(0, 0, 0) = 1;
    sc.set_labels({"one"});
    sc.set_unit({Rat(1)});
    return sc;
}

StructureConstants build_two_dim() {
    // a*a = a, a*b = b, b*a = a, b*b = b: e_i e_j = e_j. Left units everywhere,
    // no two-sided unit.
    StructureConstants sc(2, "two_dim");
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) sc.at(i, j, j) = 1;
    sc.set_labels({"a", "b"});
    return sc;
}

StructureConstants build_mat(std::size_t n) {
    if (n == 0) throw input_error("mat(n) needs n >= 1");
    StructureConstants sc(n * n, "mat" + std::to_string(n));
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    // E_ij E_kl = [j == k] E_il
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (j == k) sc.at(idx(i, j), idx(k, l), idx(i, l)) = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    sc.set_labels(std::move(labels));
    std::vector<Rat> unit(n * n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = 1;
    sc.set_unit(std::move(unit));
    return sc;
}

StructureConstants build_seaweed3() {
    // staircase subalgebra of Mat_3 spanned by E11, E12, E22, E32, E33; going
    // through from_matrix_basis keeps the table tied to the matrix picture
    auto unit_mat = [](std::size_t r, std::size_t c) {
        Matrix<Rat> m(3, 3, Rat(0));
        m(r, c) = 1;
        return m;
    };
    std::vector<Matrix<Rat>> basis = {unit_mat(0, 0), unit_mat(0, 1), unit_mat(1, 1),
                                      unit_mat(2, 1), unit_mat(2, 2)};
    StructureConstants sc = from_matrix_basis(basis, {"a", "b", "c", "d", "e"}, "seaweed3");
    sc.set_unit({Rat(1), Rat(0), Rat(1), Rat(0), Rat(1)});  // E11 + E22 + E33
    return sc;
}

StructureConstants build_upper_triangular(std::size_t n) {
    if (n == 0) throw input_error("upper_triangular(n) needs n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pos.push_back({i, j});
    const std::size_t d = pos.size();
    StructureConstants sc(d, "ut" + std::to_string(n));
    auto find = [&](std::size_t i, std::size_t j) -> std::size_t {
        for (std::size_t k = 0; k < d; ++k)
            if (pos[k] == std::make_pair(i, j)) return k;
        return d;
    };
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            auto [i, j] = pos[x];
            auto [k, l] = pos[y];
            if (j == k) sc.at(x, y, find(i, l)) = 1;
        }
    std::vector<std::string> labels;
    for (auto [i, j] : pos) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    sc.set_labels(std::move(labels));
    std::vector<Rat> unit(d, Rat(0));
    for (std::size_t i = 0; i < n; ++i) unit[find(i, i)] = 1;
    sc.set_unit(std::move(unit));
    return sc;
}

StructureConstants build_truncated_poly(std::size_t m) {
    if (m == 0) throw input_error("truncated_poly(m) needs m >= 1");
    StructureConstants sc(m, "tp" + std::to_string(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i + j < m) sc.at(i, j, i + j) = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("x" + std::to_string(i));
    sc.set_labels(std::move(labels));
    std::vector<Rat> unit(m, Rat(0));
    unit[0] = 1;
    sc.set_unit(std::move(unit));
    return sc;
}

StructureConstants build_named(const std::string& family, std::size_t param) {
    if (family == "field") return build_field();
    if (family == "two_dim") return build_two_dim();
    if (family == "mat") return build_mat(param);
    if (family == "seaweed3") return build_seaweed3();
    if (family == "upper_triangular") return build_upper_triangular(param);
    if (family == "truncated_poly") return build_truncated_poly(param);
    throw input_error("unknown builder \"" + family +
                      "\" (known: field, two_dim, mat, seaweed3, upper_triangular, "
                      "truncated_poly, direct_sum)");
}

std::vector<StructureConstants> catalog() {
    std::vector<StructureConstants> cat;
    cat.push_back(build_field());
    cat.push_back(build_two_dim());
    cat.push_back(build_seaweed3());
    cat.push_back(build_mat(2));
    cat.push_back(build_mat(3));
    cat.push_back(build_upper_triangular(2));
    cat.push_back(build_upper_triangular(3));
    cat.push_back(build_truncated_poly(2));
    cat.push_back(build_truncated_poly(3));
    cat.push_back(build_truncated_poly(4));
    return cat;
}

}  // namespace algindex
