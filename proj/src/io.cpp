#include "algindex/io.hpp"

#include <fstream>
#include <sstream>

#include "algindex/builders.hpp"

namespace algindex {

namespace {

using njson = nlohmann::json;

Rat coeff_from_json(const njson& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    throw input_error("coefficient must be a rational string or an integer, got " + v.dump());
}

StructureConstants table_from_json(const njson& j) {
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw input_error("algebra file needs a non-negative integer \"dim\"");
    const std::size_t n = j["dim"].get<std::size_t>();
    if (n == 0) throw input_error("dim must be >= 1");
    if (!j.contains("table")) throw input_error("algebra file needs a \"table\"");
    const njson& t = j["table"];
    if (!t.is_array() || t.size() != n) throw input_error("table must be a dim x dim x dim array");
    StructureConstants sc(n, j.value("name", std::string{}));
    for (std::size_t i = 0; i < n; ++i) {
        if (!t[i].is_array() || t[i].size() != n)
            throw input_error("table row " + std::to_string(i) + " must have dim entries");
        for (std::size_t k = 0; k < n; ++k) {
            const njson& cell = t[i][k];
            if (!cell.is_array() || cell.size() != n)
                throw input_error("table cell (" + std::to_string(i) + "," + std::to_string(k) +
                                  ") must be a length-dim coefficient vector");
            for (std::size_t l = 0; l < n; ++l) sc.at(i, k, l) = coeff_from_json(cell[l]);
        }
    }
    if (j.contains("labels")) {
        std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
        if (labels.size() != n) throw input_error("labels must list dim names");
        sc.set_labels(std::move(labels));
    }
    if (j.contains("unit")) {
        const njson& u = j["unit"];
        if (!u.is_array() || u.size() != n) throw input_error("unit must be a length-dim vector");
        std::vector<Rat> unit;
        for (const njson& v : u) unit.push_back(coeff_from_json(v));
        sc.set_unit(std::move(unit));
    }
    return sc;
}

void check_declared_unit(const StructureConstants& sc) {
    if (!sc.unit()) return;
    const std::size_t n = sc.dim();
    const std::vector<Rat>& u = *sc.unit();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> ej(n, Rat(0));
        ej[j] = 1;
        if (sc.multiply(u, ej, Rat(0)) != ej || sc.multiply(ej, u, Rat(0)) != ej)
            throw input_error("declared unit is not a two-sided identity");
    }
}

}  // namespace

StructureConstants algebra_from_json(const njson& j) {
    if (!j.is_object()) throw input_error("algebra file must be a JSON object");
    StructureConstants sc = [&] {
        if (j.contains("builder")) {
            const std::string family = j["builder"].get<std::string>();
            if (family == "direct_sum") {
                if (!j.contains("a") || !j.contains("b"))
                    throw input_error("direct_sum needs nested specs \"a\" and \"b\"");
                return direct_sum(algebra_from_json(j["a"]), algebra_from_json(j["b"]));
            }
            std::size_t param = 0;
            if (j.contains("n")) param = j["n"].get<std::size_t>();
            if (j.contains("m")) param = j["m"].get<std::size_t>();
            return build_named(family, param);
        }
        return table_from_json(j);
    }();
    AssociativityResult assoc = validate_associativity(sc);
    if (!assoc.ok) {
        auto coords = [&](const std::vector<Rat>& v) {
            std::string s = "(";
            for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
            return s + ")";
        };
        throw input_error("associativity fails at basis triple (" + sc.label(assoc.i) + "," +
                          sc.label(assoc.j) + "," + sc.label(assoc.k) + "): (ei ej)ek = " +
                          coords(assoc.lhs) + " but ei(ej ek) = " + coords(assoc.rhs));
    }
    check_declared_unit(sc);
    return sc;
}

StructureConstants parse_algebra_text(const std::string& text) {
    njson j;
    try {
        j = njson::parse(text);
    } catch (const njson::parse_error& e) {
        // e.byte is a 1-based offset into the text
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw input_error("JSON parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
    }
    return algebra_from_json(j);
}

StructureConstants load_algebra_file(const std::string& path) {
    return parse_algebra_text(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string serialize_algebra(const StructureConstants& sc) {
    nlohmann::ordered_json j;
    const std::size_t n = sc.dim();
    j["dim"] = n;
    if (!sc.name().empty()) j["name"] = sc.name();
    {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back(sc.label(i));
        j["labels"] = labels;
    }
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < n; ++k) {
            nlohmann::ordered_json cell = nlohmann::ordered_json::array();
            for (std::size_t l = 0; l < n; ++l) cell.push_back(sc.at(i, k, l).get_str());
            row.push_back(cell);
        }
        table.push_back(row);
    }
    j["table"] = table;
    if (sc.unit()) {
        nlohmann::ordered_json u = nlohmann::ordered_json::array();
        for (const Rat& x : *sc.unit()) u.push_back(x.get_str());
        j["unit"] = u;
    }
    return j.dump(2) + "\n";
}

void save_algebra_file(const StructureConstants& sc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file " + path);
    out << serialize_algebra(sc);
}

}  // namespace algindex
