#include "algindex/cli.hpp"

#include <chrono>
#include <sstream>

#include <CLI11.hpp>

#include "algindex/builders.hpp"
#include "algindex/charpoly.hpp"
#include "algindex/index.hpp"
#include "algindex/io.hpp"
#include "algindex/report.hpp"
#include "algindex/stab.hpp"
#include "algindex/tensor_checks.hpp"

namespace algindex {

namespace {

struct Options {
    std::vector<std::string> files;
    std::string out_path;
    std::string mode = "randomized";
    std::string suite = "all";
    std::string format = "text";
    std::uint64_t seed = 0;
    std::uint64_t prime = kDefaultPrime;
    std::size_t trials = kDefaultTrials;
    bool symbolic = false;
    bool profile = false;
};

InputRecord input_record(const std::string& path) {
    std::uint64_t h = fnv1a(read_file(path));
    std::ostringstream hex;
    hex << "fnv1a:0x" << std::hex << h;
    return {path, hex.str()};
}

std::optional<std::size_t> as_mat_dim(const StructureConstants& sc) {
    std::size_t k = 0;
    while ((k + 1) * (k + 1) <= sc.dim()) ++k;
    if (k * k != sc.dim() || k == 0) return std::nullopt;
    StructureConstants ref = build_mat(k);
    for (std::size_t i = 0; i < sc.dim(); ++i)
        for (std::size_t j = 0; j < sc.dim(); ++j)
            for (std::size_t l = 0; l < sc.dim(); ++l)
                if (sc.at(i, j, l) != ref.at(i, j, l)) return std::nullopt;
    return k;
}

std::vector<Fp> invertible_element(const StructureConstants& sc, std::uint64_t prime, SplitMix64& g) {
    const Fp kz = Fp::zero(prime);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Fp> cand = random_functional(sc.dim(), prime, g);
        if (!is_zero(det(left_mult_operator(sc, cand, kz)))) return cand;
    }
    throw error("could not sample an invertible element in 64 attempts");
}

// --- verify suites ----------------------------------------------------------

void charpoly_suite(const StructureConstants& sc, const Options& opt, std::uint64_t stream_base,
                    std::vector<VerificationReport>& out) {
    const Fp kz = Fp::zero(opt.prime);
    const Fp one = Fp::one(opt.prime);

    {  // basis change multiplies chi by (det C)^2
        SplitMix64 g = substream(opt.seed, stream_base + 1);
        std::vector<Fp> f = random_functional(sc.dim(), opt.prime, g);
        Matrix<Fp> m = mult_matrix_at(sc, f, kz);
        Matrix<Fp> c(sc.dim(), sc.dim(), kz);
        Fp dc = kz;
        do {
            for (std::size_t i = 0; i < sc.dim(); ++i)
                for (std::size_t j = 0; j < sc.dim(); ++j) c(i, j) = Fp(g.below(opt.prime), opt.prime);
            dc = det(c);
        } while (is_zero(dc));
        Matrix<Fp> ct = c.transpose();
        BiPoly<Fp> p = det_pencil(c * m * ct, c * m.transpose() * ct);
        BiPoly<Fp> q = det_pencil(m, m.transpose());
        auto w = equal_up_to_scalar(p, q);
        VerificationReport r;
        r.tag = "lem.charpoly-scalar-basis";
        r.pass = w.has_value() && *w == dc * dc;
        r.details["det_c_squared"] = to_string(dc * dc);
        r.details["witness"] = w ? to_string(*w) : "none";
        out.push_back(std::move(r));
    }

    {  // divisibility bounds from the multiplicity profile
        MultiplicityProfile prof = multiplicity_profile(sc, opt.trials, opt.seed, opt.prime);
        VerificationReport r;
        r.tag = "thm.charpoly-divisibility";
        bool lam_mu_equal = prof.m_lambda == prof.m_mu;
        bool lam_ok = !prof.m_lambda || *prof.m_lambda >= static_cast<int>(prof.dim_ker_a_generic);
        bool sum_ok = !prof.m_sum || *prof.m_sum >= static_cast<int>(prof.index);
        r.pass = lam_mu_equal && lam_ok && sum_ok;
        r.details["m_lambda"] = prof.m_lambda ? ojson(*prof.m_lambda) : ojson(nullptr);
        r.details["m_mu"] = prof.m_mu ? ojson(*prof.m_mu) : ojson(nullptr);
        r.details["m_sum"] = prof.m_sum ? ojson(*prof.m_sum) : ojson(nullptr);
        r.details["dim_ker_A_generic"] = prof.dim_ker_a_generic;
        r.details["index"] = prof.index;
        out.push_back(std::move(r));
    }

    {  // quasi-invariance under coAd, unital algebras only
        std::optional<std::vector<Rat>> u = sc.unit();
        if (!u) u = find_unit(sc);
        if (u) {
            SplitMix64 g = substream(opt.seed, stream_base + 2);
            std::vector<Fp> elem = invertible_element(sc, opt.prime, g);
            std::vector<Fp> f = random_functional(sc.dim(), opt.prime, g);
            out.push_back(quasi_invariance_check(sc, elem, f, kz));
        }
    }

    if (auto k = as_mat_dim(sc)) {  // Mat_n closed form
        const FpTable table(sc, opt.prime);
        bool all = true;
        for (std::size_t t = 0; t < 5; ++t) {
            SplitMix64 g = substream(opt.seed, stream_base + 3 + t);
            std::vector<Fp> f = random_functional(sc.dim(), opt.prime, g);
            Matrix<Fp> phi(*k, *k, kz);
            for (std::size_t i = 0; i < *k; ++i)
                for (std::size_t j = 0; j < *k; ++j) phi(i, j) = f[i * *k + j];
            all = all && charpoly_at(table, f) == matn_charpoly_reference(*k, phi);
        }
        VerificationReport r;
        r.tag = "thm.matn-resultant-formula";
        r.pass = all;
        r.details["n"] = *k;
        r.details["functionals"] = 5;
        out.push_back(std::move(r));
        (void)one;
    }
}

void stab_suite(const StructureConstants& sc, const Options& opt, std::uint64_t stream_base,
                std::vector<VerificationReport>& out) {
    {  // Q_F properties at a few sampled functionals
        bool all = true;
        std::size_t runs = std::min<std::size_t>(opt.trials, 3);
        ojson dims = ojson::array();
        VerificationReport last;
        for (std::size_t t = 0; t < runs; ++t) {
            SplitMix64 g = substream(opt.seed, stream_base + 10 + t);
            std::vector<Fp> f = random_functional(sc.dim(), opt.prime, g);
            last = qf_property_check(sc, f);
            all = all && last.pass;
            dims.push_back(last.details["stab_dim"]);
        }
        last.pass = all;
        last.details["functionals"] = runs;
        last.details["stab_dims"] = dims;
        out.push_back(std::move(last));
    }

    {  // iff: (lam+mu)-multiplicity equals index <=> Q_F non-degenerate
        AgreementRecord rec = index_charpoly_agreement(sc, opt.seed, opt.trials, opt.prime);
        VerificationReport r;
        r.tag = "thm.qf-iff-index";
        r.pass = rec.iff_holds && rec.stab_dim == rec.index;
        r.details["m_sum"] = rec.n_sum ? ojson(*rec.n_sum) : ojson(nullptr);
        r.details["index"] = rec.index;
        r.details["stab_dim"] = rec.stab_dim;
        r.details["q_nondegenerate"] = rec.q_nondegenerate;
        r.details["agree"] = rec.agree;
        out.push_back(std::move(r));
    }
}

void tensor_suite(const StructureConstants& a, const StructureConstants& b, const Options& opt,
                  std::uint64_t stream_base, std::vector<VerificationReport>& out) {
    const Fp kz = Fp::zero(opt.prime);
    SplitMix64 g = substream(opt.seed, stream_base);
    std::vector<Fp> f = random_functional(a.dim(), opt.prime, g);
    std::vector<Fp> h = random_functional(b.dim(), opt.prime, g);

    Matrix<Fp> ma = mult_matrix_at(a, f, kz);
    Matrix<Fp> mb = mult_matrix_at(b, h, kz);
    out.push_back(det_tensor_identity_check(ma, mb));

    {
        KroneckerCheckRecord rec =
            kernel_sum_dim(commutator_matrix_at(a, f, kz), mb, ma, commutator_matrix_at(b, h, kz));
        VerificationReport r;
        r.tag = "thm.kernel-sum-bound";
        r.pass = rec.achieved >= rec.bound;
        r.details["bound"] = rec.bound;
        r.details["achieved"] = rec.achieved;
        r.details["equality"] = rec.equality;
        out.push_back(std::move(r));
    }

    out.push_back(commutator_decomposition_check(a, b, f, h));
    out.push_back(convexity_check(a, b, opt.seed, opt.trials, opt.prime));

    if (auto n = as_mat_dim(a))
        out.push_back(matN_tensor_index_check(b, *n, opt.seed, opt.trials, opt.prime));
}

// --- subcommand handlers ----------------------------------------------------

RunReport handle_validate(const Options& opt) {
    RunReport rep;
    rep.command = "validate";
    rep.inputs.push_back(input_record(opt.files[0]));
    StructureConstants sc = load_algebra_file(opt.files[0]);  // throws on any violation
    rep.results["dim"] = sc.dim();
    if (!sc.name().empty()) rep.results["name"] = sc.name();
    rep.results["associative"] = true;
    rep.results["unital"] = find_unit(sc).has_value();
    return rep;
}

RunReport handle_index(const Options& opt) {
    RunReport rep;
    rep.command = "index";
    rep.inputs.push_back(input_record(opt.files[0]));
    StructureConstants sc = load_algebra_file(opt.files[0]);
    IndexReport ir = opt.mode == "symbolic" ? index_symbolic(sc)
                                            : index_randomized(sc, opt.trials, opt.seed, opt.prime);
    rep.results["dim"] = ir.dim;
    rep.results["generic_rank"] = ir.generic_rank;
    rep.results["index"] = ir.index;
    rep.results["mode"] = opt.mode;
    return rep;
}

RunReport handle_charpoly(const Options& opt) {
    RunReport rep;
    rep.command = "charpoly";
    rep.inputs.push_back(input_record(opt.files[0]));
    StructureConstants sc = load_algebra_file(opt.files[0]);
    if (opt.symbolic) {
        BiPoly<MultiPoly<Rat>> chi = charpoly_symbolic(sc);
        std::vector<std::string> names = symbolic_names(sc);
        rep.results["dim"] = sc.dim();
        rep.results["degree"] = chi.total_degree();
        rep.results["homogeneous"] = chi.homogeneous();
        rep.results["charpoly"] = chi.str(names);
        ojson terms = ojson::array();
        for (const auto& [key, coeff] : chi.terms())
            terms.push_back({{"lam", key.first}, {"mu", key.second}, {"coeff", coeff.str(names)}});
        rep.results["terms"] = terms;
    } else {
        MultiplicityProfile prof = multiplicity_profile(sc, opt.trials, opt.seed, opt.prime);
        rep.results["m_lambda"] = prof.m_lambda ? ojson(*prof.m_lambda) : ojson(nullptr);
        rep.results["m_mu"] = prof.m_mu ? ojson(*prof.m_mu) : ojson(nullptr);
        rep.results["m_sum"] = prof.m_sum ? ojson(*prof.m_sum) : ojson(nullptr);
        rep.results["dim_ker_A_generic"] = prof.dim_ker_a_generic;
        rep.results["index"] = prof.index;
    }
    return rep;
}

RunReport handle_tensor(const Options& opt) {
    RunReport rep;
    rep.command = "tensor";
    rep.inputs.push_back(input_record(opt.files[0]));
    rep.inputs.push_back(input_record(opt.files[1]));
    StructureConstants t =
        tensor_algebra(load_algebra_file(opt.files[0]), load_algebra_file(opt.files[1]));
    save_algebra_file(t, opt.out_path);
    rep.results["output"] = opt.out_path;
    rep.results["dim"] = t.dim();
    rep.results["name"] = t.name();
    return rep;
}

RunReport handle_stab(const Options& opt) {
    RunReport rep;
    rep.command = "stab";
    rep.inputs.push_back(input_record(opt.files[0]));
    StructureConstants sc = load_algebra_file(opt.files[0]);
    IndexReport ir = index_randomized(sc, opt.trials, opt.seed, opt.prime);
    // prefer a functional on the generic stratum, same streams as the trials
    StabilizerData<Fp> st = [&] {
        for (std::size_t t = 0; t < opt.trials; ++t) {
            SplitMix64 g = substream(opt.seed, t);
            std::vector<Fp> f = random_functional(sc.dim(), opt.prime, g);
            StabilizerData<Fp> cand = stab_basis(sc, f, Fp::zero(opt.prime));
            if (cand.basis.size() == ir.index || t + 1 == opt.trials) return cand;
        }
        throw error("unreachable");
    }();
    rep.results["dim"] = sc.dim();
    rep.results["index"] = ir.index;
    rep.results["stab_dim"] = st.basis.size();
    rep.results["stab_dim_equals_index"] = st.basis.size() == ir.index;
    rep.results["closure_ok"] = st.closure_ok;
    rep.results["gram_nondegenerate"] = st.nondegenerate;
    ojson gram = ojson::array();
    for (std::size_t i = 0; i < st.gram.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < st.gram.cols(); ++j) row.push_back(st.gram(i, j).value());
        gram.push_back(row);
    }
    rep.results["gram"] = gram;
    return rep;
}

RunReport handle_verify(const Options& opt) {
    RunReport rep;
    rep.command = "verify";
    std::vector<StructureConstants> algs;
    for (const std::string& path : opt.files) {
        rep.inputs.push_back(input_record(path));
        algs.push_back(load_algebra_file(path));
    }
    const bool do_charpoly = opt.suite == "charpoly" || opt.suite == "all";
    const bool do_stab = opt.suite == "stab" || opt.suite == "all";
    const bool do_tensor = opt.suite == "tensor" || opt.suite == "all";
    for (std::size_t i = 0; i < algs.size(); ++i) {
        std::uint64_t base = 100 * (i + 1);
        if (do_charpoly) charpoly_suite(algs[i], opt, base, rep.checks);
        if (do_stab) stab_suite(algs[i], opt, base, rep.checks);
    }
    if (do_tensor) {
        if (algs.size() == 1) {
            tensor_suite(algs[0], algs[0], opt, 5000, rep.checks);
        } else {
            std::uint64_t base = 5000;
            for (std::size_t i = 0; i < algs.size(); ++i)
                for (std::size_t j = 0; j < algs.size(); ++j) {
                    if (i == j) continue;
                    tensor_suite(algs[i], algs[j], opt, base, rep.checks);
                    base += 50;
                }
        }
    }
    return rep;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact index and characteristic-polynomial computations for "
                 "finite-dimensional associative algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_params = [&](CLI::App* cmd, bool with_mode = false) {
        cmd->add_option("--seed", opt.seed, "base seed for all randomized draws");
        cmd->add_option("--prime", opt.prime, "odd prime modulus for generic evaluation");
        cmd->add_option("--trials", opt.trials, "number of random functionals")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", opt.format, "report format")
            ->check(CLI::IsMember({"text", "machine"}));
        if (with_mode)
            cmd->add_option("--mode", opt.mode, "randomized or symbolic")
                ->check(CLI::IsMember({"randomized", "symbolic"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "parse a file and check associativity");
    validate->add_option("file", opt.files, "algebra file")->required()->expected(1);
    add_params(validate);

    CLI::App* index = app.add_subcommand("index", "index of the derived Lie algebra");
    index->add_option("file", opt.files, "algebra file")->required()->expected(1);
    add_params(index, true);

    CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial data");
    charpoly->add_option("file", opt.files, "algebra file")->required()->expected(1);
    CLI::Option* sym = charpoly->add_flag("--symbolic", opt.symbolic, "full symbolic polynomial");
    charpoly->add_flag("--profile", opt.profile, "generic multiplicity profile (default)")
        ->excludes(sym);
    add_params(charpoly);

    CLI::App* tensor = app.add_subcommand("tensor", "write the tensor product algebra");
    tensor->add_option("files", opt.files, "two algebra files")->required()->expected(2);
    tensor->add_option("-o,--output", opt.out_path, "output file")->required();
    add_params(tensor);

    CLI::App* stab = app.add_subcommand("stab", "stabilizer and Q_F at a generic functional");
    stab->add_option("file", opt.files, "algebra file")->required()->expected(1);
    add_params(stab);

    CLI::App* verify = app.add_subcommand("verify", "run theorem checks against the inputs");
    verify->add_option("files", opt.files, "algebra files")->required()->expected(-1);
    verify->add_option("--suite", opt.suite, "which checks to run")
        ->check(CLI::IsMember({"tensor", "charpoly", "stab", "all"}));
    add_params(verify);

    std::vector<const char*> argv;
    argv.push_back("algindex");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    try {
        require_odd_prime(opt.prime);
        auto t0 = std::chrono::steady_clock::now();
        RunReport rep;
        if (app.got_subcommand(validate))
            rep = handle_validate(opt);
        else if (app.got_subcommand(index))
            rep = handle_index(opt);
        else if (app.got_subcommand(charpoly))
            rep = handle_charpoly(opt);
        else if (app.got_subcommand(tensor))
            rep = handle_tensor(opt);
        else if (app.got_subcommand(stab))
            rep = handle_stab(opt);
        else
            rep = handle_verify(opt);
        rep.seed = opt.seed;
        rep.prime = opt.prime;
        rep.trials = opt.trials;
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        bool failed = false;
        for (const VerificationReport& c : rep.checks) failed = failed || !c.pass;
        std::string out = opt.format == "machine" ? emit_machine(rep) : emit_text(rep);
        return {failed ? 1 : 0, out, ""};
    } catch (const input_error& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace algindex
