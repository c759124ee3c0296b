// lieg: classification, closed-form solving and statement checks for invariant generalized complex structures.
#include "lie/catalog.hpp"
#include "lie/io.hpp"
#include "lie/verify.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>

using namespace lie;
using io::json;

namespace {

struct Global {
    std::string output;
    int threads = 0;
    int bound = 120;
    std::uint64_t seed = 1;
};

void emit(const Global& g, const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.output);
    if (!f) throw std::runtime_error("cannot write " + g.output);
    f << text;
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    return json::parse(f);
}

// Names the known shapes of k so the solver output can map the kernel onto a parametrized family.
json family_mapping(const RegularSubalgebra& k, const ClosedForms& cf) {
    const RootSystem& rs = k.weyl().roots();
    json j;
    if (k.roots() == rs.positive_mask()) {
        std::vector<TwoForm> fam;
        const int d = k.cartan_dim();
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) {
                Mat<Scalar> w0(d, d);
                w0(a, b) = Scalar(1);
                w0(b, a) = Scalar(-1);
                fam.push_back(positive_family_form(k, std::vector<Scalar>(rs.size()), w0));
            }
        for (int a : k.root_list()) {
            std::vector<Scalar> mu(rs.size());
            mu[a] = Scalar(1);
            fam.push_back(positive_family_form(k, mu, Mat<Scalar>(d, d)));
        }
        j["shape"] = "h0 + g(R+)";
        j["parameters"] = {{"omega0", d * (d - 1) / 2}, {"mu", static_cast<int>(k.root_list().size())}};
        j["family_dimension"] = span_dim(fam);
        j["kernel_in_family"] = span_contains(fam, cf.basis);
        j["family_in_kernel"] = span_contains(cf.basis, fam);
    } else if (k.roots().empty()) {
        j["shape"] = "abelian";
        j["expected_dimension"] = k.dim() * (k.dim() - 1) / 2;
    }
    return j;
}

int cmd_classify(const Global& g, const std::string& fam, int rank, const std::string& form) {
    WeylBasis wb(build_root_system(parse_family(fam), rank));
    const RootSystem& rs = wb.roots();
    Antiinvolution s = io::parse_sigma(wb, json(form));
    LabelledSystems refs;
    if (rs.family == Family::A && form == "slH") refs = catalog::slh_types(rs);
    if (rs.family == Family::D && form == "lorentz") refs = catalog::lorentz_types(rs);
    if (rs.family == Family::E6 && (form == "outer" || form == "e6-f4")) refs = catalog::e6_systems(rs);
    EnumerationOptions eo;
    eo.pair_bound = g.bound;
    Classification c = classify_sigma_positive(rs, s, refs, eo);
    json j = io::classification_json(rs, c);
    j["family"] = family_name(rs.family);
    j["rank"] = rank;
    j["form"] = form;
    emit(g, j);
    return 0;
}

int cmd_solve(const Global& g, const std::string& path) {
    io::LoadedPair lp = io::load_pair(read_json(path));
    ClosedForms cf = closed_two_forms(*lp.k, g.bound);
    json j = io::closed_forms_json(*lp.k, cf);
    json m = family_mapping(*lp.k, cf);
    if (!m.is_null()) j["family"] = m;
    emit(g, j);
    return 0;
}

int cmd_admissible(const Global& g, const std::string& path) {
    io::LoadedPair lp = io::load_pair(read_json(path));
    AdmissibilityReport r = is_admissible(*lp.k, lp.omega, lp.sigma);
    json j = io::admissibility_json(r);
    j["summary"] = r.summary();
    emit(g, j);
    return r.admissible() ? 0 : 1;
}

int cmd_type(const Global& g, const std::string& path, bool matrices) {
    io::LoadedPair lp = io::load_pair(read_json(path));
    AdmissibilityReport r = is_admissible(*lp.k, lp.omega, lp.sigma);
    json j;
    j["admissibility"] = io::admissibility_json(r);
    if (r.admissible()) {
        GeneralizedStructure gs = build_structure(*lp.k, lp.omega, lp.sigma);
        j["structure"] = io::structure_json(gs, matrices);
        j["type"] = gs.type;
        emit(g, j);
        return gs.ok() ? 0 : 1;
    }
    emit(g, j);
    return 1;
}

int cmd_bfield(const Global& g, const std::string& path) {
    io::LoadedPair lp = io::load_pair(read_json(path));
    const RegularSubalgebra& k = *lp.k;
    json j;
    std::vector<Scalar> mu = lp.mu.empty() ? recover_mu(k, lp.omega) : lp.mu;
    Vec<Scalar> xi;
    if (lp.xi) {
        xi = *lp.xi;
    } else {
        for (Scalar& x : mu) x = -x;
        xi = normalizing_xi(k, mu);
    }
    TwoForm out = b_field_transform(k, lp.omega, xi);
    json xs = json::array();
    for (const Scalar& x : xi) xs.push_back(io::scalar_json(x));
    j["xi"] = xs;
    j["xi_real"] = covector_is_real(lp.sigma, xi);
    j["B"] = io::matrix_json(b_field_on(k, xi));
    j["result"] = io::pair_json(k, out);
    j["normal_form"] = is_normal_form(k, out, lp.sigma);
    AdmissibilityReport a = is_admissible(k, lp.omega, lp.sigma), b = is_admissible(k, out, lp.sigma);
    j["admissible_before"] = a.admissible();
    j["admissible_after"] = b.admissible();
    bool ok = j["xi_real"].get<bool>() && a.admissible() == b.admissible();
    if (a.admissible() && b.admissible()) {
        int t1 = build_structure(k, lp.omega, lp.sigma).type, t2 = build_structure(k, out, lp.sigma).type;
        j["type_before"] = t1;
        j["type_after"] = t2;
        ok = ok && t1 == t2;
    }
    emit(g, j);
    return ok ? 0 : 1;
}

int cmd_verify(const Global& g, const std::string& id, const std::string& fam, int rank, bool extended) {
    verify::Options opt;
    if (!fam.empty()) opt.family = parse_family(fam);
    if (rank > 0) opt.rank = rank;
    opt.seed = g.seed;
    opt.extended = extended;
    std::vector<std::string> ids = id == "all" ? verify::statement_ids() : std::vector<std::string>{id};
    json out = json::array();
    bool pass = true;
    for (const std::string& s : ids) {
        verify::Report r = verify::run(s, opt);
        std::cerr << s << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
        pass = pass && r.pass();
        out.push_back(r.to_json());
    }
    emit(g, ids.size() == 1 ? out[0] : out);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant generalized complex structures on real Lie groups"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--output,-o", g.output, "write the JSON report here instead of stdout");
    app.add_option("--threads", g.threads, "OpenMP worker threads")->check(CLI::NonNegativeNumber);
    app.add_option("--bound", g.bound, "feasibility bound (orbit pairs for classify, dim k for solve)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized checks");

    std::string fam, form, file, id;
    int rank = 0;
    bool extended = false, matrices = false;

    auto* classify = app.add_subcommand("classify", "sigma-positive systems up to equivalence");
    classify->add_option("family", fam)->required();
    classify->add_option("rank", rank)->required()->check(CLI::PositiveNumber);
    classify->add_option("form", form, "compact, slH, lorentz, outer (e6-f4), e6-sp4")->required();

    auto* solve = app.add_subcommand("solve", "basis of closed 2-forms on a subalgebra");
    solve->add_option("file", file)->required()->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "run a statement check");
    verify->add_option("id", id, "statement id or 'all'")->required();
    verify->add_option("--family", fam);
    verify->add_option("--rank", rank)->check(CLI::PositiveNumber);
    verify->add_flag("--extended", extended, "exhaustive E6 search");

    auto* admissible = app.add_subcommand("admissible", "check the admissibility conditions of a pair");
    admissible->add_option("file", file)->required()->check(CLI::ExistingFile);

    auto* type = app.add_subcommand("type", "build L and J for an admissible pair");
    type->add_option("file", file)->required()->check(CLI::ExistingFile);
    type->add_flag("--matrices", matrices, "include L and J");

    auto* bfield = app.add_subcommand("bfield", "B-field transform (to normal form unless xi is given)");
    bfield->add_option("file", file)->required()->check(CLI::ExistingFile);

    auto* roots = app.add_subcommand("dump-roots", "root system data");
    roots->add_option("family", fam)->required();
    roots->add_option("rank", rank)->required()->check(CLI::PositiveNumber);

    auto* constants = app.add_subcommand("dump-constants", "Weyl basis structure constants");
    constants->add_option("family", fam)->required();
    constants->add_option("rank", rank)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (g.threads > 0) omp_set_num_threads(g.threads);

    try {
        if (verify->parsed()) {
            if (id != "all") {
                const auto& ids = verify::statement_ids();
                if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
                    std::cerr << "unknown statement id '" << id << "'\n";
                    return 2;
                }
            }
            if (!fam.empty()) parse_family(fam);
        }
        if (classify->parsed()) return cmd_classify(g, fam, rank, form);
        if (solve->parsed()) return cmd_solve(g, file);
        if (verify->parsed()) return cmd_verify(g, id, fam, rank, extended);
        if (admissible->parsed()) return cmd_admissible(g, file);
        if (type->parsed()) return cmd_type(g, file, matrices);
        if (bfield->parsed()) return cmd_bfield(g, file);
        if (roots->parsed()) {
            emit(g, io::root_system_json(build_root_system(parse_family(fam), rank)));
            return 0;
        }
        if (constants->parsed()) {
            emit(g, io::constants_json(WeylBasis(build_root_system(parse_family(fam), rank))));
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
