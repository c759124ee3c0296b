#include "lie/io.hpp"

#include "lie/catalog.hpp"

#include <stdexcept>

namespace lie::io {

json scalar_json(const Scalar& x) { return x.str(); }

Scalar parse_scalar(const json& j, std::uint32_t p) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), p);
    throw std::invalid_argument("field element must be a string or an integer: " + j.dump());
}

json matrix_json(const Mat<Scalar>& m) {
    json out = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(scalar_json(m(r, c)));
        out.push_back(row);
    }
    return out;
}

Mat<Scalar> parse_matrix(const json& j, std::uint32_t p) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = rows ? static_cast<int>(j[0].size()) : 0;
    Mat<Scalar> m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) throw std::invalid_argument("ragged matrix");
        for (int c = 0; c < cols; ++c) m(r, c) = parse_scalar(j[r][c], p);
    }
    return m;
}

json mask_json(const RootSystem& rs, const RootMask& m) {
    json out = json::array();
    for (int i : m.indices()) out.push_back(rs.label(i));
    return out;
}

json root_system_json(const RootSystem& rs) {
    json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["ambient"] = rs.ambient;
    j["roots"] = rs.roots;
    json simple = json::array();
    for (int s : rs.simple) simple.push_back(rs.roots[s]);
    j["simple_roots"] = simple;
    json gram = json::array();
    for (int a = 0; a < rs.rank; ++a) {
        json row = json::array();
        for (int b = 0; b < rs.rank; ++b) row.push_back(rs.inner(rs.simple[a], rs.simple[b]).get_str());
        gram.push_back(row);
    }
    j["gram"] = gram;
    j["cartan_basis"] = rs.cartan_basis;
    return j;
}

json constants_json(const WeylBasis& wb) {
    const RootSystem& rs = wb.roots();
    json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["unit"] = scalar_json(wb.unit_constant());
    j["convention"] = wb.convention();
    json n = json::object();
    for (int a = 0; a < rs.size(); ++a)
        for (int b = 0; b < rs.size(); ++b)
            if (rs.sum(a, b) >= 0) n[rs.label(a) + " " + rs.label(b)] = scalar_json(wb.N(a, b));
    j["N"] = n;
    json co = json::object();
    for (int a = 0; a < rs.size(); ++a) {
        json v = json::array();
        for (const Rational& x : wb.coroot_ambient(a)) v.push_back(x.get_str());
        co[rs.label(a)] = v;
    }
    j["coroots"] = co;
    return j;
}

json classification_json(const RootSystem& rs, const Classification& c) {
    json j;
    j["orbit_pairs"] = c.enumeration.orbit_pairs;
    j["sigma_fixes_a_root"] = c.enumeration.sigma_fixes_a_root;
    j["systems"] = c.enumeration.systems.size();
    j["orbits_consistent"] = c.orbits_consistent;
    j["all_rechecked"] = c.all_rechecked;
    json classes = json::array();
    bool covered = true;
    for (const SigmaClass& s : c.classes) {
        json e;
        e["representative"] = mask_json(rs, s.representative);
        e["size"] = s.size;
        e["labels"] = s.labels;
        classes.push_back(e);
        covered = covered && !s.labels.empty();
    }
    j["classes"] = classes;
    j["class_count"] = c.classes.size();
    j["covered_by_labels"] = covered;
    return j;
}

json closed_forms_json(const RegularSubalgebra& k, const ClosedForms& cf) {
    json j;
    j["dim_k"] = k.dim();
    j["unknowns"] = cf.unknowns;
    j["equations"] = cf.equations;
    j["dimension"] = cf.basis.size();
    json b = json::array();
    for (const TwoForm& f : cf.basis) b.push_back(matrix_json(f));
    j["basis"] = b;
    return j;
}

json admissibility_json(const AdmissibilityReport& r) {
    json j;
    j["subalgebra"] = r.subalgebra;
    j["spanning"] = r.spanning;
    j["closed"] = r.closed;
    j["l_dim"] = r.l_dim;
    j["l_abelian"] = r.l_abelian;
    j["nondegenerate"] = r.nondegenerate;
    j["sigma_positive"] = r.sigma_positive;
    j["supplementary"] = r.supplementary;
    j["admissible"] = r.admissible();
    return j;
}

json structure_json(const GeneralizedStructure& gs, bool with_matrices) {
    json j;
    j["dim_g"] = gs.dim_g;
    j["type"] = gs.type;
    j["isotropic"] = gs.isotropic;
    j["spanning"] = gs.spanning;
    j["square_minus_one"] = gs.square_minus_one;
    j["skew"] = gs.skew;
    j["eigen"] = gs.eigen;
    j["real"] = gs.real;
    j["ok"] = gs.ok();
    if (with_matrices) {
        j["J"] = matrix_json(gs.J_real);
        json l = json::array();
        for (const TVec& v : gs.L) {
            json row = json::array();
            for (const Scalar& x : v) row.push_back(scalar_json(x));
            l.push_back(row);
        }
        j["L"] = l;
    }
    return j;
}

Antiinvolution parse_sigma(const WeylBasis& wb, const json& j) {
    if (j.is_object()) {
        VoganDiagram d;
        d.symmetry = j.at("symmetry").get<std::vector<int>>();
        if (j.contains("painted")) d.painted = j.at("painted").get<std::vector<int>>();
        return sigma_from_vogan(wb, d);
    }
    const std::string s = j.get<std::string>();
    const Family f = wb.roots().family;
    if (s == "compact") return compact_involution(wb);
    if (s == "slH" && f == Family::A) return sigma_sl_quaternionic(wb);
    if (s == "lorentz" && f == Family::D) return sigma_so_lorentz(wb);
    if ((s == "e6-f4" || s == "outer") && f == Family::E6) return sigma_from_vogan(wb, e6_outer_diagram(false));
    if (s == "e6-sp4" && f == Family::E6) return sigma_from_vogan(wb, e6_outer_diagram(true));
    throw std::invalid_argument("unsupported real form '" + s + "' for " + family_name(f));
}

RootMask parse_roots(const RootSystem& rs, const json& j) {
    if (j.is_array()) {
        RootMask m;
        for (const json& x : j) m.set(rs.parse_label(x.get<std::string>()));
        return m;
    }
    const std::string s = j.get<std::string>();
    if (s == "positive") return rs.positive_mask();
    if (s == "all") return rs.all();
    if (s == "none") return RootMask{};
    if (s == "slh-a") return catalog::slh_type_a(rs);
    if (s == "slh-b") return catalog::slh_type_b(rs);
    if (s.size() == 9 && s.rfind("lorentz-", 0) == 0) return catalog::lorentz_type(rs, s[8]);
    if (s.size() == 4 && s.rfind("e6-", 0) == 0) return catalog::e6_system(rs, s[3] - '0');
    throw std::invalid_argument("unknown root subset '" + s + "'");
}

namespace {

std::vector<CartanVec> parse_rows(const json& j, std::uint32_t p) {
    std::vector<CartanVec> out;
    for (const json& row : j) {
        CartanVec v;
        for (const json& x : row) v.push_back(parse_scalar(x, p));
        out.push_back(v);
    }
    return out;
}

}  // namespace

LoadedPair load_pair(const json& j) {
    LoadedPair lp;
    lp.wb = std::make_unique<WeylBasis>(build_root_system(parse_family(j.at("family").get<std::string>()),
                                                          j.at("rank").get<int>()));
    const WeylBasis& wb = *lp.wb;
    const RootSystem& rs = wb.roots();
    const std::uint32_t p = wb.p();
    lp.sigma = parse_sigma(wb, j.value("sigma", json("compact")));
    RootMask roots = parse_roots(rs, j.value("roots", json("positive")));

    std::vector<CartanVec> h0;
    if (j.contains("h0_ambient")) {
        for (const CartanVec& amb : parse_rows(j["h0_ambient"], p)) {
            Vec<Rational> re(amb.size()), im(amb.size());
            for (std::size_t t = 0; t < amb.size(); ++t) {
                if (amb[t].has_root()) throw std::invalid_argument("h0_ambient entries must lie in Q(i)");
                re[t] = amb[t].a();
                im[t] = amb[t].b();
            }
            if (!rs.in_cartan(re) || !rs.in_cartan(im)) throw std::invalid_argument("h0_ambient row is not in h");
            Vec<Rational> cr = rs.cartan_coords(re), ci = rs.cartan_coords(im);
            CartanVec v;
            for (int a = 0; a < rs.rank; ++a) v.push_back(Scalar(cr[a], ci[a], 0, 0, 0));
            h0.push_back(v);
        }
    } else if (!j.contains("h0") || j["h0"] == "full") {
        h0 = full_cartan(wb);
    } else {
        h0 = parse_rows(j["h0"], p);
    }
    lp.k = std::make_unique<RegularSubalgebra>(wb, roots, h0);
    RegularSubalgebra& k = *lp.k;
    if (j.contains("a10")) k.a10 = parse_rows(j["a10"], p);

    const int d = k.cartan_dim();
    lp.omega0 = j.contains("omega0") ? parse_matrix(j["omega0"], p) : Mat<Scalar>(d, d);
    if (lp.omega0.rows != d || lp.omega0.cols != d) throw std::invalid_argument("omega0 must be dim h0 square");
    if (j.contains("omega")) {
        lp.omega = parse_matrix(j["omega"], p);
        if (lp.omega.rows != k.dim() || lp.omega.cols != k.dim()) throw std::invalid_argument("omega must be dim k square");
        if (!is_antisymmetric(lp.omega)) throw std::invalid_argument("omega is not antisymmetric");
    } else if (j.contains("mu")) {
        lp.mu.assign(rs.size(), Scalar(0));
        for (auto& [label, v] : j["mu"].items()) lp.mu[rs.parse_label(label)] = parse_scalar(v, p);
        lp.omega = positive_family_form(k, lp.mu, lp.omega0);
    } else {
        lp.omega = extend_cartan_form(k, lp.omega0);
    }
    if (j.contains("xi")) {
        Vec<Scalar> xi;
        for (const json& x : j["xi"]) xi.push_back(parse_scalar(x, p));
        if (static_cast<int>(xi.size()) != wb.dim()) throw std::invalid_argument("xi must have dim g entries");
        lp.xi = xi;
    }
    return lp;
}

json pair_json(const RegularSubalgebra& k, const TwoForm& omega) {
    const RootSystem& rs = k.weyl().roots();
    json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["roots"] = mask_json(rs, k.roots());
    json h0 = json::array();
    for (const CartanVec& v : k.h0()) {
        json row = json::array();
        for (const Scalar& x : v) row.push_back(scalar_json(x));
        h0.push_back(row);
    }
    j["h0"] = h0;
    j["omega"] = matrix_json(omega);
    return j;
}

}  // namespace lie::io
