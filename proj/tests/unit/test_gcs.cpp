#include "doctest.h"
#include "lie/catalog.hpp"
#include "lie/gcs.hpp"

using namespace lie;

namespace {

struct InnerSetup {
    WeylBasis wb{build_root_system(Family::A, 2)};
    Antiinvolution sigma = compact_involution(wb);
};

std::vector<Scalar> random_mu(const RootSystem& rs, std::mt19937_64& rng) {
    std::vector<Scalar> mu(rs.size());
    for (int a = 0; a < rs.size(); ++a)
        if (rs.positive(a)) mu[a] = random_scalar(rng);
    return mu;
}

void check_structure(const GeneralizedStructure& gs) {
    const int n = 2 * gs.dim_g;
    Mat<Scalar> sq = gs.J_real * gs.J_real;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(sq(i, j) == Scalar(i == j ? -1 : 0));
    Mat<Scalar> g = g_can(gs.dim_g);
    Mat<Scalar> a = gs.J.transpose() * g, b = g * gs.J;
    for (std::size_t e = 0; e < a.data.size(); ++e) CHECK((a.data[e] + b.data[e]).is_zero());
    for (const Scalar& x : gs.J_real.data) CHECK(x.is_real());
    CHECK(gs.ok());
}

}  // namespace

TEST_CASE("g_can pairs vectors with covectors") {
    Mat<Scalar> g = g_can(3);
    CHECK(g(0, 3) == Scalar(Rational(1, 2)));
    CHECK(g(3, 0) == Scalar(Rational(1, 2)));
    CHECK(g(0, 0).is_zero());
}

TEST_CASE("inner family on A2: types and structure") {
    InnerSetup st;
    std::mt19937_64 rng(3);
    const RootSystem& rs = st.wb.roots();
    for (int kc : {0, 1}) {
        InnerPair ip = inner_family_h0(st.wb, st.sigma, kc);
        RegularSubalgebra k(st.wb, rs.positive_mask(), ip.h0);
        k.a10 = ip.a10;
        TwoForm w = positive_family_form(k, random_mu(rs, rng), ip.omega0);
        AdmissibilityReport rep = is_admissible(k, w, st.sigma);
        REQUIRE(rep.admissible());
        CHECK(rep.l_dim == 2 - 2 * kc);
        CHECK(rep.l_abelian);
        GeneralizedStructure gs = build_structure(k, w, st.sigma);
        CHECK(gs.type == 3 + kc);
        CHECK(gs.type == type_from_l_dim(rs.rank, rep.l_dim, rs.size()));
        check_structure(gs);
        CHECK(check_complex_structure_conditions(k, st.sigma, rep.l_basis));
    }
}

TEST_CASE("holomorphic space obeys the completion rule") {
    InnerSetup st;
    std::mt19937_64 rng(8);
    const RootSystem& rs = st.wb.roots();
    InnerPair ip = inner_family_h0(st.wb, st.sigma, 0);
    RegularSubalgebra k(st.wb, rs.positive_mask(), ip.h0);
    TwoForm w = positive_family_form(k, random_mu(rs, rng), ip.omega0);
    std::vector<TVec> L = holomorphic_space(k, w);
    const int n = st.wb.dim();
    CHECK(static_cast<int>(L.size()) == n);
    std::vector<Elem> comp = complement_of(k);
    auto pair = [&](const TVec& v, const Elem& x) {
        Scalar s(0);
        for (int t = 0; t < n; ++t) s += v[n + t] * x[t];
        return s;
    };
    for (int i = 0; i < k.dim(); ++i) {
        for (int j = 0; j < k.dim(); ++j) CHECK(pair(L[i], k.element(j)) == w(i, j));
        for (const Elem& q : comp) CHECK(pair(L[i], q).is_zero());
    }
    for (int r = k.dim(); r < n; ++r) {
        for (int t = 0; t < n; ++t) CHECK(L[r][t].is_zero());
        for (int j = 0; j < k.dim(); ++j) CHECK(pair(L[r], k.element(j)).is_zero());
    }
}

TEST_CASE("complex-structure case gives a block J") {
    InnerSetup st;
    const RootSystem& rs = st.wb.roots();
    InnerPair ip = inner_family_h0(st.wb, st.sigma, 1);
    RegularSubalgebra k(st.wb, rs.positive_mask(), ip.h0);
    GeneralizedStructure gs = build_structure(k, zero_form(k.dim()), st.sigma);
    const int n = st.wb.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CHECK(gs.J(i, n + j).is_zero());
            CHECK(gs.J(n + i, j).is_zero());
        }
    check_structure(gs);
    CHECK(gs.type == 4);
}

TEST_CASE("unverified pairs are rejected") {
    InnerSetup st;
    RegularSubalgebra k(st.wb, st.wb.roots().positive_mask(), full_cartan(st.wb));
    CHECK_THROWS_AS(build_structure(k, zero_form(k.dim()), st.sigma), std::invalid_argument);
}

TEST_CASE("B-field normalization") {
    InnerSetup st;
    std::mt19937_64 rng(13);
    const RootSystem& rs = st.wb.roots();
    for (int kc : {0, 1}) {
        InnerPair ip = inner_family_h0(st.wb, st.sigma, kc);
        RegularSubalgebra k(st.wb, rs.positive_mask(), ip.h0);
        k.a10 = ip.a10;
        std::vector<Scalar> mu = random_mu(rs, rng);
        TwoForm w = positive_family_form(k, mu, ip.omega0);
        TwoForm w0 = extend_cartan_form(k, ip.omega0);
        Vec<Scalar> xi = normalizing_xi(k, mu);
        CHECK(covector_is_real(st.sigma, xi));

        TwoForm diff = w;
        add_scaled(diff, Scalar(-1), w0);
        CHECK(b_field_on(k, xi) == diff);
        CHECK(b_field_transform(k, w0, xi) == w);
        CHECK(b_field_transform(k, w, Vec<Scalar>(st.wb.dim(), Scalar(0))) == w);

        std::vector<Scalar> neg = mu;
        for (Scalar& x : neg) x = -x;
        TwoForm back = b_field_transform(k, w, normalizing_xi(k, neg));
        CHECK(back == w0);
        for (const Scalar& m : recover_mu(k, back)) CHECK(m.is_zero());
        CHECK(recover_mu(k, w) == mu);

        CHECK_FALSE(is_normal_form(k, w, st.sigma));
        CHECK(is_normal_form(k, back, st.sigma));
        CHECK(build_structure(k, back, st.sigma).type == build_structure(k, w, st.sigma).type);
    }
}

TEST_CASE("normal form detects a^{1,0} pairing") {
    WeylBasis wb(build_root_system(Family::A, 4));
    Antiinvolution t = compact_involution(wb);
    InnerPair ip = inner_family_h0(wb, t, 1);
    RegularSubalgebra k(wb, wb.roots().positive_mask(), ip.h0);
    k.a10 = ip.a10;
    const int d = k.cartan_dim();
    CHECK(d == 3);
    CHECK(is_normal_form(k, zero_form(k.dim()), t));
    int failing = 0;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            Mat<Scalar> w0(d, d);
            w0(a, b) = Scalar(1);
            w0(b, a) = Scalar(-1);
            bool kills = true;
            for (const auto& h : ip.a10)
                for (int c = 0; c < d; ++c) {
                    Scalar v(0);
                    for (int x = 0; x < d; ++x) v += h[x] * w0(x, c);
                    kills = kills && v.is_zero();
                }
            CHECK(is_normal_form(k, extend_cartan_form(k, w0), t) == kills);
            failing += !kills;
        }
    CHECK(failing > 0);
}

TEST_CASE("complex structure conditions") {
    InnerSetup st;
    const RootSystem& rs = st.wb.roots();
    RegularSubalgebra b(st.wb, rs.positive_mask(), {full_cartan(st.wb)[0]});
    CHECK_FALSE(check_complex_structure_conditions(b, st.sigma, {}));
    RegularSubalgebra g(st.wb, rs.all(), full_cartan(st.wb));
    std::vector<Elem> h;
    for (const CartanVec& v : full_cartan(st.wb)) h.push_back(cartan_vector(st.wb, v));
    CHECK_FALSE(check_complex_structure_conditions(g, st.sigma, real_points(h, st.sigma)));
    CHECK(gcs_type(g) == 0);
}

TEST_CASE("E6 variant 1 assembles a generalized complex structure") {
    WeylBasis wb(build_root_system(Family::E6, 6));
    Antiinvolution s = sigma_from_vogan(wb, e6_outer_diagram(false));
    RootMask m = catalog::e6_system(wb.roots(), 1);
    H0Pair hp = construct_h0_pair(wb, m, s);
    RegularSubalgebra k(wb, m, hp.h0);
    GeneralizedStructure gs = build_structure(k, e6_form(k, 1, Scalar(2), hp.omega0), s);
    CHECK(gs.ok());
    CHECK(gs.type == wb.dim() - k.dim());
}
