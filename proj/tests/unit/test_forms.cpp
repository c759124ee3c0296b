#include "doctest.h"
#include "lie/catalog.hpp"
#include "lie/forms.hpp"
#include "oracle/matrix_oracle.hpp"

using namespace lie;

namespace {

// Matrices of k = h0 + g(R0) in the oracle realization.
std::vector<oracle::Mat> oracle_basis(const RegularSubalgebra& k, const oracle::Algebra& alg) {
    const RootSystem& rs = k.weyl().roots();
    std::vector<oracle::Mat> out;
    for (const CartanVec& h : k.h0()) {
        oracle::Mat m = oracle::Mat::Zero(alg.cartan[0].rows(), alg.cartan[0].cols());
        for (int a = 0; a < rs.rank; ++a) m += h[a].a().get_d() * alg.cartan[a];
        out.push_back(m);
    }
    for (int r : k.root_list()) out.push_back(alg.root.at(rs.roots[r]));
    return out;
}

Mat<Scalar> standard_omega0(int d, const Scalar& c) {
    Mat<Scalar> w(d, d);
    for (int a = 0; a + 1 < d; a += 2) {
        w(a, a + 1) = c;
        w(a + 1, a) = -c;
    }
    return w;
}

// Family forms for unit parameters.
std::vector<TwoForm> main_family(const RegularSubalgebra& k) {
    const RootSystem& rs = k.weyl().roots();
    const int d = k.cartan_dim();
    std::vector<TwoForm> fam;
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
    return fam;
}

TwoForm random_combination(const std::vector<TwoForm>& basis, int dim, std::mt19937_64& rng) {
    TwoForm w = zero_form(dim);
    for (const TwoForm& f : basis) add_scaled(w, random_scalar(rng), f);
    return w;
}

int form_rank(const TwoForm& w) { return rank(w); }

std::vector<CartanVec> cartan_vecs(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<CartanVec> out;
    for (auto r : rows) {
        CartanVec v;
        for (int x : r) v.push_back(Scalar(x));
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("closed forms on the A2 Borel match the oracle and the family") {
    WeylBasis wb(build_root_system(Family::A, 2));
    RegularSubalgebra k(wb, wb.roots().positive_mask(), full_cartan(wb));
    ClosedForms cf = closed_two_forms(k);
    CHECK(cf.basis.size() == 4);
    CHECK(oracle::closed_form_dimension(oracle_basis(k, oracle::sl(3))) == 4);
    std::vector<TwoForm> fam = main_family(k);
    CHECK(span_dim(fam) == 4);
    CHECK(span_contains(cf.basis, fam));
    CHECK(span_contains(fam, cf.basis));
    for (const TwoForm& f : cf.basis) CHECK(is_closed(k, f));
}

TEST_CASE("A3 Borel with even-dimensional h0") {
    WeylBasis wb(build_root_system(Family::A, 3));
    for (auto h0 : {cartan_vecs({{1, 0, 0}, {0, 0, 1}}), cartan_vecs({{1, 2, 0}, {0, 1, 3}})}) {
        RegularSubalgebra k(wb, wb.roots().positive_mask(), h0);
        ClosedForms cf = closed_two_forms(k);
        CHECK(cf.basis.size() == 7);
        CHECK(oracle::closed_form_dimension(oracle_basis(k, oracle::sl(4))) == 7);
        std::vector<TwoForm> fam = main_family(k);
        CHECK(span_contains(cf.basis, fam));
        CHECK(span_contains(fam, cf.basis));
    }
}

TEST_CASE("positive_family_form special cases") {
    WeylBasis wb(build_root_system(Family::A, 2));
    const RootSystem& rs = wb.roots();
    RegularSubalgebra k(wb, rs.positive_mask(), full_cartan(wb));
    Mat<Scalar> w0 = standard_omega0(2, Scalar::i());
    CHECK(positive_family_form(k, std::vector<Scalar>(rs.size()), w0) == extend_cartan_form(k, w0));
    std::vector<Scalar> mu(rs.size());
    const int a = rs.simple[0];
    mu[a] = Scalar(3);
    TwoForm expect = extend_cartan_form(k, w0);
    add_scaled(expect, Scalar(3), wedge(root_functional(k, a), dual_covector(k, a)));
    TwoForm w = positive_family_form(k, mu, w0);
    CHECK(w == expect);
    CHECK(is_closed(k, w));
}

TEST_CASE("abelian k: every 2-form is closed") {
    for (auto [f, r] : {std::pair{Family::A, 3}, {Family::D, 4}}) {
        WeylBasis wb(build_root_system(f, r));
        RegularSubalgebra k(wb, RootMask{}, full_cartan(wb));
        CHECK(closed_two_forms(k).basis.size() == static_cast<std::size_t>(r * (r - 1) / 2));
    }
}

TEST_CASE("d of d vanishes") {
    WeylBasis a3(build_root_system(Family::A, 3));
    WeylBasis a5(build_root_system(Family::A, 5));
    WeylBasis d4(build_root_system(Family::D, 4));
    std::vector<RegularSubalgebra> ks;
    ks.emplace_back(a3, a3.roots().positive_mask(), full_cartan(a3));
    ks.emplace_back(a3, a3.roots().all(), full_cartan(a3));
    ks.emplace_back(a5, catalog::slh_type_a(a5.roots()), full_cartan(a5));
    ks.emplace_back(d4, catalog::lorentz_type(d4.roots(), 'c'), full_cartan(d4));
    for (const RegularSubalgebra& k : ks)
        for (int b = 0; b < k.dim(); ++b) {
            Covector beta(k.dim(), Scalar(0));
            beta[b] = Scalar(1);
            CHECK(is_closed(k, d_one_form(k, beta)));
        }
}

TEST_CASE("E6: d omega_Sigma = -Sigma ^ omega_Sigma on k^(1)") {
    WeylBasis wb(build_root_system(Family::E6, 6));
    const RootSystem& rs = wb.roots();
    Antiinvolution s = sigma_from_vogan(wb, e6_outer_diagram(false));
    RootMask m = catalog::e6_system(rs, 1);
    RegularSubalgebra k(wb, m, construct_h0_pair(wb, m, s).h0);
    const int sig = rs.index_of({0, 0, 0, 1, 1, 1});
    REQUIRE(sig >= 0);
    TwoForm expect = wedge(dual_covector(k, sig), root_functional(k, sig));
    CHECK(d_one_form(k, dual_covector(k, sig)) == expect);
}

TEST_CASE("semidirect conditions agree with direct closedness") {
    std::mt19937_64 rng(11);
    WeylBasis wb(build_root_system(Family::A, 5));
    const RootSystem& rs = wb.roots();
    RootMask r0 = catalog::slh_type_a(rs);
    RegularSubalgebra k(wb, r0, full_cartan(wb));
    RootMask sym = rs.symmetric_part(r0);
    std::vector<int> s, p;
    for (int b = 0; b < k.dim(); ++b) (k.is_cartan(b) || sym.test(k.root_at(b)) ? s : p).push_back(b);
    ClosedForms cf = closed_two_forms(k);
    int closed_seen = 0, open_seen = 0;
    for (int trial = 0; trial < 12; ++trial) {
        TwoForm w = random_combination(cf.basis, k.dim(), rng);
        if (trial % 2) {
            int x = static_cast<int>(rng() % k.dim()), y = static_cast<int>(rng() % k.dim());
            if (x != y) {
                w(x, y) += Scalar(1);
                w(y, x) -= Scalar(1);
            }
        }
        SemidirectReport rep = semidirect_closedness_check(k.table(), s, p, w);
        CHECK(rep.decomposition_ok);
        CHECK(rep.closed == is_closed(k, w));
        CHECK(rep.consistent());
        (rep.closed ? closed_seen : open_seen)++;
    }
    CHECK(closed_seen > 0);
    CHECK(open_seen > 0);

    SemidirectReport bad = semidirect_closedness_check(k.table(), s, std::vector<int>(p.begin() + 1, p.end()), cf.basis[0]);
    CHECK_FALSE(bad.decomposition_ok);
}

TEST_CASE("ideal complementary to l: admissible forms satisfy the mixed-term conditions") {
    std::mt19937_64 rng(5);
    WeylBasis wb(build_root_system(Family::A, 2));
    const RootSystem& rs = wb.roots();
    Antiinvolution t = compact_involution(wb);
    RegularSubalgebra k(wb, rs.positive_mask(), full_cartan(wb));
    std::vector<int> s{0, 1}, p;
    for (int b = 2; b < k.dim(); ++b) p.push_back(b);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Scalar> mu(rs.size());
        for (int a : k.root_list()) mu[a] = random_scalar(rng);
        TwoForm w = positive_family_form(k, mu, standard_omega0(2, Scalar::i() * random_scalar(rng, 5, false)));
        if (!is_admissible(k, w, t).admissible()) continue;
        SemidirectReport rep = semidirect_closedness_check(k.table(), s, p, w);
        CHECK(rep.decomposition_ok);
        CHECK(rep.conditions());
        CHECK(rep.closed);
    }
}

TEST_CASE("reductive nonabelian k carries no nondegenerate closed form") {
    std::mt19937_64 rng(2);
    for (auto [f, r] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::D, 3}}) {
        WeylBasis wb(build_root_system(f, r));
        const RootSystem& rs = wb.roots();
        std::vector<RootMask> choices{rs.all()};
        const int a = rs.simple[0];
        RootMask pair;
        pair.set(a);
        pair.set(rs.neg[a]);
        choices.push_back(pair);
        for (int b = 0; b < rs.size(); ++b)
            if (b != a && b != rs.neg[a] && rs.sum(a, b) < 0 && rs.sum(a, rs.neg[b]) < 0) {
                RootMask two = pair;
                two.set(b);
                two.set(rs.neg[b]);
                choices.push_back(two);
                break;
            }
        for (const RootMask& m : choices) {
            RegularSubalgebra k(wb, m, full_cartan(wb));
            ClosedForms cf = closed_two_forms(k);
            for (int trial = 0; trial < 3; ++trial) CHECK(form_rank(random_combination(cf.basis, k.dim(), rng)) < k.dim());
        }
    }
    WeylBasis wb(build_root_system(Family::A, 2));
    RegularSubalgebra h(wb, RootMask{}, full_cartan(wb));
    CHECK(form_rank(closed_two_forms(h).basis[0]) == 2);
}

TEST_CASE("sl_n(H) family on h + g(type a), n = 3") {
    std::mt19937_64 rng(17);
    WeylBasis wb(build_root_system(Family::A, 5));
    const RootSystem& rs = wb.roots();
    RegularSubalgebra k(wb, catalog::slh_type_a(rs), full_cartan(wb));
    const int n = 3;
    ClosedForms cf = closed_two_forms(k);
    CHECK(cf.basis.size() == 20);
    CHECK(oracle::closed_form_dimension(oracle_basis(k, oracle::sl(6))) == 20);

    SlnhParams zero;
    zero.omega0 = Mat<Scalar>(5, 5);
    CHECK(sln_h_form(k, zero) == zero_form(k.dim()));

    SlnhParams lam = zero;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j) lam.lambda[{i, j}] = random_scalar(rng);
            lam.lambda_prime[{i, j}] = random_scalar(rng);
        }
    TwoForm wl = sln_h_form(k, lam);
    CHECK(is_closed(k, wl));
    CHECK(span_contains(cf.basis, {wl}));

    SlnhParams single = zero;
    single.lambda_prime[{0, 1}] = Scalar(1);
    CHECK(is_closed(k, sln_h_form(k, single)));

    // eta_ij - eta_ji must be a difference f_i - f_j
    SlnhParams grad = zero;
    const int f[3] = {2, -1, 5};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) grad.eta[{i, j}] = Scalar(f[i]);
    CHECK(is_closed(k, sln_h_form(k, grad)));

    SlnhParams single_eta = zero;
    single_eta.eta[{0, 1}] = Scalar(1);
    CHECK_FALSE(is_closed(k, sln_h_form(k, single_eta)));

    RootMask sym = rs.symmetric_part(k.roots());
    std::vector<int> s, p;
    for (int b = 0; b < k.dim(); ++b) (k.is_cartan(b) || sym.test(k.root_at(b)) ? s : p).push_back(b);
    SemidirectReport rep = semidirect_closedness_check(k.table(), s, p, wl);
    CHECK(rep.decomposition_ok);
    CHECK(rep.conditions());
}

TEST_CASE("sl_2(H): the extra hypothesis is checked") {
    WeylBasis wb(build_root_system(Family::A, 3));
    RootMask a = catalog::slh_type_a(wb.roots());
    RegularSubalgebra full(wb, a, full_cartan(wb));
    CHECK(slnh_precondition_failures(full, Mat<Scalar>(3, 3)).empty());
    RegularSubalgebra small(wb, a, cartan_vecs({{1, 0, 0}}));
    CHECK_FALSE(slnh_precondition_failures(small, Mat<Scalar>(1, 1)).empty());
    Mat<Scalar> bad(3, 3);
    bad(0, 1) = Scalar(1);
    bad(1, 0) = Scalar(-1);
    SlnhParams p;
    p.omega0 = bad;
    CHECK_THROWS(sln_h_form(full, p));
}

TEST_CASE("so(2n-1,1) family on h + g(type c)") {
    std::mt19937_64 rng(23);
    for (int n : {3, 4}) {
        WeylBasis wb(build_root_system(Family::D, n));
        const RootSystem& rs = wb.roots();
        RegularSubalgebra k(wb, catalog::lorentz_type(rs, 'c'), full_cartan(wb));
        CHECK(lorentz_kernel_failures(k).empty());
        LorentzParams p;
        p.omega0 = Mat<Scalar>(n, n);
        CHECK(so_lorentz_form(k, p) == zero_form(k.dim()));
        p.a = random_scalar(rng);
        p.b = random_scalar(rng);
        p.c = random_scalar(rng);
        CHECK(is_closed(k, so_lorentz_form(k, p)));
        for (int a : lorentz_r0_prime(rs)) p.c_root[a] = random_scalar(rng);
        TwoForm w = so_lorentz_form(k, p);
        CHECK(is_closed(k, w));
        if (n == 3) {
            ClosedForms cf = closed_two_forms(k);
            CHECK(cf.basis.size() == 8);
            CHECK(oracle::closed_form_dimension(oracle_basis(k, oracle::so(3))) == 8);
            CHECK(span_contains(cf.basis, {w}));
            // a, b, c, the c_alpha and one omega0 parameter
            CHECK(3 + lorentz_r0_prime(rs).size() + 1 == 8);
        }
    }
}

TEST_CASE("E6 forms are closed and admissible") {
    std::mt19937_64 rng(29);
    WeylBasis wb(build_root_system(Family::E6, 6));
    const RootSystem& rs = wb.roots();
    Antiinvolution s = sigma_from_vogan(wb, e6_outer_diagram(false));
    for (int v = 1; v <= 6; ++v) {
        RootMask m = catalog::e6_system(rs, v);
        H0Pair hp = construct_h0_pair(wb, m, s);
        CHECK(hp.transversal);
        CHECK(hp.l_even);
        RegularSubalgebra k(wb, m, hp.h0);
        CHECK(e6_form(k, v, Scalar(0), Mat<Scalar>(k.cartan_dim(), k.cartan_dim())) == zero_form(k.dim()));
        TwoForm w = e6_form(k, v, random_scalar(rng), hp.omega0);
        CHECK(is_closed(k, w));
        AdmissibilityReport rep = is_admissible(k, w, s);
        CHECK(rep.admissible());
        CHECK(rep.l_abelian);
        CHECK(rep.l_dim % 2 == 0);
    }
}

TEST_CASE("construct_h0_pair") {
    WeylBasis a2(build_root_system(Family::A, 2));
    H0Pair c = construct_h0_pair(a2, a2.roots().positive_mask(), compact_involution(a2));
    CHECK(c.S.empty());
    CHECK(c.h0.size() == 2);
    RegularSubalgebra k(a2, a2.roots().positive_mask(), c.h0);
    CHECK(is_admissible(k, extend_cartan_form(k, c.omega0), compact_involution(a2)).admissible());

    WeylBasis a3(build_root_system(Family::A, 3));
    Antiinvolution s = sigma_sl_quaternionic(a3);
    H0Pair q = construct_h0_pair(a3, catalog::slh_type_a(a3.roots()), s);
    CHECK(q.transversal);
    CHECK(q.S.size() == 1);
    CHECK_FALSE(q.l_even);
    RegularSubalgebra kq(a3, catalog::slh_type_a(a3.roots()), q.h0);
    AdmissibilityReport rep = is_admissible(kq, extend_cartan_form(kq, q.omega0), s);
    CHECK(rep.l_dim % 2 == 1);
    CHECK_FALSE(rep.admissible());
}

TEST_CASE("admissibility verdicts") {
    WeylBasis wb(build_root_system(Family::A, 2));
    Antiinvolution t = compact_involution(wb);
    RegularSubalgebra k(wb, wb.roots().positive_mask(), full_cartan(wb));
    AdmissibilityReport good = is_admissible(k, extend_cartan_form(k, standard_omega0(2, Scalar::i())), t);
    CHECK(good.admissible());
    CHECK(good.l_dim == 2);
    CHECK(good.sigma_positive);
    AdmissibilityReport zero = is_admissible(k, zero_form(k.dim()), t);
    CHECK(zero.closed);
    CHECK_FALSE(zero.nondegenerate);
    RegularSubalgebra b(wb, wb.roots().positive_mask(), {full_cartan(wb)[0]});
    CHECK_FALSE(is_admissible(b, zero_form(b.dim()), t).spanning);
}
