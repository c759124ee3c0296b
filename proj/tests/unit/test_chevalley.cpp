#include "doctest.h"
#include "lie/chevalley.hpp"
#include "oracle/matrix_oracle.hpp"

#include <random>

using namespace lie;

namespace {

double to_double(const Scalar& x) {
    REQUIRE(x.is_real());
    double r = x.p() ? std::sqrt(double(x.p())) : 0;
    return x.a().get_d() + x.c().get_d() * r;
}

oracle::Coords coords(const RootSystem& rs, int i) { return rs.roots[i]; }

void check_against_oracle(const WeylBasis& wb, const oracle::Algebra& alg) {
    const RootSystem& rs = wb.roots();
    int compared = 0;
    for (int i = 0; i < rs.size(); ++i) {
        const auto& xa = alg.root.at(coords(rs, i));
        CHECK(std::abs(alg.form(xa, alg.root.at(coords(rs, rs.neg[i]))) - 1) < 1e-12);
        for (int j = 0; j < rs.size(); ++j) {
            int k = rs.sum(i, j);
            if (k < 0) continue;
            double n = oracle::ratio(oracle::bracket(xa, alg.root.at(coords(rs, j))), alg.root.at(coords(rs, k)));
            CHECK(std::abs(n - to_double(wb.N(i, j))) < 1e-12);
            ++compared;
        }
        // [E_a, E_-a] against the coroot
        oracle::Mat h = oracle::bracket(xa, alg.root.at(coords(rs, rs.neg[i])));
        oracle::Mat expect = oracle::Mat::Zero(h.rows(), h.cols());
        const Vec<Rational>& c = wb.coroot(i);
        for (int a = 0; a < rs.rank; ++a) expect += c[a].get_d() * alg.cartan[a];
        CHECK((h - expect).norm() < 1e-12);
    }
    CHECK(compared > 0);
}

bool jacobi_holds(const WeylBasis& wb) {
    const int n = wb.dim();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                Elem ex = basis_element(wb, x), ey = basis_element(wb, y), ez = basis_element(wb, z);
                Elem s = add(add(bracket(wb, ex, bracket(wb, ey, ez)), bracket(wb, ey, bracket(wb, ez, ex))),
                             bracket(wb, ez, bracket(wb, ex, ey)));
                if (!is_zero_elem(s)) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("constants agree with the matrix oracle") {
    check_against_oracle(WeylBasis(build_root_system(Family::A, 3)), oracle::sl(4));
    check_against_oracle(WeylBasis(build_root_system(Family::A, 5)), oracle::sl(6));
    check_against_oracle(WeylBasis(build_root_system(Family::D, 3)), oracle::so(3));
    check_against_oracle(WeylBasis(build_root_system(Family::D, 4)), oracle::so(4));
}

TEST_CASE("Weyl basis axioms") {
    for (auto [f, r] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::D, 4}, {Family::E6, 6}}) {
        WeylBasis wb(build_root_system(f, r));
        const RootSystem& rs = wb.roots();
        for (int i = 0; i < rs.size(); ++i) {
            CHECK(killing(wb, root_vector(wb, i), root_vector(wb, rs.neg[i])) == Scalar(1));
            for (int j = 0; j < rs.size(); ++j) {
                CHECK(wb.N(i, j).is_real());
                CHECK(wb.N(rs.neg[i], rs.neg[j]) == -wb.N(i, j));
                CHECK(wb.N(j, i) == -wb.N(i, j));
                if (j != rs.neg[i]) CHECK(killing(wb, root_vector(wb, i), root_vector(wb, j)).is_zero());
            }
        }
    }
}

TEST_CASE("Jacobi on all basis triples") {
    CHECK(jacobi_holds(WeylBasis(build_root_system(Family::A, 3))));
    CHECK(jacobi_holds(WeylBasis(build_root_system(Family::D, 4))));
}

TEST_CASE("magnitudes and field parameters") {
    WeylBasis a3(build_root_system(Family::A, 3));
    CHECK(a3.unit_constant() == Scalar(Rational(1, 2)));  // 1/sqrt(2n), n = 2
    CHECK(a3.p() == 0);
    WeylBasis a5(build_root_system(Family::A, 5));
    CHECK(a5.unit_constant() * a5.unit_constant() == Scalar(Rational(1, 6)));
    CHECK(a5.p() == 6);
    WeylBasis d3(build_root_system(Family::D, 3));
    const RootSystem& rs = d3.roots();
    int a = rs.index_of({1, -1, 0}), b = rs.index_of({0, 1, -1});
    CHECK(d3.N(a, b) * d3.N(a, b) == Scalar(Rational(1, 4)));
    WeylBasis e6(build_root_system(Family::E6, 6));
    CHECK(e6.p() == 6);
    CHECK(e6.unit_constant() == Scalar(0, 0, Rational(1, 12), 0, 6));
}

TEST_CASE("coroot brackets") {
    // [E_e12, E_e21] = (1/2n)(E11 - E22) in sl_2n
    for (int n : {2, 3}) {
        WeylBasis wb(build_root_system(Family::A, 2 * n - 1));
        const RootSystem& rs = wb.roots();
        IntVec e12(2 * n, 0);
        e12[0] = 1;
        e12[1] = -1;
        int i = rs.index_of(e12);
        Elem h = bracket(wb, root_vector(wb, i), root_vector(wb, rs.neg[i]));
        Vec<Rational> c(rs.rank);
        for (int k = 0; k < rs.rank; ++k) c[k] = h[k].a();
        Vec<Rational> expect(2 * n, 0);
        expect[0] = Rational(1, 2 * n);
        expect[1] = Rational(-1, 2 * n);
        CHECK(rs.ambient_of(c) == expect);
    }
    // [E_(e_n-1 + e_n), E_-(..)] = (1/2(n-1))(H_n-1 + H_n)
    for (int n : {3, 4}) {
        WeylBasis wb(build_root_system(Family::D, n));
        const RootSystem& rs = wb.roots();
        IntVec g(n, 0);
        g[n - 2] = g[n - 1] = 1;
        int i = rs.index_of(g);
        Vec<Rational> expect(n, 0);
        expect[n - 2] = expect[n - 1] = Rational(1, 2 * (n - 1));
        CHECK(wb.coroot_ambient(i) == expect);
    }
}

TEST_CASE("Killing form") {
    WeylBasis e6(build_root_system(Family::E6, 6));
    Vec<Scalar> e1(6, Scalar(0));
    e1[0] = Scalar(1);
    CHECK(killing(e6, cartan_vector(e6, e1), cartan_vector(e6, e1)) == Scalar(32));

    std::mt19937 g(11);
    WeylBasis wb(build_root_system(Family::A, 3));
    std::uniform_int_distribution<int> d(-3, 3);
    auto rnd = [&] {
        Elem x = zero_element(wb);
        for (auto& v : x) v = Scalar(Rational(d(g)), Rational(d(g)), 0, 0, 0);
        return x;
    };
    for (int t = 0; t < 20; ++t) {
        Elem x = rnd(), y = rnd(), z = rnd();
        CHECK(killing(wb, bracket(wb, x, y), z) == killing(wb, x, bracket(wb, y, z)));
        CHECK(killing(wb, x, y) == killing(wb, y, x));
        CHECK(is_zero_elem(bracket(wb, x, x)));
    }
}
