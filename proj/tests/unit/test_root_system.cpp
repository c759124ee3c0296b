#include "doctest.h"
#include "lie/root_system.hpp"

using namespace lie;

TEST_CASE("root counts") {
    CHECK(build_root_system(Family::A, 3).size() == 12);
    CHECK(build_root_system(Family::A, 5).size() == 30);
    CHECK(build_root_system(Family::D, 4).size() == 24);
    CHECK(build_root_system(Family::D, 3).size() == 12);
    // 30 roots e_i - e_j, 40 of the form +-(e_i + e_j + e_k), 2 of the form +-(e_1 + ... + e_6)
    CHECK(build_root_system(Family::E6, 6).size() == 72);
    CHECK_THROWS(build_root_system(Family::D, 2));
    CHECK_THROWS(build_root_system(Family::E6, 5));
}

TEST_CASE("order, negation and positivity") {
    for (auto [f, r] : {std::pair{Family::A, 3}, {Family::D, 4}, {Family::E6, 6}}) {
        RootSystem rs = build_root_system(f, r);
        for (int i = 0; i + 1 < rs.size(); ++i) CHECK(rs.roots[i] < rs.roots[i + 1]);
        int pos = 0;
        for (int i = 0; i < rs.size(); ++i) {
            CHECK(rs.neg[i] >= 0);
            CHECK(rs.neg[rs.neg[i]] == i);
            CHECK(rs.height[i] == -rs.height[rs.neg[i]]);
            CHECK(rs.inner(i, i) > 0);
            CHECK(rs.index_of(rs.roots[i]) == i);
            pos += rs.positive(i);
        }
        CHECK(2 * pos == rs.size());
        CHECK(static_cast<int>(rs.simple.size()) == r);
    }
}

TEST_CASE("E6 invariant form") {
    RootSystem rs = build_root_system(Family::E6, 6);
    CHECK(rs.cartan_gram(0, 0) == 32);
    CHECK(rs.cartan_gram(0, 1) == 8);
    // dual Gram inverts the Cartan Gram
    CHECK(rs.dual_gram * rs.cartan_gram_ambient == Mat<Rational>::identity(6));
    for (int i = 0; i < rs.size(); ++i) CHECK(rs.inner(i, i) == Rational(1, 12));
    // triple node a3 meets a2, a4 and a6
    CHECK(rs.inner(rs.simple[2], rs.simple[5]) != 0);
    CHECK(rs.inner(rs.simple[4], rs.simple[5]) == 0);
}

TEST_CASE("closed subsets and symmetric parts") {
    RootSystem rs = build_root_system(Family::A, 2);
    CHECK(rs.is_closed(rs.positive_mask()));
    RootMask s;
    s.set(rs.simple[0]);
    s.set(rs.simple[1]);
    CHECK_FALSE(rs.is_closed(s));
    CHECK(rs.symmetric_part(rs.all()) == rs.all());
    CHECK(rs.symmetric_part(rs.positive_mask()).empty());
    CHECK(rs.asymmetric_part(rs.positive_mask()) == rs.positive_mask());

    RootSystem d = build_root_system(Family::D, 4);
    RootMask r0 = d.positive_mask();
    r0.reset(d.index_of({0, 0, 1, -1}));
    r0.set(d.index_of({0, 0, -1, -1}));
    CHECK(d.is_closed(r0));
    RootMask sym = d.symmetric_part(r0);
    CHECK(sym.count() == 2);
    CHECK(sym.test(d.index_of({0, 0, 1, 1})));
    CHECK(d.is_closed(sym));
}

TEST_CASE("Weyl group") {
    CHECK(weyl_group(build_root_system(Family::A, 2)).size() == 6);
    CHECK(weyl_group(build_root_system(Family::A, 3)).size() == 24);
    CHECK(weyl_group(build_root_system(Family::D, 4)).size() == 192);
    RootSystem e6 = build_root_system(Family::E6, 6);
    auto w = weyl_group(e6);
    CHECK(w.size() == 51840);
    CHECK(weyl_order(Family::E6, 6) == 51840);
    CHECK_THROWS(weyl_group(e6, 1000));
    // reflections preserve the inner product
    for (int k = 0; k < 6; ++k) {
        Perm s = e6.reflection(k);
        for (int i = 0; i < e6.size(); i += 5)
            for (int j = 0; j < e6.size(); j += 7) CHECK(e6.inner(s[i], s[j]) == e6.inner(i, j));
        CHECK(compose(s, s) == w[0]);
    }
}

TEST_CASE("labels") {
    RootSystem rs = build_root_system(Family::A, 2);
    int i = rs.parse_label("(1,-1,0)");
    CHECK(rs.label(i) == "(1,-1,0)");
    CHECK_THROWS(rs.parse_label("(1,1,0)"));
}

TEST_CASE("Cartan coordinates") {
    RootSystem rs = build_root_system(Family::A, 3);
    Vec<Rational> v{1, -1, 0, 0};
    CHECK(rs.in_cartan(v));
    CHECK(rs.cartan_coords(v) == Vec<Rational>{1, 0, 0});
    CHECK_FALSE(rs.in_cartan(Vec<Rational>{1, 0, 0, 0}));
    // <h_1, h_1> = m tr((E11 - E22)^2) = 8 for m = 4
    CHECK(rs.cartan_gram(0, 0) == 8);
}
