#include "doctest.h"
#include "lie/catalog.hpp"

#include <algorithm>
#include <functional>

using namespace lie;

namespace {

// All subsets choosing one root from each sigma-orbit pair, filtered by closure with plain integer sums.
std::vector<RootMask> brute_force(const RootSystem& rs, const Antiinvolution& s) {
    std::vector<int> reps;
    for (int i = 0; i < rs.size(); ++i)
        if (i < s.s(i)) reps.push_back(i);
    auto closed = [&](const RootMask& m) {
        std::vector<int> in = m.indices();
        for (int a : in)
            for (int b : in) {
                IntVec v = rs.roots[a];
                for (std::size_t k = 0; k < v.size(); ++k) v[k] += rs.roots[b][k];
                int c = rs.index_of(v);
                if (c >= 0 && !m.test(c)) return false;
            }
        return true;
    };
    std::vector<RootMask> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << reps.size()); ++bits) {
        RootMask m;
        for (std::size_t k = 0; k < reps.size(); ++k) m.set((bits >> k) & 1 ? s.s(reps[k]) : reps[k]);
        if (closed(m)) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("predicates on trivial subsets") {
    WeylBasis wb(build_root_system(Family::A, 3));
    const RootSystem& rs = wb.roots();
    Antiinvolution t = compact_involution(wb);
    CHECK(is_sigma_positive(rs, rs.positive_mask(), t));
    CHECK(is_sigma_parabolic(rs, rs.all(), t));
    CHECK_FALSE(is_sigma_positive(rs, rs.all(), t));
    CHECK_FALSE(is_sigma_parabolic(rs, RootMask{}, t));
}

TEST_CASE("inner sigma: sigma-positive systems are the positive systems") {
    for (auto [f, r] : {std::pair{Family::A, 3}, {Family::D, 4}}) {
        WeylBasis wb(build_root_system(f, r));
        const RootSystem& rs = wb.roots();
        Antiinvolution t = compact_involution(wb);
        CHECK(sigma_commuting_weyl(rs, t).size() == weyl_order(f, r));
        Enumeration e = enumerate_sigma_positive(rs, t);
        CHECK(e.systems.size() == weyl_order(f, r));
        std::vector<RootMask> images;
        for (const Perm& w : weyl_group(rs)) images.push_back(rs.apply(w, rs.positive_mask()));
        std::sort(images.begin(), images.end());
        CHECK(images == e.systems);
        Classification c = classify_sigma_positive(rs, t);
        CHECK(c.classes.size() == 1);
    }
}

TEST_CASE("serial and parallel enumeration agree") {
    WeylBasis wb(build_root_system(Family::D, 4));
    Antiinvolution s = sigma_so_lorentz(wb);
    EnumerationOptions serial;
    serial.parallel = false;
    CHECK(enumerate_sigma_positive(wb.roots(), s, serial).systems ==
          enumerate_sigma_positive(wb.roots(), s).systems);
}

TEST_CASE("fixed root means no sigma-positive system") {
    WeylBasis wb(build_root_system(Family::A, 3));
    VoganDiagram d{{0, 1, 2}, {1}};
    Antiinvolution s = sigma_from_vogan(wb, d);
    // compact imaginary roots are sent to minus themselves; build a fixed one via the Lorentz form
    WeylBasis wd(build_root_system(Family::D, 3));
    Antiinvolution l = sigma_so_lorentz(wd);
    bool fixes = false;
    for (int i = 0; i < wd.roots().size(); ++i) fixes = fixes || l.s(i) == i;
    Enumeration e = enumerate_sigma_positive(wd.roots(), l);
    CHECK(e.sigma_fixes_a_root == fixes);
    if (fixes) CHECK(e.systems.empty());
    CHECK_FALSE(enumerate_sigma_positive(wb.roots(), s).sigma_fixes_a_root);
}

TEST_CASE("equivalence witnesses") {
    WeylBasis wb(build_root_system(Family::A, 3));
    const RootSystem& rs = wb.roots();
    Antiinvolution s = sigma_sl_quaternionic(wb);
    Equivalence eq(rs, s);
    CHECK(eq.weyl().size() < weyl_order(Family::A, 3));
    RootMask a = catalog::slh_type_a(rs);
    auto id = eq.equivalent(a, a);
    REQUIRE(id);
    CHECK(eq.apply(*id, a) == a);
    RootMask t = rs.negate(s.apply(a));
    auto w = eq.equivalent(a, t);
    REQUIRE(w);
    CHECK(eq.apply(*w, a) == t);
}

TEST_CASE("search agrees with brute force") {
    for (int r : {3, 5}) {
        WeylBasis wb(build_root_system(Family::A, r));
        Antiinvolution s = sigma_sl_quaternionic(wb);
        CHECK(enumerate_sigma_positive(wb.roots(), s).systems == brute_force(wb.roots(), s));
    }
    for (int n : {3, 4}) {
        WeylBasis wb(build_root_system(Family::D, n));
        Antiinvolution s = sigma_so_lorentz(wb);
        CHECK(enumerate_sigma_positive(wb.roots(), s).systems == brute_force(wb.roots(), s));
    }
}

TEST_CASE("quaternionic classification") {
    WeylBasis wb(build_root_system(Family::A, 3));
    const RootSystem& rs = wb.roots();
    Antiinvolution s = sigma_sl_quaternionic(wb);
    LabelledSystems refs = catalog::slh_types(rs);
    for (auto& [name, m] : refs) CHECK(is_sigma_positive(rs, m, s));
    Classification c = classify_sigma_positive(rs, s, refs);
    CHECK(c.orbits_consistent);
    CHECK(c.all_rechecked);
    CHECK(c.enumeration.systems.size() == 16);
    REQUIRE(c.classes.size() == 2);
    // b = -a, so both types land in one class
    CHECK(rs.negate(refs[0].second) == refs[1].second);
    // the positive system of the order e_1' > e_2' > e_2 > e_1 is sigma-positive and of neither type
    std::vector<int> order{2, 3, 1, 0};
    RootMask borel;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) {
            IntVec v(4, 0);
            v[order[x]] = 1;
            v[order[y]] = -1;
            borel.set(rs.index_of(v));
        }
    CHECK(is_sigma_positive(rs, borel, s));
    Equivalence eq(rs, s);
    CHECK_FALSE(eq.equivalent(borel, refs[0].second));
    CHECK_FALSE(eq.equivalent(borel, refs[1].second));

    WeylBasis w5(build_root_system(Family::A, 5));
    Classification c5 = classify_sigma_positive(w5.roots(), sigma_sl_quaternionic(w5), catalog::slh_types(w5.roots()));
    CHECK(c5.enumeration.systems.size() == 160);
    CHECK(c5.classes.size() == 4);
}

TEST_CASE("Lorentz classification") {
    for (int n : {3, 4}) {
        WeylBasis wb(build_root_system(Family::D, n));
        const RootSystem& rs = wb.roots();
        Antiinvolution s = sigma_so_lorentz(wb);
        LabelledSystems refs = catalog::lorentz_types(rs);
        for (auto& [name, m] : refs) CHECK(is_sigma_positive(rs, m, s));
        Classification c = classify_sigma_positive(rs, s, refs);
        CHECK(c.orbits_consistent);
        CHECK(c.all_rechecked);
        for (const SigmaClass& cls : c.classes) CHECK_FALSE(cls.labels.empty());
    }
}

TEST_CASE("classification is idempotent") {
    WeylBasis wb(build_root_system(Family::D, 4));
    const RootSystem& rs = wb.roots();
    Antiinvolution s = sigma_so_lorentz(wb);
    Classification c = classify_sigma_positive(rs, s);
    Equivalence eq(rs, s);
    for (const SigmaClass& cls : c.classes) CHECK(eq.canonical(cls.representative) == cls.representative);
}

TEST_CASE("E6 listed systems and their images") {
    WeylBasis wb(build_root_system(Family::E6, 6));
    const RootSystem& rs = wb.roots();
    for (bool painted : {false, true}) {
        Antiinvolution s = sigma_from_vogan(wb, e6_outer_diagram(painted));
        for (int k = 1; k <= 6; ++k) {
            RootMask m = catalog::e6_system(rs, k);
            CHECK(m.count() == 36);
            CHECK(is_sigma_positive(rs, m, s));
            CHECK(s.apply(m) == catalog::e6_listed_image(rs, k));
        }
    }
}

TEST_CASE("E6 exhaustive search") {
    WeylBasis wb(build_root_system(Family::E6, 6));
    const RootSystem& rs = wb.roots();
    Antiinvolution s = sigma_from_vogan(wb, e6_outer_diagram(false));
    Classification c = classify_sigma_positive(rs, s, catalog::e6_systems(rs));
    CHECK(c.enumeration.orbit_pairs == 36);
    CHECK(c.orbits_consistent);
    CHECK(c.all_rechecked);
    CHECK(c.enumeration.systems.size() == 3840);
    CHECK(c.classes.size() == 4);
    int labelled = 0;
    for (const SigmaClass& cls : c.classes) labelled += !cls.labels.empty();
    CHECK(labelled == 1);
    // sigma = -theta with theta preserving R+, so R+ is sigma-positive and lies outside the listed class
    CHECK(is_sigma_positive(rs, rs.positive_mask(), s));
    Equivalence eq(rs, s);
    CHECK_FALSE(eq.equivalent(rs.positive_mask(), catalog::e6_system(rs, 1)));
}
