#include "lie/catalog.hpp"

#include <stdexcept>

namespace lie::catalog {

namespace {

IntVec eps(int n, std::initializer_list<int> plus, std::initializer_list<int> minus = {}) {
    IntVec v(n, 0);
    for (int i : plus) v[i] += 1;
    for (int i : minus) v[i] -= 1;
    return v;
}

IntVec neg(IntVec v) {
    for (int& x : v) x = -x;
    return v;
}

void add(const RootSystem& rs, RootMask& m, const IntVec& v) {
    int i = rs.index_of(v);
    if (i < 0) throw std::logic_error("catalog: not a root " + std::to_string(v.size()));
    m.set(i);
}

void require_family(const RootSystem& rs, Family f) {
    if (rs.family != f) throw std::invalid_argument("catalog: wrong family " + family_name(rs.family));
}

}  // namespace

RootMask slh_type_a(const RootSystem& rs) {
    require_family(rs, Family::A);
    int m = rs.ambient, n = m / 2;
    RootMask r;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j) add(rs, r, eps(m, {i}, {j}));
            add(rs, r, eps(m, {i}, {n + j}));
        }
    return r;
}

RootMask slh_type_b(const RootSystem& rs) {
    require_family(rs, Family::A);
    int m = rs.ambient, n = m / 2;
    RootMask r;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j) add(rs, r, eps(m, {i}, {j}));
            add(rs, r, eps(m, {n + i}, {j}));
        }
    return r;
}

LabelledSystems slh_types(const RootSystem& rs) { return {{"a", slh_type_a(rs)}, {"b", slh_type_b(rs)}}; }

RootMask lorentz_type(const RootSystem& rs, char type) {
    require_family(rs, Family::D);
    int n = rs.ambient;
    RootMask r = rs.positive_mask();
    IntVec plus = eps(n, {n - 2, n - 1}), minus = eps(n, {n - 2}, {n - 1});
    switch (type) {
        case 'a': break;
        case 'b':
            r.reset(rs.index_of(plus));
            add(rs, r, neg(minus));
            break;
        case 'c':
            r.reset(rs.index_of(minus));
            add(rs, r, neg(plus));
            break;
        default: throw std::invalid_argument("lorentz type must be a, b or c");
    }
    return r;
}

LabelledSystems lorentz_types(const RootSystem& rs) {
    return {{"a", lorentz_type(rs, 'a')}, {"b", lorentz_type(rs, 'b')}, {"c", lorentz_type(rs, 'c')}};
}

namespace {

constexpr int N6 = 6;

// The part shared by all R0^(k): +-(e_i - e_j), i<j<=3, and e_i - e_j, i<=3<j.
RootMask e6_common(const RootSystem& rs) {
    RootMask r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) add(rs, r, eps(N6, {i}, {j}));
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) add(rs, r, eps(N6, {i}, {j}));
    return r;
}

// The common part of the listed images: +-(e_i - e_j), 4<=i<j, and e_j - e_i.
RootMask e6_common_image(const RootSystem& rs) {
    RootMask r;
    for (int i = 3; i < 6; ++i)
        for (int j = 3; j < 6; ++j)
            if (i != j) add(rs, r, eps(N6, {i}, {j}));
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) add(rs, r, eps(N6, {j}, {i}));
    return r;
}

IntVec triple(int i, int j, int k) { return eps(N6, {i, j, k}); }
IntVec sigma_all() { return IntVec(N6, 1); }

// Triples of R0^(5) and R0^(6), with sign s = +1; s = -1 gives the listed image.
void e6_mixed_triples(const RootSystem& rs, RootMask& r, int s) {
    auto put = [&](const IntVec& v, int sign) { add(rs, r, sign * s > 0 ? v : neg(v)); };
    for (int i = 0; i < 4; ++i) put(triple(i, 4, 5), -1);
    for (int i = 0; i < 3; ++i) put(triple(i, 3, 5), -1);
    for (int i = 0; i < 3; ++i) put(triple(i, 3, 4), -1);
    for (int last : {5, 4, 3})
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) put(triple(i, j, last), +1);
    put(triple(0, 1, 2), +1);
}

// Positive triples with `flip` negated (all negated when neg_all, except `flip` kept positive).
void e6_triples(const RootSystem& rs, RootMask& r, bool neg_all, const IntVec* flip) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                IntVec t = triple(i, j, k);
                bool negative = neg_all;
                if (flip && t == *flip) negative = !negative;
                add(rs, r, negative ? neg(t) : t);
            }
}

}  // namespace

RootMask e6_system(const RootSystem& rs, int k) {
    require_family(rs, Family::E6);
    RootMask r = e6_common(rs);
    IntVec t456 = triple(3, 4, 5), t123 = triple(0, 1, 2);
    switch (k) {
        case 1: e6_triples(rs, r, false, nullptr); add(rs, r, sigma_all()); break;
        case 2: e6_triples(rs, r, false, &t456); add(rs, r, sigma_all()); break;
        case 3: e6_triples(rs, r, true, nullptr); add(rs, r, neg(sigma_all())); break;
        case 4: e6_triples(rs, r, true, &t123); add(rs, r, neg(sigma_all())); break;
        case 5: e6_mixed_triples(rs, r, 1); add(rs, r, sigma_all()); break;
        case 6: e6_mixed_triples(rs, r, 1); add(rs, r, neg(sigma_all())); break;
        default: throw std::invalid_argument("E6 system index must be 1..6");
    }
    return r;
}

RootMask e6_listed_image(const RootSystem& rs, int k) {
    require_family(rs, Family::E6);
    RootMask r = e6_common_image(rs);
    IntVec t456 = triple(3, 4, 5), t123 = triple(0, 1, 2);
    switch (k) {
        case 1: e6_triples(rs, r, true, nullptr); add(rs, r, neg(sigma_all())); break;
        case 2: e6_triples(rs, r, true, &t456); add(rs, r, neg(sigma_all())); break;
        case 3: e6_triples(rs, r, false, nullptr); add(rs, r, sigma_all()); break;
        case 4: e6_triples(rs, r, false, &t123); add(rs, r, sigma_all()); break;
        case 5: e6_mixed_triples(rs, r, -1); add(rs, r, neg(sigma_all())); break;
        case 6: e6_mixed_triples(rs, r, -1); add(rs, r, sigma_all()); break;
        default: throw std::invalid_argument("E6 system index must be 1..6");
    }
    return r;
}

LabelledSystems e6_systems(const RootSystem& rs) {
    LabelledSystems out;
    for (int k = 1; k <= 6; ++k) out.emplace_back("R0^(" + std::to_string(k) + ")", e6_system(rs, k));
    return out;
}

}  // namespace lie::catalog
