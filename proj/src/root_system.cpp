#include "lie/root_system.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

namespace lie {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::D: return "D";
        case Family::E6: return "E6";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "D") return Family::D;
    if (s == "E6" || s == "E") return Family::E6;
    throw std::invalid_argument("unknown family '" + s + "'");
}

namespace {

std::string coords_key(const IntVec& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + ")";
}

IntVec unit(int n, int i, int sign = 1) {
    IntVec v(n, 0);
    v[i] = sign;
    return v;
}

IntVec add(IntVec a, const IntVec& b, int scale = 1) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += scale * b[k];
    return a;
}

}  // namespace

RootSystem build_root_system(Family f, int rank) {
    RootSystem rs;
    rs.family = f;
    rs.rank = rank;
    std::vector<IntVec> simple;
    if (f == Family::A) {
        if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
        if (rank > 10) throw std::invalid_argument("A_n supported for n <= 10");
        const int m = rank + 1;
        rs.ambient = m;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) rs.roots.push_back(add(unit(m, i), unit(m, j), -1));
        for (int i = 0; i + 1 < m; ++i) simple.push_back(add(unit(m, i), unit(m, i + 1), -1));
        rs.dual_gram = Mat<Rational>::identity(m);
        for (auto& x : rs.dual_gram.data) x /= m;
        rs.cartan_gram_ambient = Mat<Rational>::identity(m);
        for (auto& x : rs.cartan_gram_ambient.data) x *= m;
        for (int a = 0; a < rank; ++a) rs.cartan_basis.push_back(add(unit(m, a), unit(m, a + 1), -1));
        rs.lambda = m;
    } else if (f == Family::D) {
        if (rank < 3) throw std::invalid_argument("D_n needs n >= 3");
        if (rank > 8) throw std::invalid_argument("D_n supported for n <= 8");
        const int n = rank;
        rs.ambient = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) rs.roots.push_back(add(unit(n, i, si), unit(n, j, sj)));
        for (int i = 0; i + 1 < n; ++i) simple.push_back(add(unit(n, i), unit(n, i + 1), -1));
        simple.push_back(add(unit(n, n - 2), unit(n, n - 1)));
        const int lam = 2 * (n - 1);
        rs.dual_gram = Mat<Rational>::identity(n);
        for (auto& x : rs.dual_gram.data) x /= lam;
        rs.cartan_gram_ambient = Mat<Rational>::identity(n);
        for (auto& x : rs.cartan_gram_ambient.data) x *= lam;
        for (int a = 0; a < n; ++a) rs.cartan_basis.push_back(unit(n, a));
        rs.lambda = lam;
    } else {
        if (rank != 6) throw std::invalid_argument("E6 has rank 6");
        const int n = 6;
        rs.ambient = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) rs.roots.push_back(add(unit(n, i), unit(n, j), -1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    IntVec v = add(add(unit(n, i), unit(n, j)), unit(n, k));
                    rs.roots.push_back(v);
                    rs.roots.push_back(add(IntVec(n, 0), v, -1));
                }
        rs.roots.push_back(IntVec(n, 1));
        rs.roots.push_back(IntVec(n, -1));
        for (int i = 0; i + 1 < 6; ++i) simple.push_back(add(unit(n, i), unit(n, i + 1), -1));
        simple.push_back(IntVec{0, 0, 0, 1, 1, 1});
        rs.dual_gram = Mat<Rational>(n, n);
        rs.cartan_gram_ambient = Mat<Rational>(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                rs.dual_gram(i, j) = Rational((i == j ? 9 : 0) - 1, 216);
                rs.dual_gram(i, j).canonicalize();
                rs.cartan_gram_ambient(i, j) = (i == j ? 32 : 8);
            }
        for (int a = 0; a < n; ++a) rs.cartan_basis.push_back(unit(n, a));
        rs.lambda = 24;
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    rs.finish();
    for (const IntVec& s : simple) rs.simple.push_back(rs.index_of(s));
    // simple-root coordinates
    const int R = rs.size();
    Mat<Rational> S(rs.ambient, rank);
    for (int k = 0; k < rank; ++k)
        for (int t = 0; t < rs.ambient; ++t) S(t, k) = rs.roots[rs.simple[k]][t];
    rs.simple_coords.assign(R, IntVec(rank, 0));
    rs.height.assign(R, 0);
    for (int r = 0; r < R; ++r) {
        Vec<Rational> b(rs.ambient);
        for (int t = 0; t < rs.ambient; ++t) b[t] = rs.roots[r][t];
        auto x = solve(S, b);
        if (!x) throw std::logic_error("root not in the span of simple roots");
        int sign = 0;
        for (int k = 0; k < rank; ++k) {
            if ((*x)[k].get_den() != 1) throw std::logic_error("non-integral simple coordinates");
            int c = static_cast<int>((*x)[k].get_num().get_si());
            rs.simple_coords[r][k] = c;
            rs.height[r] += c;
            if (c != 0) {
                int s = c > 0 ? 1 : -1;
                if (sign != 0 && s != sign) throw std::logic_error("mixed-sign simple coordinates");
                sign = s;
            }
        }
    }
    return rs;
}

void RootSystem::finish() {
    const int R = size();
    for (int i = 0; i < R; ++i) lookup_[coords_key(roots[i])] = i;
    neg.assign(R, -1);
    for (int i = 0; i < R; ++i) neg[i] = index_of(add(IntVec(ambient, 0), roots[i], -1));
    sum_.assign(static_cast<std::size_t>(R) * R, -1);
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < R; ++j) sum_[static_cast<std::size_t>(i) * R + j] = index_of(add(roots[i], roots[j]));
    on_cartan_.assign(static_cast<std::size_t>(R) * rank, 0);
    for (int i = 0; i < R; ++i)
        for (int a = 0; a < rank; ++a) {
            int v = 0;
            for (int t = 0; t < ambient; ++t) v += roots[i][t] * cartan_basis[a][t];
            on_cartan_[static_cast<std::size_t>(i) * rank + a] = v;
        }
    Mat<Rational> B(ambient, rank);
    for (int a = 0; a < rank; ++a)
        for (int t = 0; t < ambient; ++t) B(t, a) = cartan_basis[a][t];
    Mat<Rational> Bt = B.transpose();
    cartan_left_inverse_ = *inverse(Bt * B) * Bt;
    cartan_gram = Bt * cartan_gram_ambient * B;
}

int RootSystem::index_of(const IntVec& coords) const {
    auto it = lookup_.find(coords_key(coords));
    return it == lookup_.end() ? -1 : it->second;
}

Rational RootSystem::inner(int i, int j) const {
    Rational s = 0;
    for (int x = 0; x < ambient; ++x)
        for (int y = 0; y < ambient; ++y)
            if (roots[i][x] && roots[j][y]) s += roots[i][x] * dual_gram(x, y) * roots[j][y];
    return s;
}

Vec<Rational> RootSystem::cartan_coords(const Vec<Rational>& v) const { return cartan_left_inverse_ * v; }

Vec<Rational> RootSystem::ambient_of(const Vec<Rational>& c) const {
    Vec<Rational> v(ambient, Rational(0));
    for (int a = 0; a < rank; ++a)
        for (int t = 0; t < ambient; ++t) v[t] += c[a] * cartan_basis[a][t];
    return v;
}

bool RootSystem::in_cartan(const Vec<Rational>& v) const { return ambient_of(cartan_coords(v)) == v; }

RootMask RootSystem::all() const {
    RootMask m;
    for (int i = 0; i < size(); ++i) m.set(i);
    return m;
}

RootMask RootSystem::positive_mask() const {
    RootMask m;
    for (int i = 0; i < size(); ++i)
        if (positive(i)) m.set(i);
    return m;
}

RootMask RootSystem::mask_of(const std::vector<IntVec>& coords) const {
    RootMask m;
    for (const IntVec& c : coords) {
        int i = index_of(c);
        if (i < 0) throw std::invalid_argument("not a root: " + coords_key(c));
        m.set(i);
    }
    return m;
}

std::string RootSystem::label(int i) const { return coords_key(roots[i]); }

int RootSystem::parse_label(const std::string& s) const {
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '[' && ch != ']' && ch != '(' && ch != ')') t += ch;
    IntVec v;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
    if (static_cast<int>(v.size()) != ambient) throw std::invalid_argument("root '" + s + "' has wrong length");
    int i = index_of(v);
    if (i < 0) throw std::invalid_argument("not a root: " + s);
    return i;
}

bool RootSystem::is_closed(const RootMask& s) const {
    bool ok = true;
    s.for_each([&](int i) {
        if (!ok) return;
        s.for_each([&](int j) {
            int k = sum(i, j);
            if (k >= 0 && !s.test(k)) ok = false;
        });
    });
    return ok;
}

RootMask RootSystem::negate(const RootMask& s) const {
    RootMask out;
    s.for_each([&](int i) { out.set(neg[i]); });
    return out;
}

RootMask RootSystem::symmetric_part(const RootMask& s) const { return s & negate(s); }

RootMask RootSystem::asymmetric_part(const RootMask& s) const { return s.minus(symmetric_part(s)); }

RootMask RootSystem::apply(const Perm& perm, const RootMask& s) const {
    RootMask out;
    s.for_each([&](int i) { out.set(perm[i]); });
    return out;
}

Perm RootSystem::reflection(int k) const {
    const int a = simple[k];
    const Rational aa = inner(a, a);
    Perm p(size());
    for (int b = 0; b < size(); ++b) {
        Rational c = 2 * inner(b, a) / aa;
        if (c.get_den() != 1) throw std::logic_error("non-integral Cartan integer");
        int ci = static_cast<int>(c.get_num().get_si());
        int img = index_of(add(roots[b], roots[a], -ci));
        if (img < 0) throw std::logic_error("reflection leaves the root system");
        p[b] = static_cast<std::uint8_t>(img);
    }
    return p;
}

std::uint64_t weyl_order(Family f, int rank) {
    auto fact = [](int n) {
        std::uint64_t r = 1;
        for (int k = 2; k <= n; ++k) r *= k;
        return r;
    };
    switch (f) {
        case Family::A: return fact(rank + 1);
        case Family::D: return (std::uint64_t(1) << (rank - 1)) * fact(rank);
        case Family::E6: return 51840;
    }
    return 0;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

std::vector<Perm> weyl_group(const RootSystem& rs, std::uint64_t bound) {
    if (weyl_order(rs.family, rs.rank) > bound)
        throw std::length_error("Weyl group order " + std::to_string(weyl_order(rs.family, rs.rank)) +
                                " exceeds bound " + std::to_string(bound));
    std::vector<Perm> gens;
    for (int k = 0; k < rs.rank; ++k) gens.push_back(rs.reflection(k));
    auto key = [](const Perm& p) { return std::string(p.begin(), p.end()); };
    Perm id(rs.size());
    for (int i = 0; i < rs.size(); ++i) id[i] = static_cast<std::uint8_t>(i);
    std::vector<Perm> out{id};
    std::unordered_set<std::string> seen{key(id)};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const Perm& g : gens) {
            Perm next = compose(g, out[head]);
            if (seen.insert(key(next)).second) out.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace lie
