#include "lie/chevalley.hpp"

#include "lie/matrix_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lie {

int cocycle(const RootSystem& rs, int i, int j) {
    const IntVec& a = rs.simple_coords[i];
    const IntVec& b = rs.simple_coords[j];
    long e = 0;
    for (int k = 0; k < rs.rank; ++k) e += static_cast<long>(a[k]) * b[k];
    for (int k = 0; k < rs.rank; ++k)
        for (int l = k + 1; l < rs.rank; ++l)
            if (rs.inner(rs.simple[k], rs.simple[l]) != 0) e += static_cast<long>(a[k]) * b[l];
    return (e % 2 == 0) ? 1 : -1;
}

namespace {

std::vector<int> reference_signs(const RootSystem& rs) {
    const int R = rs.size();
    MatrixModel mm = matrix_model(rs);
    std::vector<int> ref(static_cast<std::size_t>(R) * R, 0);
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < R; ++j) {
            int k = rs.sum(i, j);
            if (k < 0) continue;
            bool ok = false;
            long c = proportionality(commutator(mm.root[i], mm.root[j]), mm.root[k], ok);
            if (!ok || (c != 1 && c != -1)) throw std::logic_error("matrix model: unexpected constant");
            ref[static_cast<std::size_t>(i) * R + j] = static_cast<int>(c);
        }
    return ref;
}

}  // namespace

WeylBasis::WeylBasis(RootSystem rs) : rs_(std::move(rs)) {
    const int R = rs_.size();
    Scalar s = Scalar::sqrt_of(static_cast<std::uint64_t>(rs_.lambda));
    inv_sqrt_lambda_ = s.inverse();

    auto t = [&](int i) { return rs_.positive(i) ? 1 : -1; };
    std::vector<int> coc(static_cast<std::size_t>(R) * R, 0);
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < R; ++j) {
            int k = rs_.sum(i, j);
            if (k >= 0) coc[static_cast<std::size_t>(i) * R + j] = t(i) * t(j) * t(k) * cocycle(rs_, i, j);
        }

    if (rs_.family == Family::E6) {
        sign_ = coc;
    } else {
        // Flip E_alpha and E_-alpha together so the constants match the matrix realization.
        std::vector<int> ref = reference_signs(rs_);
        std::vector<int> order(R);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return rs_.height[x] < rs_.height[y]; });
        std::vector<int> flip(R, 0);
        for (int k : rs_.simple) flip[k] = 1;
        for (int x : order) {
            if (!rs_.positive(x) || flip[x]) continue;
            for (int k : rs_.simple) {
                int b = -1;
                IntVec d = rs_.roots[x];
                for (int c = 0; c < rs_.ambient; ++c) d[c] -= rs_.roots[k][c];
                b = rs_.index_of(d);
                if (b < 0 || !rs_.positive(b)) continue;
                std::size_t kb = static_cast<std::size_t>(k) * R + b;
                flip[x] = flip[k] * flip[b] * ref[kb] * coc[kb];
                break;
            }
            if (!flip[x]) throw std::logic_error("sign alignment: no simple decomposition");
        }
        for (int x = 0; x < R; ++x)
            if (!rs_.positive(x)) flip[x] = flip[rs_.neg[x]];
        sign_.assign(static_cast<std::size_t>(R) * R, 0);
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < R; ++j) {
                int k = rs_.sum(i, j);
                if (k < 0) continue;
                std::size_t ij = static_cast<std::size_t>(i) * R + j;
                sign_[ij] = flip[i] * flip[j] * flip[k] * coc[ij];
                if (sign_[ij] != ref[ij]) throw std::logic_error("sign alignment failed");
            }
    }

    coroot_.resize(R);
    for (int i = 0; i < R; ++i) {
        Vec<Rational> a(rs_.ambient);
        for (int c = 0; c < rs_.ambient; ++c) a[c] = rs_.roots[i][c];
        coroot_[i] = rs_.cartan_coords(rs_.dual_gram * a);
    }
}

Scalar WeylBasis::N(int i, int j) const {
    int s = sign(i, j);
    if (s == 0) return Scalar(0);
    return s > 0 ? inv_sqrt_lambda_ : -inv_sqrt_lambda_;
}

Vec<Rational> WeylBasis::coroot_ambient(int i) const { return rs_.ambient_of(coroot_[i]); }

std::string WeylBasis::convention() const {
    std::string base =
        "E_alpha = t_alpha e_alpha / sqrt(lambda) with [e_a, e_b] = eps(a,b) e_(a+b), "
        "eps the bimultiplicative sign cocycle on simple-root coordinates "
        "(eps(a_i,a_j) = -1 iff i = j or i < j adjacent), t = +1 on positive and -1 on negative roots";
    if (rs_.family == Family::E6) return base + "; simple roots in the order a1..a6 of the presentation";
    return base + "; then E_alpha, E_-alpha rescaled by a common sign so that the constants agree with "
                  "the matrix realization (A: E_ij / sqrt(m); D: e_i ^ e_j, -e_-i ^ e_-j, e_i ^ e_-j over sqrt(2(n-1)))";
}

Elem zero_element(const WeylBasis& wb) { return Elem(wb.dim(), Scalar(0)); }

Elem root_vector(const WeylBasis& wb, int root, const Scalar& coeff) {
    Elem e = zero_element(wb);
    e[wb.slot(root)] = coeff;
    return e;
}

Elem cartan_vector(const WeylBasis& wb, const Vec<Scalar>& c) {
    Elem e = zero_element(wb);
    for (int a = 0; a < wb.rank(); ++a) e[a] = c[a];
    return e;
}

Elem basis_element(const WeylBasis& wb, int slot) {
    Elem e = zero_element(wb);
    e[slot] = Scalar(1);
    return e;
}

std::vector<std::pair<int, Scalar>> bracket_basis(const WeylBasis& wb, int s, int t) {
    const int r = wb.rank();
    const RootSystem& rs = wb.roots();
    std::vector<std::pair<int, Scalar>> out;
    if (s < r && t < r) return out;
    if (s < r || t < r) {
        bool flip = t < r;
        int h = flip ? t : s, e = flip ? s : t;
        int v = rs.on_cartan(e - r, h);
        if (v != 0) out.emplace_back(e, Scalar(flip ? -v : v));
        return out;
    }
    int i = s - r, j = t - r;
    if (rs.neg[i] == j) {
        const Vec<Rational>& c = wb.coroot(i);
        for (int a = 0; a < r; ++a)
            if (sgn(c[a])) out.emplace_back(a, Scalar(c[a]));
        return out;
    }
    int k = rs.sum(i, j);
    if (k >= 0) out.emplace_back(wb.slot(k), wb.N(i, j));
    return out;
}

Elem bracket(const WeylBasis& wb, const Elem& x, const Elem& y) {
    Elem z = zero_element(wb);
    const int n = wb.dim();
    std::vector<int> nx, ny;
    for (int s = 0; s < n; ++s) {
        if (!x[s].is_zero()) nx.push_back(s);
        if (!y[s].is_zero()) ny.push_back(s);
    }
    for (int s : nx)
        for (int t : ny)
            for (auto& [k, c] : bracket_basis(wb, s, t)) z[k] += x[s] * y[t] * c;
    return z;
}

Scalar killing(const WeylBasis& wb, const Elem& x, const Elem& y) {
    const int r = wb.rank();
    const RootSystem& rs = wb.roots();
    Scalar s(0);
    for (int a = 0; a < r; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < r; ++b)
            if (!y[b].is_zero() && sgn(rs.cartan_gram(a, b))) s += x[a] * y[b] * Scalar(rs.cartan_gram(a, b));
    }
    for (int i = 0; i < rs.size(); ++i) {
        const Scalar& u = x[wb.slot(i)];
        const Scalar& v = y[wb.slot(rs.neg[i])];
        if (!u.is_zero() && !v.is_zero()) s += u * v;
    }
    return s;
}

Elem add(const Elem& x, const Elem& y) {
    Elem z = x;
    for (std::size_t k = 0; k < z.size(); ++k) z[k] += y[k];
    return z;
}

Elem sub(const Elem& x, const Elem& y) {
    Elem z = x;
    for (std::size_t k = 0; k < z.size(); ++k) z[k] -= y[k];
    return z;
}

Elem scale(const Scalar& c, const Elem& x) {
    Elem z = x;
    for (auto& v : z)
        if (!v.is_zero()) v *= c;
    return z;
}

bool is_zero_elem(const Elem& x) {
    return std::all_of(x.begin(), x.end(), [](const Scalar& v) { return v.is_zero(); });
}

}  // namespace lie
