#include "lie/gcs.hpp"

#include <stdexcept>

namespace lie {

namespace {

Scalar dot(const Vec<Scalar>& a, const Vec<Scalar>& b) {
    Scalar s(0);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    return s;
}

Scalar form(const Mat<Scalar>& g, const Vec<Scalar>& x, const Vec<Scalar>& y) {
    return dot(x, g * y);
}

}  // namespace

Mat<Scalar> g_can(int n) {
    Mat<Scalar> g(2 * n, 2 * n);
    const Scalar half(Rational(1, 2));
    for (int i = 0; i < n; ++i) {
        g(i, n + i) = half;
        g(n + i, i) = half;
    }
    return g;
}

std::vector<Elem> complement_of(const RegularSubalgebra& k) {
    const WeylBasis& wb = k.weyl();
    std::vector<Elem> out;
    for (int i = 0; i < wb.roots().size(); ++i)
        if (!k.roots().test(i)) out.push_back(basis_element(wb, wb.slot(i)));
    std::vector<CartanVec> pool = k.h0();
    for (const CartanVec& e : full_cartan(wb)) {
        pool.push_back(e);
        if (independent_subset(pool, wb.rank()).size() == pool.size())
            out.push_back(cartan_vector(wb, e));
        else
            pool.pop_back();
    }
    return out;
}

std::vector<TVec> holomorphic_space(const RegularSubalgebra& k, const TwoForm& omega) {
    const WeylBasis& wb = k.weyl();
    const int n = wb.dim(), m = k.dim();
    std::vector<Elem> cols;
    for (int b = 0; b < m; ++b) cols.push_back(k.element(b));
    for (const Elem& q : complement_of(k)) cols.push_back(q);
    auto pinv = inverse(Mat<Scalar>::from_columns(cols, n));
    if (!pinv) throw std::logic_error("k plus complement is not a basis");
    std::vector<TVec> L;
    for (int i = 0; i < m; ++i) {
        TVec v(2 * n, Scalar(0));
        for (int t = 0; t < n; ++t) v[t] = cols[i][t];
        for (int j = 0; j < m; ++j) {
            if (omega(i, j).is_zero()) continue;
            for (int t = 0; t < n; ++t)
                if (!(*pinv)(j, t).is_zero()) v[n + t] += omega(i, j) * (*pinv)(j, t);
        }
        L.push_back(std::move(v));
    }
    for (int r = m; r < n; ++r) {
        TVec v(2 * n, Scalar(0));
        for (int t = 0; t < n; ++t) v[n + t] = (*pinv)(r, t);
        L.push_back(std::move(v));
    }
    return L;
}

TVec conjugate(const Antiinvolution& sigma, const TVec& v) {
    const int n = sigma.basis->dim();
    Elem x(v.begin(), v.begin() + n);
    Elem sx = sigma.apply(x);
    TVec out(2 * n, Scalar(0));
    for (int t = 0; t < n; ++t) out[t] = sx[t];
    // conj(xi)(e_k) = conj(xi(sigma e_k))
    for (int kk = 0; kk < n; ++kk) {
        Elem se = sigma.apply(basis_element(*sigma.basis, kk));
        Scalar s(0);
        for (int j = 0; j < n; ++j)
            if (!se[j].is_zero() && !v[n + j].is_zero()) s += v[n + j] * se[j];
        out[n + kk] = conj(s);
    }
    return out;
}

GeneralizedStructure build_J(const std::vector<TVec>& L, const Antiinvolution& sigma) {
    const WeylBasis& wb = *sigma.basis;
    const int n = wb.dim();
    GeneralizedStructure gs;
    gs.dim_g = n;
    gs.L = L;
    Mat<Scalar> G = g_can(n);
    for (std::size_t a = 0; a < L.size() && gs.isotropic; ++a)
        for (std::size_t b = a; b < L.size(); ++b)
            if (!form(G, L[a], L[b]).is_zero()) {
                gs.isotropic = false;
                break;
            }
    std::vector<TVec> cols = L;
    for (const TVec& v : L) cols.push_back(conjugate(sigma, v));
    Mat<Scalar> V = Mat<Scalar>::from_columns(cols, 2 * n);
    auto vinv = inverse(V);
    gs.spanning = static_cast<int>(L.size()) == n && vinv.has_value();
    if (!gs.isotropic || !gs.spanning) throw std::invalid_argument("L is not a maximal isotropic complex structure space");
    Mat<Scalar> D(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        D(i, i) = Scalar::i();
        D(n + i, n + i) = -Scalar::i();
    }
    gs.J = V * D * *vinv;
    Mat<Scalar> sq = gs.J * gs.J;
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j)
            if (sq(i, j) != Scalar(i == j ? -1 : 0)) gs.square_minus_one = false;
    Mat<Scalar> sk = gs.J.transpose() * G;
    Mat<Scalar> gj = G * gs.J;
    for (std::size_t e = 0; e < sk.data.size(); ++e)
        if (!(sk.data[e] + gj.data[e]).is_zero()) gs.skew = false;
    for (const TVec& v : L) {
        TVec jv = gs.J * v;
        for (int t = 0; t < 2 * n; ++t)
            if (jv[t] != Scalar::i() * v[t]) gs.eigen = false;
    }
    // real basis of g and its dual basis
    std::vector<Elem> unit;
    for (int t = 0; t < n; ++t) unit.push_back(basis_element(wb, t));
    std::vector<Elem> real = real_points(unit, sigma);
    Mat<Scalar> R = Mat<Scalar>::from_columns(real, n);
    auto rinv = inverse(R);
    if (!rinv) throw std::logic_error("real points do not span g");
    gs.real_basis = Mat<Scalar>(2 * n, 2 * n);
    Mat<Scalar> binv(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            gs.real_basis(i, j) = R(i, j);
            gs.real_basis(n + i, n + j) = (*rinv)(j, i);
            binv(i, j) = (*rinv)(i, j);
            binv(n + i, n + j) = R(j, i);
        }
    gs.J_real = binv * gs.J * gs.real_basis;
    for (const Scalar& x : gs.J_real.data)
        if (!x.is_real()) gs.real = false;
    return gs;
}

GeneralizedStructure build_structure(const RegularSubalgebra& k, const TwoForm& omega, const Antiinvolution& sigma) {
    AdmissibilityReport rep = is_admissible(k, omega, sigma);
    if (!rep.admissible()) throw std::invalid_argument("pair is not admissible: " + rep.summary());
    GeneralizedStructure gs = build_J(holomorphic_space(k, omega), sigma);
    gs.type = gcs_type(k);
    return gs;
}

int gcs_type(const RegularSubalgebra& k) { return k.weyl().dim() - k.dim(); }

int type_from_l_dim(int rank, int dim_l, int num_roots) {
    int t = rank - dim_l + num_roots;
    if (t % 2) throw std::invalid_argument("rank - dim l + |R| is odd");
    return t / 2;
}

TwoForm b_field_on(const RegularSubalgebra& k, const Vec<Scalar>& xi) {
    const int m = k.dim();
    TwoForm B(m, m);
    std::vector<Elem> el;
    for (int b = 0; b < m; ++b) el.push_back(k.element(b));
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            Scalar v = -dot(xi, bracket(k.weyl(), el[x], el[y]));
            B(x, y) = v;
            B(y, x) = -v;
        }
    return B;
}

TwoForm b_field_transform(const RegularSubalgebra& k, const TwoForm& omega, const Vec<Scalar>& xi) {
    TwoForm w = omega;
    add_scaled(w, Scalar(1), b_field_on(k, xi));
    return w;
}

Vec<Scalar> normalizing_xi(const RegularSubalgebra& k, const std::vector<Scalar>& mu) {
    const WeylBasis& wb = k.weyl();
    Vec<Scalar> xi(wb.dim(), Scalar(0));
    for (int a : k.root_list()) {
        xi[wb.slot(a)] -= mu[a];
        xi[wb.slot(wb.roots().neg[a])] += conj(mu[a]);
    }
    return xi;
}

bool covector_is_real(const Antiinvolution& sigma, const Vec<Scalar>& xi) {
    const WeylBasis& wb = *sigma.basis;
    for (int t = 0; t < wb.dim(); ++t)
        if (dot(xi, sigma.apply(basis_element(wb, t))) != conj(xi[t])) return false;
    return true;
}

std::vector<Scalar> recover_mu(const RegularSubalgebra& k, const TwoForm& omega) {
    const RootSystem& rs = k.weyl().roots();
    std::vector<Scalar> mu(rs.size(), Scalar(0));
    for (int a : k.root_list()) {
        Covector f = root_functional(k, a);
        for (int h = 0; h < k.cartan_dim(); ++h)
            if (!f[h].is_zero()) {
                mu[a] = omega(h, k.position(a)) / f[h];
                break;
            }
    }
    return mu;
}

std::vector<Vec<Scalar>> default_a10(const RegularSubalgebra& k, const Antiinvolution& sigma) {
    const int d = k.cartan_dim();
    std::vector<Vec<Scalar>> pool;
    for (const CartanVec& v : cartan_intersection_with_conjugate(k.weyl(), k.h0(), sigma))
        pool.push_back(*k.cartan_coords_in_h0(v));
    std::vector<Vec<Scalar>> out;
    for (int b = 0; b < d; ++b) {
        Vec<Scalar> e(d, Scalar(0));
        e[b] = Scalar(1);
        pool.push_back(e);
        if (independent_subset(pool, d).size() == pool.size())
            out.push_back(e);
        else
            pool.pop_back();
    }
    return out;
}

bool is_normal_form(const RegularSubalgebra& k, const TwoForm& omega, const Antiinvolution& sigma) {
    if (!is_positive_system(k.weyl().roots(), k.roots())) throw std::invalid_argument("k is not of the shape h0 + g(R+)");
    const int d = k.cartan_dim(), m = k.dim();
    for (int x = 0; x < m; ++x)
        for (int y = d; y < m; ++y)
            if (!omega(x, y).is_zero()) return false;
    std::vector<Vec<Scalar>> a10 = k.a10.empty() ? default_a10(k, sigma) : k.a10;
    for (const auto& h : a10)
        for (int b = 0; b < d; ++b) {
            Scalar s(0);
            for (int a = 0; a < d; ++a)
                if (!h[a].is_zero()) s += h[a] * omega(a, b);
            if (!s.is_zero()) return false;
        }
    return true;
}

bool check_complex_structure_conditions(const RegularSubalgebra& k, const Antiinvolution& sigma,
                                        const std::vector<Elem>& l) {
    const int n = k.weyl().dim();
    std::vector<Elem> span;
    for (int b = 0; b < k.dim(); ++b) span.push_back(k.element(b));
    std::vector<Elem> both = span;
    for (const Elem& x : span) both.push_back(sigma.apply(x));
    const int sum = complex_rank(both);
    if (sum != n) return false;
    const int inter = 2 * k.dim() - sum;
    for (const Elem& x : l) {
        if (!k.coords(x) || !k.coords(sigma.apply(x))) return false;
    }
    return complex_rank(l) == inter;
}

}  // namespace lie
