#include "lie/real_forms.hpp"

#include "lie/matrix_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lie {

Elem Antiinvolution::apply(const Elem& x) const {
    const WeylBasis& wb = *basis;
    const int r = wb.rank();
    Elem y = zero_element(wb);
    for (int a = 0; a < r; ++a) {
        if (x[a].is_zero()) continue;
        Scalar cx = conj(x[a]);
        for (int b = 0; b < r; ++b)
            if (sgn(cartan(b, a))) y[b] += Scalar(cartan(b, a)) * cx;
    }
    for (int i = 0; i < static_cast<int>(root_action.size()); ++i) {
        const Scalar& v = x[wb.slot(i)];
        if (v.is_zero()) continue;
        y[wb.slot(root_action[i])] += conj(v) * scalar[i];
    }
    return y;
}

RootMask Antiinvolution::apply(const RootMask& m) const {
    RootMask out;
    m.for_each([&](int i) { out.set(root_action[i]); });
    return out;
}

Perm Antiinvolution::perm() const {
    Perm p(root_action.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<std::uint8_t>(root_action[i]);
    return p;
}

void validate(const RootSystem& rs, const VoganDiagram& d) {
    const int r = rs.rank;
    if (static_cast<int>(d.symmetry.size()) != r) throw std::invalid_argument("Vogan diagram: symmetry has wrong length");
    for (int k = 0; k < r; ++k) {
        int j = d.symmetry[k];
        if (j < 0 || j >= r || d.symmetry[j] != k) throw std::invalid_argument("Vogan diagram: symmetry is not an involution");
    }
    for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l)
            if (rs.inner(rs.simple[k], rs.simple[l]) != rs.inner(rs.simple[d.symmetry[k]], rs.simple[d.symmetry[l]]))
                throw std::invalid_argument("Vogan diagram: symmetry does not preserve the Dynkin diagram");
    for (int k : d.painted) {
        if (k < 0 || k >= r) throw std::invalid_argument("Vogan diagram: painted index out of range");
        if (d.symmetry[k] != k) throw std::invalid_argument("Vogan diagram: painted node is not fixed by the symmetry");
    }
}

VoganDiagram e6_outer_diagram(bool paint_triple_node) {
    VoganDiagram d;
    d.symmetry = {4, 3, 2, 1, 0, 5};
    if (paint_triple_node) d.painted = {2};
    return d;
}

namespace {

// Cartan-basis matrix of an ambient linear map preserving h.
Mat<Rational> to_cartan(const RootSystem& rs, const Mat<Rational>& amb) {
    Mat<Rational> m(rs.rank, rs.rank);
    for (int a = 0; a < rs.rank; ++a) {
        Vec<Rational> h(rs.ambient);
        for (int t = 0; t < rs.ambient; ++t) h[t] = rs.cartan_basis[a][t];
        Vec<Rational> img = amb * h;
        if (!rs.in_cartan(img)) throw std::logic_error("Cartan action leaves h");
        Vec<Rational> c = rs.cartan_coords(img);
        for (int b = 0; b < rs.rank; ++b) m(b, a) = c[b];
    }
    return m;
}

int index_of_scaled(const RootSystem& rs, const Vec<Rational>& v) {
    IntVec iv(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].get_den() != 1) return -1;
        iv[k] = static_cast<int>(v[k].get_num().get_si());
    }
    return rs.index_of(iv);
}

// From a linear map on matrices, read off the root action and scalars.
Antiinvolution from_matrix_map(const WeylBasis& wb, const std::string& name,
                               const std::function<IntMat(const IntMat&)>& f) {
    const RootSystem& rs = wb.roots();
    MatrixModel mm = matrix_model(rs);
    Antiinvolution s;
    s.basis = &wb;
    s.name = name;
    s.root_action.assign(rs.size(), -1);
    s.scalar.assign(rs.size(), Scalar(0));
    for (int i = 0; i < rs.size(); ++i) {
        IntMat img = f(mm.root[i]);
        for (int j = 0; j < rs.size(); ++j) {
            bool ok = false;
            long c = proportionality(img, mm.root[j], ok);
            if (ok && c != 0) {
                s.root_action[i] = j;
                s.scalar[i] = Scalar(c);
                break;
            }
        }
        if (s.root_action[i] < 0) throw std::logic_error(name + ": image of a root vector is not a root vector");
    }
    s.cartan = Mat<Rational>(rs.rank, rs.rank);
    for (int a = 0; a < rs.rank; ++a) {
        IntMat img = f(mm.cartan[a]);
        Vec<Rational> diag(rs.ambient);
        for (int t = 0; t < rs.ambient; ++t) diag[t] = img(t, t);
        if (!rs.in_cartan(diag)) throw std::logic_error(name + ": image of h is not diagonal");
        Vec<Rational> c = rs.cartan_coords(diag);
        for (int b = 0; b < rs.rank; ++b) s.cartan(b, a) = c[b];
    }
    return s;
}

}  // namespace

Antiinvolution compact_involution(const WeylBasis& wb) {
    const RootSystem& rs = wb.roots();
    Antiinvolution s;
    s.basis = &wb;
    s.name = "compact";
    s.root_action = rs.neg;
    s.scalar.assign(rs.size(), Scalar(-1));
    s.cartan = Mat<Rational>::identity(rs.rank);
    for (auto& x : s.cartan.data) x = -x;
    return s;
}

Antiinvolution sigma_from_vogan(const WeylBasis& wb, const VoganDiagram& d) {
    const RootSystem& rs = wb.roots();
    validate(rs, d);
    const int r = rs.rank, n = rs.ambient, R = rs.size();
    // T on root coordinates: simple root k -> simple root symmetry[k]; for A also fix (1,...,1).
    Mat<Rational> Q(n, n), Qi(n, n);
    for (int k = 0; k < r; ++k)
        for (int t = 0; t < n; ++t) {
            Q(t, k) = rs.roots[rs.simple[k]][t];
            Qi(t, k) = rs.roots[rs.simple[d.symmetry[k]]][t];
        }
    if (n > r)
        for (int t = 0; t < n; ++t) Q(t, r) = Qi(t, r) = 1;
    Mat<Rational> T = Qi * *inverse(Q);
    std::vector<int> theta(R);
    for (int i = 0; i < R; ++i) {
        Vec<Rational> v(n);
        for (int t = 0; t < n; ++t) v[t] = rs.roots[i][t];
        theta[i] = index_of_scaled(rs, T * v);
        if (theta[i] < 0) throw std::logic_error("diagram symmetry does not permute roots");
    }
    // theta(E_alpha) = tsign[alpha] E_theta(alpha)
    std::vector<int> tsign(R, 0);
    for (int k = 0; k < r; ++k) {
        bool painted = std::find(d.painted.begin(), d.painted.end(), k) != d.painted.end();
        tsign[rs.simple[k]] = (d.symmetry[k] == k && painted) ? -1 : 1;
    }
    std::vector<int> order(R);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return rs.height[x] < rs.height[y]; });
    for (int x : order) {
        if (!rs.positive(x) || tsign[x]) continue;
        for (int k = 0; k < r; ++k) {
            IntVec diff = rs.roots[x];
            for (int t = 0; t < n; ++t) diff[t] -= rs.roots[rs.simple[k]][t];
            int b = rs.index_of(diff);
            if (b < 0 || !rs.positive(b)) continue;
            int a = rs.simple[k];
            tsign[x] = tsign[b] * tsign[a] * wb.sign(theta[b], theta[a]) * wb.sign(b, a);
            break;
        }
    }
    for (int x = 0; x < R; ++x)
        if (!rs.positive(x)) tsign[x] = tsign[rs.neg[x]];

    Antiinvolution s;
    s.basis = &wb;
    s.name = "vogan";
    s.root_action.resize(R);
    s.scalar.resize(R);
    for (int i = 0; i < R; ++i) {
        // sigma(E_a) = theta(-E_-a) = -tsign[-a] E_theta(-a)
        s.root_action[i] = theta[rs.neg[i]];
        s.scalar[i] = Scalar(-tsign[rs.neg[i]]);
    }
    Mat<Rational> m = to_cartan(rs, T.transpose());
    for (auto& x : m.data) x = -x;
    s.cartan = m;
    return s;
}

Antiinvolution sigma_sl_quaternionic(const WeylBasis& wb) {
    const RootSystem& rs = wb.roots();
    if (rs.family != Family::A || rs.ambient % 2 != 0)
        throw std::invalid_argument("sl_n(H) needs A_{2n-1}");
    const int n = rs.ambient / 2;
    IntMat J(2 * n);
    for (int k = 0; k < n; ++k) {
        J(k, n + k) = 1;
        J(n + k, k) = -1;
    }
    auto s = from_matrix_map(wb, "slH", [&](const IntMat& x) { return scaled(J * x * J, -1); });
    return s;
}

Antiinvolution sigma_so_lorentz(const WeylBasis& wb) {
    const RootSystem& rs = wb.roots();
    if (rs.family != Family::D) throw std::invalid_argument("so_{2n-1,1} needs D_n");
    const int n = rs.ambient;
    IntMat S(2 * n);
    for (int k = 0; k < n - 1; ++k) {
        S(k, n + k) = 1;
        S(n + k, k) = 1;
    }
    S(n - 1, n - 1) = 1;
    S(2 * n - 1, 2 * n - 1) = 1;
    return from_matrix_map(wb, "lorentz", [&](const IntMat& x) { return S * x * S; });
}

bool is_inner(const Antiinvolution& s) {
    const RootSystem& rs = s.basis->roots();
    for (int i = 0; i < rs.size(); ++i)
        if (s.root_action[i] != rs.neg[i]) return false;
    return true;
}

AntiinvolutionCheck check_antiinvolution(const Antiinvolution& s) {
    const WeylBasis& wb = *s.basis;
    const RootSystem& rs = wb.roots();
    AntiinvolutionCheck out;
    const int n = wb.dim();
    std::vector<Elem> img(n);
    for (int k = 0; k < n; ++k) {
        Elem e = basis_element(wb, k);
        img[k] = s.apply(e);
        Elem ie = scale(Scalar::i(), e);
        if (s.apply(img[k]) != e || s.apply(ie) != scale(-Scalar::i(), img[k])) {
            if (out.involutive) out.witness = "sigma^2 != id at basis vector " + std::to_string(k);
            out.involutive = false;
        }
    }
    for (int a = 0; a < n && out.bracket_compatible; ++a)
        for (int b = a + 1; b < n; ++b) {
            Elem lhs = s.apply(bracket(wb, basis_element(wb, a), basis_element(wb, b)));
            Elem rhs = bracket(wb, img[a], img[b]);
            if (lhs != rhs) {
                out.bracket_compatible = false;
                out.witness = "bracket mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                break;
            }
        }
    // (s alpha)(H) = conj(alpha(sigma H)) for real H: root functional transforms by the transpose.
    for (int i = 0; i < rs.size(); ++i)
        for (int a = 0; a < rs.rank; ++a) {
            Rational v = 0;
            for (int b = 0; b < rs.rank; ++b) v += s.cartan(b, a) * rs.on_cartan(i, b);
            if (v != rs.on_cartan(s.root_action[i], a)) {
                out.root_action_consistent = false;
                out.witness = "root action inconsistent at root " + rs.label(i);
            }
        }
    return out;
}

int complex_rank(const std::vector<Elem>& vs) {
    if (vs.empty()) return 0;
    return static_cast<int>(independent_subset(vs, static_cast<int>(vs[0].size())).size());
}

std::vector<Elem> real_points(const std::vector<Elem>& span, const Antiinvolution& s) {
    if (span.empty()) return {};
    const int N = static_cast<int>(span[0].size());
    std::vector<Elem> v;
    for (int k : independent_subset(span, N)) v.push_back(span[k]);
    const int d = static_cast<int>(v.size());
    Mat<Scalar> M(2 * N, 2 * d);
    const Scalar mi = -Scalar::i();
    for (int k = 0; k < d; ++k) {
        Elem sv = s.apply(v[k]);
        for (int j = 0; j < N; ++j) {
            Scalar a = sv[j] - v[k][j];
            Scalar b = mi * (sv[j] + v[k][j]);
            M(2 * j, k) = real_part(a);
            M(2 * j + 1, k) = imag_part(a);
            M(2 * j, d + k) = real_part(b);
            M(2 * j + 1, d + k) = imag_part(b);
        }
    }
    std::vector<Elem> out;
    for (const auto& x : kernel(M)) {
        Elem e(N, Scalar(0));
        for (int k = 0; k < d; ++k) {
            Scalar c = x[k] + Scalar::i() * x[d + k];
            if (c.is_zero()) continue;
            for (int j = 0; j < N; ++j)
                if (!v[k][j].is_zero()) e[j] += c * v[k][j];
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace lie
