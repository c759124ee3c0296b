#include "lie/forms.hpp"

#include "lie/catalog.hpp"
#include "lie/kernels.hpp"
#include "lie/sigma_systems.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lie {

namespace {

Mat<Scalar> columns_of(const std::vector<CartanVec>& vs, int rank) {
    return Mat<Scalar>::from_columns(vs, rank);
}

// Scalar value of a bilinear form on (basis x, sparse v).
Scalar pair_sparse(const TwoForm& f, int x, const SparseVec& v) {
    Scalar s(0);
    for (auto& [k, c] : v)
        if (!f(x, k).is_zero()) s += c * f(x, k);
    return s;
}

Scalar bilinear(const TwoForm& f, const Vec<Scalar>& x, const Vec<Scalar>& y) {
    Scalar s(0);
    for (int a = 0; a < f.rows; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < f.cols; ++b)
            if (!y[b].is_zero() && !f(a, b).is_zero()) s += x[a] * f(a, b) * y[b];
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------- subalgebra

RegularSubalgebra::RegularSubalgebra(const WeylBasis& wb, RootMask roots, std::vector<CartanVec> h0)
    : wb_(&wb), roots_(roots), h0_(std::move(h0)) {
    const RootSystem& rs = wb.roots();
    if (!rs.is_closed(roots_)) throw std::invalid_argument("R0 is not closed");
    for (const CartanVec& h : h0_)
        if (static_cast<int>(h.size()) != rs.rank) throw std::invalid_argument("h0 vector has wrong length");
    if (!h0_.empty() && independent_subset(h0_, rs.rank).size() != h0_.size())
        throw std::invalid_argument("h0 vectors are dependent");
    root_list_ = roots_.indices();
    position_.assign(rs.size(), -1);
    for (std::size_t k = 0; k < root_list_.size(); ++k) position_[root_list_[k]] = cartan_dim() + static_cast<int>(k);
    roots_.for_each([&](int a) {
        if (roots_.test(rs.neg[a]) && !cartan_coords_in_h0(to_scalar(wb.coroot(a))))
            throw std::invalid_argument("coroot of " + rs.label(a) + " is not in h0");
    });

    const int m = dim();
    table_ = LieTable(m);
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            if (is_cartan(x) && is_cartan(y)) continue;
            auto c = coords(bracket(wb, element(x), element(y)));
            if (!c) throw std::logic_error("bracket leaves k");
            table_.set(x, y, dense_to_sparse(*c));
        }
}

Elem RegularSubalgebra::element(int b) const {
    if (is_cartan(b)) return cartan_vector(*wb_, h0_[b]);
    return root_vector(*wb_, root_at(b));
}

Elem RegularSubalgebra::element(const Vec<Scalar>& c) const {
    Elem x = zero_element(*wb_);
    for (int b = 0; b < dim(); ++b)
        if (!c[b].is_zero()) x = add(x, scale(c[b], element(b)));
    return x;
}

std::optional<Vec<Scalar>> RegularSubalgebra::cartan_coords_in_h0(const CartanVec& h) const {
    const int r = wb_->rank();
    bool zero = std::all_of(h.begin(), h.end(), [](const Scalar& s) { return s.is_zero(); });
    if (zero) return Vec<Scalar>(h0_.size(), Scalar(0));
    if (h0_.empty()) return std::nullopt;
    return solve(columns_of(h0_, r), h);
}

std::optional<Vec<Scalar>> RegularSubalgebra::coords(const Elem& x) const {
    const int r = wb_->rank();
    Vec<Scalar> out(dim(), Scalar(0));
    for (int i = 0; i < wb_->roots().size(); ++i) {
        const Scalar& v = x[wb_->slot(i)];
        if (v.is_zero()) continue;
        if (position_[i] < 0) return std::nullopt;
        out[position_[i]] = v;
    }
    CartanVec h(x.begin(), x.begin() + r);
    auto c = cartan_coords_in_h0(h);
    if (!c) return std::nullopt;
    for (int a = 0; a < cartan_dim(); ++a) out[a] = (*c)[a];
    return out;
}

std::vector<CartanVec> full_cartan(const WeylBasis& wb) {
    std::vector<CartanVec> h;
    for (int a = 0; a < wb.rank(); ++a) {
        CartanVec v(wb.rank(), Scalar(0));
        v[a] = Scalar(1);
        h.push_back(v);
    }
    return h;
}

// ---------------------------------------------------------------- forms

TwoForm zero_form(int dim) { return TwoForm(dim, dim); }

TwoForm wedge(const Covector& a, const Covector& b) {
    const int n = static_cast<int>(a.size());
    TwoForm f(n, n);
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero() && b[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            Scalar v = a[i] * b[j] - a[j] * b[i];
            if (!v.is_zero()) f(i, j) = v;
        }
    }
    return f;
}

void add_scaled(TwoForm& acc, const Scalar& c, const TwoForm& f) {
    if (c.is_zero()) return;
    for (std::size_t k = 0; k < acc.data.size(); ++k)
        if (!f.data[k].is_zero()) acc.data[k] += c * f.data[k];
}

bool is_antisymmetric(const TwoForm& f) {
    if (f.rows != f.cols) return false;
    for (int i = 0; i < f.rows; ++i)
        for (int j = i; j < f.cols; ++j)
            if (f(i, j) != -f(j, i)) return false;
    return true;
}

Covector cartan_functional(const RegularSubalgebra& k, const Vec<Scalar>& values) {
    Covector c(k.dim(), Scalar(0));
    for (int b = 0; b < k.cartan_dim(); ++b)
        for (int a = 0; a < k.weyl().rank(); ++a)
            if (!k.h0()[b][a].is_zero()) c[b] += k.h0()[b][a] * values[a];
    return c;
}

Covector root_functional(const RegularSubalgebra& k, int root) {
    const RootSystem& rs = k.weyl().roots();
    Vec<Scalar> v(rs.rank);
    for (int a = 0; a < rs.rank; ++a) v[a] = Scalar(rs.on_cartan(root, a));
    return cartan_functional(k, v);
}

Covector dual_covector(const RegularSubalgebra& k, int root) {
    Covector c(k.dim(), Scalar(0));
    int b = k.position(root);
    if (b < 0) throw std::invalid_argument("root not in R0: " + k.weyl().roots().label(root));
    c[b] = Scalar(1);
    return c;
}

TwoForm d_one_form(const RegularSubalgebra& k, const Covector& beta) {
    const int m = k.dim();
    TwoForm f(m, m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            Scalar s(0);
            for (auto& [c, v] : k.table().bracket(x, y)) s += v * beta[c];
            if (!s.is_zero()) f(x, y) = -s;
        }
    return f;
}

std::vector<Scalar> exterior_derivative(const LieTable& t, const TwoForm& omega, bool parallel) {
    return parallel ? kernels::d2_omp(t, omega) : kernels::d2_serial(t, omega);
}

std::vector<Scalar> exterior_derivative(const RegularSubalgebra& k, const TwoForm& omega, bool parallel) {
    return exterior_derivative(k.table(), omega, parallel);
}

bool is_closed(const LieTable& t, const TwoForm& omega) {
    for (const Scalar& s : exterior_derivative(t, omega))
        if (!s.is_zero()) return false;
    return true;
}

bool is_closed(const RegularSubalgebra& k, const TwoForm& omega) { return is_closed(k.table(), omega); }

// ---------------------------------------------------------------- solver

namespace {

struct PairIndex {
    int n;
    int operator()(int a, int b) const { return a * n - a * (a + 1) / 2 + (b - a - 1); }
};

void add_term(std::map<int, Scalar>& row, const PairIndex& idx, int u, const SparseVec& v, int sign) {
    for (auto& [k, c] : v) {
        if (k == u) continue;
        if (u < k) row[idx(u, k)] += sign > 0 ? c : -c;
        else row[idx(k, u)] += sign > 0 ? -c : c;
    }
}

// Reduced row echelon form of sparse rows, pivots normalized to 1.
class SparseEchelon {
public:
    explicit SparseEchelon(int cols) : rows_(cols), has_(cols, 0) {}

    void insert(SparseVec row) {
        while (!row.empty()) {
            int c = row.front().first;
            if (!has_[c]) {
                Scalar inv = row.front().second.inverse();
                for (auto& e : row) e.second *= inv;
                rows_[c] = std::move(row);
                has_[c] = 1;
                return;
            }
            Scalar f = -row.front().second;
            axpy(row, f, rows_[c]);
        }
    }

    void back_substitute() {
        for (int c = static_cast<int>(rows_.size()) - 1; c >= 0; --c) {
            if (!has_[c]) continue;
            std::vector<int> cols;
            for (auto& [j, v] : rows_[c])
                if (j != c && has_[j]) cols.push_back(j);
            for (int j : cols) {
                Scalar f(0);
                for (auto& [jj, v] : rows_[c])
                    if (jj == j) f = v;
                if (!f.is_zero()) axpy(rows_[c], -f, rows_[j]);
            }
        }
    }

    std::vector<Vec<Scalar>> kernel() const {
        const int n = static_cast<int>(rows_.size());
        std::vector<std::vector<std::pair<int, Scalar>>> by_col(n);
        for (int c = 0; c < n; ++c)
            if (has_[c])
                for (auto& [j, v] : rows_[c])
                    if (j != c) by_col[j].emplace_back(c, v);
        std::vector<Vec<Scalar>> out;
        for (int f = 0; f < n; ++f) {
            if (has_[f]) continue;
            Vec<Scalar> x(n, Scalar(0));
            x[f] = Scalar(1);
            for (auto& [c, v] : by_col[f]) x[c] = -v;
            out.push_back(std::move(x));
        }
        return out;
    }

private:
    std::vector<SparseVec> rows_;
    std::vector<char> has_;
};

}  // namespace

ClosedForms closed_two_forms(const LieTable& t, int bound) {
    const int m = t.dim();
    if (m > bound) throw std::length_error("dim k = " + std::to_string(m) + " exceeds bound " + std::to_string(bound));
    ClosedForms out;
    out.unknowns = m * (m - 1) / 2;
    PairIndex idx{m};
    std::vector<std::array<int, 3>> triples;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            for (int z = y + 1; z < m; ++z) triples.push_back({x, y, z});
    std::vector<SparseVec> rows(triples.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t r = 0; r < triples.size(); ++r) {
        auto [x, y, z] = triples[r];
        std::map<int, Scalar> row;
        add_term(row, idx, x, t.bracket(y, z), +1);
        add_term(row, idx, z, t.bracket(x, y), +1);
        add_term(row, idx, y, t.bracket(z, x), +1);
        SparseVec v;
        for (auto& [c, s] : row)
            if (!s.is_zero()) v.emplace_back(c, s);
        rows[r] = std::move(v);
    }
    SparseEchelon ech(out.unknowns);
    for (auto& row : rows)
        if (!row.empty()) {
            ++out.equations;
            ech.insert(std::move(row));
        }
    ech.back_substitute();
    for (const auto& x : ech.kernel()) {
        TwoForm f(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                const Scalar& v = x[idx(a, b)];
                if (v.is_zero()) continue;
                f(a, b) = v;
                f(b, a) = -v;
            }
        out.basis.push_back(std::move(f));
    }
    return out;
}

ClosedForms closed_two_forms(const RegularSubalgebra& k, int bound) { return closed_two_forms(k.table(), bound); }

namespace {

Vec<Scalar> flatten(const TwoForm& f) {
    Vec<Scalar> v;
    for (int a = 0; a < f.rows; ++a)
        for (int b = a + 1; b < f.cols; ++b) v.push_back(f(a, b));
    return v;
}

}  // namespace

int span_dim(const std::vector<TwoForm>& forms) {
    if (forms.empty()) return 0;
    std::vector<Vec<Scalar>> vs;
    for (const auto& f : forms) vs.push_back(flatten(f));
    return static_cast<int>(independent_subset(vs, static_cast<int>(vs[0].size())).size());
}

bool span_contains(const std::vector<TwoForm>& b, const std::vector<TwoForm>& a) {
    std::vector<TwoForm> both = b;
    both.insert(both.end(), a.begin(), a.end());
    return span_dim(both) == span_dim(b);
}

// ---------------------------------------------------------------- Cartan forms

TwoForm extend_cartan_form(const RegularSubalgebra& k, const Mat<Scalar>& omega0) {
    const int d = k.cartan_dim();
    if (omega0.rows != d || omega0.cols != d) throw std::invalid_argument("omega0 has wrong size");
    TwoForm f(k.dim(), k.dim());
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) f(a, b) = omega0(a, b);
    return f;
}

Mat<Scalar> cartan_part(const RegularSubalgebra& k, const TwoForm& omega) {
    const int d = k.cartan_dim();
    Mat<Scalar> m(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) m(a, b) = omega(a, b);
    return m;
}

std::vector<TwoForm> cartan_forms_killing(const RegularSubalgebra& k, const std::vector<Vec<Scalar>>& kernel_vectors) {
    const int d = k.cartan_dim();
    PairIndex idx{d};
    const int u = d * (d - 1) / 2;
    std::vector<Vec<Scalar>> rows;
    for (const auto& s : kernel_vectors)
        for (int b = 0; b < d; ++b) {
            Vec<Scalar> row(u, Scalar(0));
            for (int a = 0; a < d; ++a) {
                if (a == b || s[a].is_zero()) continue;
                if (a < b) row[idx(a, b)] += s[a];
                else row[idx(b, a)] -= s[a];
            }
            rows.push_back(row);
        }
    std::vector<Vec<Scalar>> ker;
    if (rows.empty()) {
        for (int c = 0; c < u; ++c) {
            Vec<Scalar> x(u, Scalar(0));
            x[c] = Scalar(1);
            ker.push_back(x);
        }
    } else if (u > 0) {
        ker = kernel(Mat<Scalar>::from_rows(rows, u));
    }
    std::vector<TwoForm> out;
    for (const auto& x : ker) {
        Mat<Scalar> w(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) {
                w(a, b) = x[idx(a, b)];
                w(b, a) = -x[idx(a, b)];
            }
        out.push_back(extend_cartan_form(k, w));
    }
    return out;
}

// ---------------------------------------------------------------- inner family

bool is_positive_system(const RootSystem& rs, const RootMask& m) {
    return rs.is_closed(m) && (m & rs.negate(m)).empty() && 2 * m.count() == rs.size();
}

TwoForm positive_family_form(const RegularSubalgebra& k, const std::vector<Scalar>& mu, const Mat<Scalar>& omega0) {
    const WeylBasis& wb = k.weyl();
    const RootSystem& rs = wb.roots();
    if (!is_positive_system(rs, k.roots())) throw std::invalid_argument("k is not of the shape h0 + g(R+)");
    if (static_cast<int>(mu.size()) != rs.size()) throw std::invalid_argument("mu must be indexed by all roots");
    TwoForm w = extend_cartan_form(k, omega0);
    for (int a : k.root_list()) {
        if (mu[a].is_zero()) continue;
        add_scaled(w, mu[a], wedge(root_functional(k, a), dual_covector(k, a)));
    }
    const Scalar half = Scalar(Rational(1, 2));
    for (int a : k.root_list())
        for (int b : k.root_list()) {
            int s = rs.sum(a, b);
            if (s < 0 || !k.roots().test(s) || mu[s].is_zero()) continue;
            add_scaled(w, half * mu[s] * wb.N(a, b), wedge(dual_covector(k, a), dual_covector(k, b)));
        }
    return w;
}

// ---------------------------------------------------------------- sl_n(H)

namespace {

int a_root(const RootSystem& rs, int i, int j) {
    IntVec v(rs.ambient, 0);
    v[i] += 1;
    v[j] -= 1;
    int r = rs.index_of(v);
    if (r < 0) throw std::logic_error("not a root");
    return r;
}

Vec<Scalar> omega0_times(const Mat<Scalar>& w, const Vec<Scalar>& c) {
    Vec<Scalar> out(w.rows, Scalar(0));
    for (int a = 0; a < w.rows; ++a)
        for (int b = 0; b < w.cols; ++b)
            if (!c[a].is_zero() && !w(a, b).is_zero()) out[b] += c[a] * w(a, b);
    return out;
}

bool all_zero(const Vec<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Coroots of the symmetric part of R0 in h0 coordinates.
std::vector<Vec<Scalar>> symmetric_coroots(const RegularSubalgebra& k) {
    const RootSystem& rs = k.weyl().roots();
    std::vector<Vec<Scalar>> out;
    rs.symmetric_part(k.roots()).for_each([&](int a) {
        out.push_back(*k.cartan_coords_in_h0(to_scalar(k.weyl().coroot(a))));
    });
    return out;
}

// Value on an h0 basis vector of the functional with the given ambient coefficients.
Scalar ambient_functional(const RegularSubalgebra& k, const IntVec& coeffs, int b) {
    const RootSystem& rs = k.weyl().roots();
    Scalar s(0);
    for (int a = 0; a < rs.rank; ++a) {
        if (k.h0()[b][a].is_zero()) continue;
        int v = 0;
        for (int t = 0; t < rs.ambient; ++t) v += coeffs[t] * rs.cartan_basis[a][t];
        if (v) s += k.h0()[b][a] * Scalar(v);
    }
    return s;
}

}  // namespace

std::vector<std::string> slnh_precondition_failures(const RegularSubalgebra& k, const Mat<Scalar>& omega0) {
    const RootSystem& rs = k.weyl().roots();
    std::vector<std::string> out;
    if (rs.family != Family::A || rs.ambient % 2) {
        out.push_back("not sl_2n");
        return out;
    }
    if (k.roots() != catalog::slh_type_a(rs)) out.push_back("R0 is not type a");
    for (const auto& c : symmetric_coroots(k))
        if (!all_zero(omega0_times(omega0, c))) {
            out.push_back("omega0(E_ii - E_jj, .) != 0");
            break;
        }
    const int n = rs.ambient / 2;
    if (n == 2) {
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < n; ++r)
                for (int j = 0; j < n; ++j)
                    for (int s = 0; s < n; ++s) {
                        if (i == r && j == s) continue;
                        IntVec f(rs.ambient, 0);
                        f[i] += 1;
                        f[r] += 1;
                        f[n + j] -= 1;
                        f[n + s] -= 1;
                        bool vanishes = true;
                        for (int b = 0; b < k.cartan_dim(); ++b)
                            vanishes = vanishes && ambient_functional(k, f, b).is_zero();
                        if (vanishes) {
                            std::ostringstream os;
                            os << "n = 2 hypothesis fails for (" << i + 1 << "," << r + 1 << "," << j + 1 << "',"
                               << s + 1 << "')";
                            out.push_back(os.str());
                        }
                    }
    }
    return out;
}

TwoForm sln_h_form(const RegularSubalgebra& k, const SlnhParams& p) {
    auto bad = slnh_precondition_failures(k, p.omega0);
    if (!bad.empty()) throw std::invalid_argument("sln_h_form: " + bad.front());
    const WeylBasis& wb = k.weyl();
    const RootSystem& rs = wb.roots();
    const int n = rs.ambient / 2;
    const Scalar inv = wb.unit_constant();  // 1 / sqrt(2n)
    const Scalar root2n = inv.inverse();
    auto get = [](const std::map<std::pair<int, int>, Scalar>& m, int i, int j) {
        auto it = m.find({i, j});
        return it == m.end() ? Scalar(0) : it->second;
    };
    auto om = [&](int i, int j) { return dual_covector(k, a_root(rs, i, j)); };
    auto eps = [&](int i, int j) { return root_functional(k, a_root(rs, i, j)); };

    TwoForm w = extend_cartan_form(k, p.omega0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            add_scaled(w, get(p.lambda, i, j), wedge(eps(i, j), om(i, j)));
            add_scaled(w, get(p.eta, i, j), wedge(om(i, j), om(j, i)));
            for (int l = 0; l < n; ++l) {
                if (l == i || l == j) continue;
                add_scaled(w, inv * get(p.lambda, i, l), wedge(om(i, j), om(j, l)));
            }
        }
    for (int kk = 0; kk < n; ++kk)
        for (int j = 0; j < n; ++j) {
            Scalar lam = get(p.lambda_prime, kk, j);
            if (lam.is_zero()) continue;
            TwoForm block = wedge(eps(kk, n + j), om(kk, n + j));
            for (std::size_t e = 0; e < block.data.size(); ++e) block.data[e] *= root2n;
            for (int i = 0; i < n; ++i)
                if (i != kk) add_scaled(block, Scalar(1), wedge(om(kk, i), om(i, n + j)));
            add_scaled(w, lam, block);
        }
    return w;
}

// ---------------------------------------------------------------- so_{2n-1,1}

std::vector<int> lorentz_r0_prime(const RootSystem& rs) {
    const int n = rs.ambient;
    IntVec plus(n, 0), minus(n, 0);
    plus[n - 2] = plus[n - 1] = 1;
    minus[n - 2] = 1;
    minus[n - 1] = -1;
    RootMask m = rs.positive_mask();
    m.reset(rs.index_of(plus));
    m.reset(rs.index_of(minus));
    return m.indices();
}

namespace {

// Values on the Cartan basis of alpha - alpha(H')/2 gamma.
Vec<Scalar> projected_root(const RootSystem& rs, int root) {
    const int n = rs.ambient;
    const IntVec& a = rs.roots[root];
    Rational ah(a[n - 2] + a[n - 1], 2);
    Vec<Scalar> v(rs.rank);
    for (int c = 0; c < rs.rank; ++c) {
        Rational g = (c == n - 2 || c == n - 1) ? Rational(1) : Rational(0);
        Rational x = Rational(rs.on_cartan(root, c)) - ah * g;
        x.canonicalize();
        v[c] = Scalar(x);
    }
    return v;
}

}  // namespace

std::vector<int> lorentz_kernel_failures(const RegularSubalgebra& k) {
    const RootSystem& rs = k.weyl().roots();
    const int n = rs.ambient;
    IntVec gamma(n, 0);
    gamma[n - 2] = gamma[n - 1] = 1;
    const int d = k.cartan_dim();
    Mat<Scalar> g(1, d);
    for (int b = 0; b < d; ++b) g(0, b) = ambient_functional(k, gamma, b);
    std::vector<Vec<Scalar>> ker = kernel(g);
    std::vector<int> out;
    for (int a : lorentz_r0_prime(rs)) {
        bool vanishes = true;
        for (const auto& x : ker) {
            Scalar s(0);
            for (int b = 0; b < d; ++b)
                if (!x[b].is_zero()) s += x[b] * ambient_functional(k, rs.roots[a], b);
            vanishes = vanishes && s.is_zero();
        }
        if (vanishes) out.push_back(a);
    }
    return out;
}

TwoForm so_lorentz_form(const RegularSubalgebra& k, const LorentzParams& p) {
    const WeylBasis& wb = k.weyl();
    const RootSystem& rs = wb.roots();
    if (rs.family != Family::D) throw std::invalid_argument("so_lorentz_form needs type D");
    if (k.roots() != catalog::lorentz_type(rs, 'c')) throw std::invalid_argument("R0 is not type c");
    const int n = rs.ambient;
    auto idx = [&](std::initializer_list<std::pair<int, int>> t) {
        IntVec v(n, 0);
        for (auto [c, s] : t) v[c] += s;
        return rs.index_of(v);
    };
    const int gam = idx({{n - 2, 1}, {n - 1, 1}}), mgam = rs.neg[gam];
    CartanVec hprime(rs.rank, Scalar(0));
    hprime[n - 2] = hprime[n - 1] = Scalar(1);
    auto hc = k.cartan_coords_in_h0(hprime);
    if (!hc) throw std::invalid_argument("H_{n-1} + H_n is not in h0");
    if (!all_zero(omega0_times(p.omega0, *hc))) throw std::invalid_argument("omega0(H_{n-1} + H_n, .) != 0");
    auto bad = lorentz_kernel_failures(k);
    if (!bad.empty()) throw std::invalid_argument("condition on Ker(e_{n-1}+e_n) fails for " + rs.label(bad.front()));

    auto c = [&](int root) {
        auto it = p.c_root.find(root);
        return it == p.c_root.end() ? Scalar(0) : it->second;
    };
    const Scalar s = wb.unit_constant(), half(Rational(1, 2));
    Covector g = root_functional(k, gam);
    TwoForm w = extend_cartan_form(k, p.omega0);
    add_scaled(w, p.a, wedge(g, dual_covector(k, gam)));
    add_scaled(w, p.b, wedge(g, dual_covector(k, mgam)));
    add_scaled(w, p.c, wedge(dual_covector(k, gam), dual_covector(k, mgam)));
    std::vector<int> prime = lorentz_r0_prime(rs);
    RootMask pm;
    for (int a : prime) pm.set(a);
    for (int a : prime) add_scaled(w, c(a), wedge(cartan_functional(k, projected_root(rs, a)), dual_covector(k, a)));
    for (int a : prime)
        for (int b : prime) {
            int t = rs.sum(a, b);
            if (t < 0 || !pm.test(t)) continue;
            add_scaled(w, half * wb.N(a, b) * c(t), wedge(dual_covector(k, a), dual_covector(k, b)));
        }
    for (int i = 0; i < n - 2; ++i) {
        int ip1 = idx({{i, 1}, {n - 2, 1}}), ipn = idx({{i, 1}, {n - 1, 1}});
        int im1 = idx({{i, 1}, {n - 2, -1}}), imn = idx({{i, 1}, {n - 1, -1}});
        add_scaled(w, s * c(ip1), wedge(dual_covector(k, gam), dual_covector(k, imn)));
        add_scaled(w, -s * c(ipn), wedge(dual_covector(k, gam), dual_covector(k, im1)));
        add_scaled(w, s * c(imn), wedge(dual_covector(k, mgam), dual_covector(k, ip1)));
        add_scaled(w, -s * c(im1), wedge(dual_covector(k, mgam), dual_covector(k, ipn)));
        add_scaled(w, half * c(ipn), wedge(g, dual_covector(k, ipn)));
        add_scaled(w, half * c(ip1), wedge(g, dual_covector(k, ip1)));
        add_scaled(w, -half * c(imn), wedge(g, dual_covector(k, imn)));
        add_scaled(w, -half * c(im1), wedge(g, dual_covector(k, im1)));
    }
    return w;
}

// ---------------------------------------------------------------- E6

std::pair<IntVec, IntVec> e6_form_roots(int variant) {
    IntVec t456{0, 0, 0, 1, 1, 1}, t123{1, 1, 1, 0, 0, 0}, all(6, 1);
    auto neg = [](IntVec v) {
        for (int& x : v) x = -x;
        return v;
    };
    switch (variant) {
        case 1: return {t456, t456};
        case 2: return {t456, neg(t456)};
        case 3: return {t123, neg(t123)};
        case 4: return {t123, t123};
        case 5: return {all, all};
        case 6: return {all, neg(all)};
    }
    throw std::invalid_argument("E6 variant must be 1..6");
}

TwoForm e6_form(const RegularSubalgebra& k, int variant, const Scalar& lambda, const Mat<Scalar>& omega0) {
    const RootSystem& rs = k.weyl().roots();
    if (rs.family != Family::E6) throw std::invalid_argument("e6_form needs E6");
    auto [fr, cr] = e6_form_roots(variant);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            CartanVec e(6, Scalar(0));
            e[i] = Scalar(1);
            e[j] = Scalar(-1);
            auto c = k.cartan_coords_in_h0(e);
            if (!c) throw std::invalid_argument("e_i - e_j (i, j <= 3) is not in h0");
            if (!all_zero(omega0_times(omega0, *c))) throw std::invalid_argument("omega0(e_i - e_j, .) != 0");
        }
    TwoForm w = extend_cartan_form(k, omega0);
    add_scaled(w, lambda, wedge(root_functional(k, rs.index_of(fr)), dual_covector(k, rs.index_of(cr))));
    return w;
}

// ---------------------------------------------------------------- semidirect

SemidirectReport semidirect_closedness_check(const LieTable& t, const std::vector<int>& s, const std::vector<int>& p,
                                             const TwoForm& rho) {
    SemidirectReport r;
    const int m = t.dim();
    std::vector<int> part(m, -1);
    for (int x : s) part[x] = 0;
    for (int x : p) {
        if (part[x] >= 0) r.decomposition_ok = false;
        part[x] = 1;
    }
    for (int x = 0; x < m; ++x)
        if (part[x] < 0) r.decomposition_ok = false;
    if (static_cast<int>(s.size() + p.size()) != m) r.decomposition_ok = false;
    if (!r.decomposition_ok) {
        r.witness = "s and p do not partition the basis";
        return r;
    }
    for (int x : s)
        for (int y : s)
            for (auto& [c, v] : t.bracket(x, y))
                if (part[c] != 0) r.decomposition_ok = false;
    for (int x = 0; x < m; ++x)
        for (int y : p)
            for (auto& [c, v] : t.bracket(x, y))
                if (part[c] != 1) r.decomposition_ok = false;
    if (!r.decomposition_ok) {
        r.witness = "s is not a subalgebra or p is not an ideal";
        return r;
    }

    TwoForm r0(m, m), r1(m, m), r2(m, m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (part[x] == 0 && part[y] == 0) r0(x, y) = rho(x, y);
            else if (part[x] == 1 && part[y] == 1) r1(x, y) = rho(x, y);
            else r2(x, y) = rho(x, y);
        }
    auto d_at = [&](const TwoForm& f, int x, int y, int z) {
        return pair_sparse(f, x, t.bracket(y, z)) + pair_sparse(f, z, t.bracket(x, y)) +
               pair_sparse(f, y, t.bracket(z, x));
    };
    auto note = [&](const std::string& what, int x, int y, int z) {
        if (r.witness.empty()) r.witness = what + " at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                           std::to_string(z) + ")";
    };
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            for (std::size_t c = b + 1; c < s.size(); ++c)
                if (!d_at(r0, s[a], s[b], s[c]).is_zero()) {
                    r.rho0_closed = false;
                    note("d rho0", s[a], s[b], s[c]);
                }
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            for (std::size_t c = b + 1; c < p.size(); ++c)
                if (!d_at(r1, p[a], p[b], p[c]).is_zero()) {
                    r.rho1_closed = false;
                    note("d rho1", p[a], p[b], p[c]);
                }
    // s,p,p' term: rho2(s,[p,p']) = rho1([s,p],p') + rho1(p,[s,p'])
    for (int x : s)
        for (int y : p)
            for (int z : p) {
                Scalar lhs = pair_sparse(r2, x, t.bracket(y, z));
                Scalar rhs = -pair_sparse(r1, z, t.bracket(x, y)) + pair_sparse(r1, y, t.bracket(x, z));
                if (lhs != rhs) {
                    r.c1 = false;
                    note("s,p,p' mixed term", x, y, z);
                }
            }
    // s,s',p term: rho2([s,s'],p) + rho2([s',p],s) + rho2([p,s],s') = 0
    for (int x : s)
        for (int y : s)
            for (int z : p) {
                Scalar v = -pair_sparse(r2, z, t.bracket(x, y)) - pair_sparse(r2, x, t.bracket(y, z)) -
                           pair_sparse(r2, y, t.bracket(z, x));
                if (!v.is_zero()) {
                    r.c2 = false;
                    note("s,s',p mixed term", x, y, z);
                }
            }
    r.closed = is_closed(t, rho);
    return r;
}

// ---------------------------------------------------------------- admissibility

std::string AdmissibilityReport::summary() const {
    std::ostringstream os;
    os << "subalgebra=" << subalgebra << " spanning=" << spanning << " closed=" << closed << " dim_l=" << l_dim
       << " l_abelian=" << l_abelian << " nondegenerate=" << nondegenerate << " sigma_positive=" << sigma_positive;
    return os.str();
}

AdmissibilityReport is_admissible(const RegularSubalgebra& k, const TwoForm& omega, const Antiinvolution& sigma) {
    AdmissibilityReport r;
    const WeylBasis& wb = k.weyl();
    const RootSystem& rs = wb.roots();
    r.subalgebra = rs.is_closed(k.roots());
    std::vector<Elem> span;
    for (int b = 0; b < k.dim(); ++b) span.push_back(k.element(b));
    std::vector<Elem> both = span;
    for (const Elem& x : span) both.push_back(sigma.apply(x));
    r.spanning = complex_rank(both) == wb.dim();
    r.closed = is_antisymmetric(omega) && is_closed(k, omega);
    r.l_basis = real_points(span, sigma);
    r.l_dim = static_cast<int>(r.l_basis.size());
    std::vector<Vec<Scalar>> lc;
    for (const Elem& x : r.l_basis) lc.push_back(*k.coords(x));
    for (int a = 0; a < r.l_dim; ++a)
        for (int b = a + 1; b < r.l_dim; ++b)
            if (!is_zero_elem(bracket(wb, r.l_basis[a], r.l_basis[b]))) r.l_abelian = false;
    Mat<Scalar> im(r.l_dim, r.l_dim);
    for (int a = 0; a < r.l_dim; ++a)
        for (int b = 0; b < r.l_dim; ++b) im(a, b) = imag_part(bilinear(omega, lc[a], lc[b]));
    r.nondegenerate = r.l_dim == 0 || rank(im) == r.l_dim;
    r.sigma_positive = is_sigma_positive(rs, k.roots(), sigma);
    RootMask inter = k.roots() & sigma.apply(k.roots());
    r.supplementary = rs.asymmetric_part(inter).empty();
    return r;
}

// ---------------------------------------------------------------- Cartan constructions

CartanVec apply_on_cartan(const Antiinvolution& sigma, const CartanVec& h) {
    const int r = static_cast<int>(h.size());
    CartanVec out(r, Scalar(0));
    for (int a = 0; a < r; ++a) {
        if (h[a].is_zero()) continue;
        Scalar c = conj(h[a]);
        for (int b = 0; b < r; ++b)
            if (sgn(sigma.cartan(b, a))) out[b] += Scalar(sigma.cartan(b, a)) * c;
    }
    return out;
}

std::vector<CartanVec> cartan_intersection_with_conjugate(const WeylBasis& wb, const std::vector<CartanVec>& h0,
                                                          const Antiinvolution& sigma) {
    const int r = wb.rank(), d = static_cast<int>(h0.size());
    if (d == 0) return {};
    Mat<Scalar> m(r, 2 * d);
    for (int b = 0; b < d; ++b) {
        CartanVec s = apply_on_cartan(sigma, h0[b]);
        for (int a = 0; a < r; ++a) {
            m(a, b) = h0[b][a];
            m(a, d + b) = -s[a];
        }
    }
    std::vector<CartanVec> vs;
    for (const auto& x : kernel(m)) {
        CartanVec v(r, Scalar(0));
        for (int b = 0; b < d; ++b)
            if (!x[b].is_zero())
                for (int a = 0; a < r; ++a) v[a] += x[b] * h0[b][a];
        vs.push_back(v);
    }
    std::vector<CartanVec> out;
    for (int i : independent_subset(vs, r)) out.push_back(vs[i]);
    return out;
}

std::vector<CartanVec> real_cartan_basis(const WeylBasis& wb, const Antiinvolution& sigma) {
    std::vector<Elem> span;
    for (const auto& h : full_cartan(wb)) span.push_back(cartan_vector(wb, h));
    std::vector<CartanVec> out;
    for (const Elem& x : real_points(span, sigma)) out.emplace_back(x.begin(), x.begin() + wb.rank());
    return out;
}

H0Pair construct_h0_pair(const WeylBasis& wb, const RootMask& r0, const Antiinvolution& sigma) {
    const RootSystem& rs = wb.roots();
    const int r = rs.rank;
    H0Pair out;
    std::vector<CartanVec> cor;
    rs.symmetric_part(r0).for_each([&](int a) { cor.push_back(to_scalar(wb.coroot(a))); });
    if (!cor.empty())
        for (int i : independent_subset(cor, r)) out.S.push_back(cor[i]);
    std::vector<CartanVec> ssig = out.S;
    for (const auto& s : out.S) ssig.push_back(apply_on_cartan(sigma, s));
    const int base = ssig.empty() ? 0 : static_cast<int>(independent_subset(ssig, r).size());
    if (base != 2 * static_cast<int>(out.S.size())) {
        out.transversal = false;
        out.note = "S meets sigma(S)";
        return out;
    }
    std::vector<CartanVec> pool = ssig;
    std::vector<CartanVec> complement;
    for (const auto& v : real_cartan_basis(wb, sigma)) {
        pool.push_back(v);
        if (static_cast<int>(independent_subset(pool, r).size()) == static_cast<int>(pool.size()))
            complement.push_back(v);
        else
            pool.pop_back();
    }
    out.h0 = out.S;
    out.h0.insert(out.h0.end(), complement.begin(), complement.end());
    const int d = static_cast<int>(out.h0.size()), s = static_cast<int>(out.S.size());
    const int c = static_cast<int>(complement.size());
    out.omega0 = Mat<Scalar>(d, d);
    for (int j = 0; j + 1 < c; j += 2) {
        out.omega0(s + j, s + j + 1) = Scalar::i();
        out.omega0(s + j + 1, s + j) = -Scalar::i();
    }
    if (c % 2) {
        out.l_even = false;
        out.note = "l has odd dimension " + std::to_string(c) + "; no nondegenerate omega0 exists";
    }
    return out;
}

InnerPair inner_family_h0(const WeylBasis& wb, const Antiinvolution& sigma, int k_complex) {
    const int r = wb.rank();
    if (k_complex < 0 || 2 * k_complex > r) throw std::invalid_argument("k out of range");
    if ((r - 2 * k_complex) % 2) throw std::invalid_argument("rank - 2k is odd");
    std::vector<CartanVec> real = real_cartan_basis(wb, sigma);
    InnerPair p;
    const int lreal = r - 2 * k_complex;
    for (int j = 0; j < lreal; ++j) p.h0.push_back(real[j]);
    for (int j = 0; j < k_complex; ++j) {
        CartanVec v = real[lreal + 2 * j];
        for (int a = 0; a < r; ++a) v[a] += Scalar::i() * real[lreal + 2 * j + 1][a];
        p.h0.push_back(v);
        Vec<Scalar> e(lreal + k_complex, Scalar(0));
        e[lreal + j] = Scalar(1);
        p.a10.push_back(e);
    }
    const int d = static_cast<int>(p.h0.size());
    p.omega0 = Mat<Scalar>(d, d);
    for (int j = 0; j + 1 < lreal; j += 2) {
        p.omega0(j, j + 1) = Scalar::i();
        p.omega0(j + 1, j) = -Scalar::i();
    }
    return p;
}

Scalar random_scalar(std::mt19937_64& rng, int range, bool complex) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    Rational a(num(rng), den(rng)), b(complex ? num(rng) : 0, den(rng));
    a.canonicalize();
    b.canonicalize();
    return Scalar(a) + Scalar::i() * Scalar(b);
}

}  // namespace lie
