#include "lie/matrix_model.hpp"

#include <stdexcept>

namespace lie {

IntMat operator*(const IntMat& x, const IntMat& y) {
    IntMat z(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            long v = x(i, k);
            if (!v) continue;
            for (int j = 0; j < x.n; ++j) z(i, j) += v * y(k, j);
        }
    return z;
}

IntMat operator+(const IntMat& x, const IntMat& y) {
    IntMat z = x;
    for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] += y.a[k];
    return z;
}

IntMat operator-(const IntMat& x, const IntMat& y) {
    IntMat z = x;
    for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] -= y.a[k];
    return z;
}

IntMat scaled(const IntMat& x, long s) {
    IntMat z = x;
    for (long& v : z.a) v *= s;
    return z;
}

IntMat commutator(const IntMat& x, const IntMat& y) { return x * y - y * x; }

long proportionality(const IntMat& x, const IntMat& y, bool& ok) {
    ok = false;
    long c = 0;
    for (std::size_t k = 0; k < y.a.size(); ++k) {
        if (y.a[k] == 0) continue;
        if (x.a[k] % y.a[k] != 0) return 0;
        c = x.a[k] / y.a[k];
        break;
    }
    if (!(scaled(y, c) == x)) return 0;
    ok = true;
    return c;
}

namespace {

IntMat elementary(int n, int i, int j) {
    IntMat m(n);
    m(i, j) = 1;
    return m;
}

// (u ^ v)(w) = (v,w)u - (u,w)v for basis vectors of C^2n with (e_i, e_-i) = 1.
IntMat wedge(int n, int u, int v) {
    auto partner = [n](int k) { return k < n ? k + n : k - n; };
    IntMat m(2 * n);
    m(u, partner(v)) += 1;
    m(v, partner(u)) -= 1;
    return m;
}

}  // namespace

MatrixModel matrix_model(const RootSystem& rs) {
    MatrixModel mm;
    if (rs.family == Family::A) {
        const int m = rs.ambient;
        mm.size = m;
        for (const IntVec& r : rs.roots) {
            int i = -1, j = -1;
            for (int t = 0; t < m; ++t) {
                if (r[t] == 1) i = t;
                if (r[t] == -1) j = t;
            }
            mm.root.push_back(elementary(m, i, j));
        }
        for (const IntVec& h : rs.cartan_basis) {
            IntMat d(m);
            for (int t = 0; t < m; ++t) d(t, t) = h[t];
            mm.cartan.push_back(d);
        }
        return mm;
    }
    if (rs.family != Family::D) throw std::invalid_argument("matrix_model: only A and D");
    const int n = rs.ambient;
    mm.size = 2 * n;
    for (const IntVec& r : rs.roots) {
        std::vector<int> pos, negs;
        for (int t = 0; t < n; ++t) {
            if (r[t] == 1) pos.push_back(t);
            if (r[t] == -1) negs.push_back(t);
        }
        if (pos.size() == 2) {
            mm.root.push_back(wedge(n, pos[0], pos[1]));
        } else if (negs.size() == 2) {
            mm.root.push_back(scaled(wedge(n, n + negs[0], n + negs[1]), -1));
        } else {
            mm.root.push_back(wedge(n, pos[0], n + negs[0]));
        }
    }
    for (const IntVec& h : rs.cartan_basis) {
        IntMat d(2 * n);
        for (int t = 0; t < n; ++t) {
            d(t, t) = h[t];
            d(n + t, n + t) = -h[t];
        }
        mm.cartan.push_back(d);
    }
    return mm;
}

}  // namespace lie
