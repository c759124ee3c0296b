#include "lie/structure.hpp"

#include <stdexcept>

namespace lie {

void axpy(SparseVec& acc, const Scalar& c, const SparseVec& v) {
    if (c.is_zero() || v.empty()) return;
    SparseVec out;
    out.reserve(acc.size() + v.size());
    std::size_t a = 0, b = 0;
    while (a < acc.size() || b < v.size()) {
        if (b == v.size() || (a < acc.size() && acc[a].first < v[b].first)) {
            out.push_back(std::move(acc[a++]));
        } else if (a == acc.size() || v[b].first < acc[a].first) {
            out.emplace_back(v[b].first, c * v[b].second);
            ++b;
        } else {
            Scalar s = acc[a].second + c * v[b].second;
            if (!s.is_zero()) out.emplace_back(acc[a].first, std::move(s));
            ++a;
            ++b;
        }
    }
    acc = std::move(out);
}

SparseVec dense_to_sparse(const Vec<Scalar>& v) {
    SparseVec s;
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (!v[k].is_zero()) s.emplace_back(k, v[k]);
    return s;
}

Vec<Scalar> sparse_to_dense(const SparseVec& v, int dim) {
    Vec<Scalar> d(dim, Scalar(0));
    for (auto& [k, c] : v) d[k] = c;
    return d;
}

void LieTable::set(int i, int j, SparseVec v) {
    SparseVec m;
    for (auto& [k, c] : v) m.emplace_back(k, -c);
    br_[static_cast<std::size_t>(i) * n_ + j] = std::move(v);
    br_[static_cast<std::size_t>(j) * n_ + i] = std::move(m);
}

LieTable LieTable::of_algebra(const WeylBasis& wb) {
    LieTable t(wb.dim());
    for (int s = 0; s < wb.dim(); ++s)
        for (int u = s + 1; u < wb.dim(); ++u) {
            auto v = bracket_basis(wb, s, u);
            std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
            t.set(s, u, std::move(v));
        }
    return t;
}

LieTable LieTable::change_basis(const Mat<Scalar>& p) const {
    auto inv = inverse(p);
    if (!inv) throw std::invalid_argument("change_basis: singular matrix");
    const int n = n_;
    std::vector<SparseVec> cols(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (!p(k, j).is_zero()) cols[j].emplace_back(k, p(k, j));
    LieTable t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVec old;
            for (auto& [a, ca] : cols[i])
                for (auto& [b, cb] : cols[j]) axpy(old, ca * cb, bracket(a, b));
            Vec<Scalar> d = *inv * sparse_to_dense(old, n);
            t.set(i, j, dense_to_sparse(d));
        }
    return t;
}

bool LieTable::is_abelian() const {
    for (const auto& v : br_)
        if (!v.empty()) return false;
    return true;
}

}  // namespace lie
