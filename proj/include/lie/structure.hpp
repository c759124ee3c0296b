// Finite-dimensional Lie algebra given by structure constants on a basis.
#pragma once

#include "lie/chevalley.hpp"

#include <functional>

namespace lie {

using SparseVec = std::vector<std::pair<int, Scalar>>;

void axpy(SparseVec& acc, const Scalar& c, const SparseVec& v);  // acc += c v, kept sorted
SparseVec dense_to_sparse(const Vec<Scalar>& v);
Vec<Scalar> sparse_to_dense(const SparseVec& v, int dim);

class LieTable {
public:
    LieTable() = default;
    explicit LieTable(int dim) : n_(dim), br_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return n_; }
    const SparseVec& bracket(int i, int j) const { return br_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, SparseVec v);  // also sets (j, i) to -v

    // Whole algebra g^C in the global coordinates of the Weyl basis.
    static LieTable of_algebra(const WeylBasis& wb);
    // Same algebra in the basis given by the columns of p (invertible).
    LieTable change_basis(const Mat<Scalar>& p) const;

    bool is_abelian() const;

private:
    int n_ = 0;
    std::vector<SparseVec> br_;
};

}  // namespace lie
