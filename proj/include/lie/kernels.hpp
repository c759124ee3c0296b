// Data-parallel kernels. Each has a serial reference and an OpenMP version with identical results.
#pragma once

#include "lie/structure.hpp"

#include <array>
#include <optional>

namespace lie::kernels {

// Number of triples i < j < k.
inline long triple_count(int n) { return static_cast<long>(n) * (n - 1) * (n - 2) / 6; }

// (d omega)(e_i, e_j, e_k) for all i < j < k in lexicographic order.
std::vector<Scalar> d2_serial(const LieTable& t, const Mat<Scalar>& omega);
std::vector<Scalar> d2_omp(const LieTable& t, const Mat<Scalar>& omega);

struct JacobiReport {
    long triples = 0;
    long violations = 0;
    std::optional<std::array<int, 3>> witness;
};

JacobiReport jacobi_serial(const LieTable& t);
JacobiReport jacobi_omp(const LieTable& t);

// Minimal image of s under a group of root permutations, with the index of an element attaining it.
std::pair<RootMask, int> canonical_serial(const std::vector<Perm>& group, const RootMask& s);
std::pair<RootMask, int> canonical_omp(const std::vector<Perm>& group, const RootMask& s);

}  // namespace lie::kernels
