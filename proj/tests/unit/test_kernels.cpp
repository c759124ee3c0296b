#include "doctest.h"
#include "lie/kernels.hpp"

using namespace lie;

TEST_CASE("Jacobi identity, E6 exhaustive") {
    WeylBasis wb(build_root_system(Family::E6, 6));
    LieTable t = LieTable::of_algebra(wb);
    auto r = kernels::jacobi_omp(t);
    CHECK(r.triples == kernels::triple_count(78));
    CHECK(r.violations == 0);
}

TEST_CASE("serial and parallel kernels agree") {
    WeylBasis wb(build_root_system(Family::A, 3));
    LieTable t = LieTable::of_algebra(wb);
    auto a = kernels::jacobi_serial(t), b = kernels::jacobi_omp(t);
    CHECK(a.violations == b.violations);
    CHECK(a.triples == b.triples);
    Mat<Scalar> w(t.dim(), t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = i + 1; j < t.dim(); ++j) {
            w(i, j) = Scalar((i * 7 + j * 3) % 5 - 2);
            w(j, i) = -w(i, j);
        }
    CHECK(kernels::d2_serial(t, w) == kernels::d2_omp(t, w));
    auto group = weyl_group(wb.roots());
    RootMask s = wb.roots().positive_mask();
    CHECK(kernels::canonical_serial(group, s) == kernels::canonical_omp(group, s));
}
