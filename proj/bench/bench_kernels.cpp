// Serial reference vs OpenMP for the parallel kernels. Checks that both give identical results.
#include "lie/catalog.hpp"
#include "lie/forms.hpp"
#include "lie/kernels.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace lie;

namespace {

double seconds(const std::function<void()>& f, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double par, bool same) {
    std::printf("%-34s %10.4f %10.4f %7.2fx  %s\n", name, serial, par, serial / par, same ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial s", "omp s", "speedup");

    WeylBasis e6(build_root_system(Family::E6, 6));
    Antiinvolution s = sigma_from_vogan(e6, e6_outer_diagram(false));
    RootMask m = catalog::e6_system(e6.roots(), 1);
    RegularSubalgebra k(e6, m, construct_h0_pair(e6, m, s).h0);
    std::mt19937_64 rng(1);
    TwoForm w = zero_form(k.dim());
    for (int i = 0; i < k.dim(); ++i)
        for (int j = i + 1; j < k.dim(); ++j) {
            w(i, j) = random_scalar(rng);
            w(j, i) = -w(i, j);
        }
    {
        std::vector<Scalar> a, b;
        double ts = seconds([&] { a = kernels::d2_serial(k.table(), w); }, reps);
        double tp = seconds([&] { b = kernels::d2_omp(k.table(), w); }, reps);
        row("d omega on E6 k^(1)", ts, tp, a == b);
    }
    {
        LieTable t = LieTable::of_algebra(e6);
        kernels::JacobiReport a, b;
        double ts = seconds([&] { a = kernels::jacobi_serial(t); }, 1);
        double tp = seconds([&] { b = kernels::jacobi_omp(t); }, 1);
        row("Jacobi on e6", ts, tp, a.triples == b.triples && a.violations == b.violations);
    }
    {
        Equivalence eq(e6.roots(), s);
        std::pair<RootMask, int> a, b;
        double ts = seconds([&] { a = kernels::canonical_serial(eq.elements(), m); }, reps);
        double tp = seconds([&] { b = kernels::canonical_omp(eq.elements(), m); }, reps);
        row("canonical form under W x {+-1} x s", ts, tp, a.first == b.first);
    }
    {
        EnumerationOptions serial, par;
        serial.parallel = false;
        Enumeration a, b;
        double ts = seconds([&] { a = enumerate_sigma_positive(e6.roots(), s, serial); }, 1);
        double tp = seconds([&] { b = enumerate_sigma_positive(e6.roots(), s, par); }, 1);
        row("sigma-positive enumeration on E6", ts, tp, a.systems == b.systems);
    }
    return 0;
}
