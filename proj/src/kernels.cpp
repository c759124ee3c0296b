#include "lie/kernels.hpp"

#include <omp.h>

namespace lie::kernels {

namespace {

Scalar pair_value(const Mat<Scalar>& omega, int a, const SparseVec& v) {
    Scalar s(0);
    for (auto& [k, c] : v)
        if (!omega(a, k).is_zero()) s += omega(a, k) * c;
    return s;
}

Scalar d2_at(const LieTable& t, const Mat<Scalar>& omega, int i, int j, int k) {
    return pair_value(omega, i, t.bracket(j, k)) + pair_value(omega, k, t.bracket(i, j)) +
           pair_value(omega, j, t.bracket(k, i));
}

// Offset of the first triple (i, *, *) in lexicographic order.
long triple_offset(int n, int i) {
    return triple_count(n) - triple_count(n - i);
}

SparseVec double_bracket(const LieTable& t, int x, const SparseVec& v) {
    SparseVec out;
    for (auto& [k, c] : v) axpy(out, c, t.bracket(x, k));
    return out;
}

bool jacobi_at(const LieTable& t, int x, int y, int z) {
    SparseVec s = double_bracket(t, x, t.bracket(y, z));
    axpy(s, Scalar(1), double_bracket(t, y, t.bracket(z, x)));
    axpy(s, Scalar(1), double_bracket(t, z, t.bracket(x, y)));
    return s.empty();
}

}  // namespace

std::vector<Scalar> d2_serial(const LieTable& t, const Mat<Scalar>& omega) {
    const int n = t.dim();
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(std::max(0L, triple_count(n))));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) out.push_back(d2_at(t, omega, i, j, k));
    return out;
}

std::vector<Scalar> d2_omp(const LieTable& t, const Mat<Scalar>& omega) {
    const int n = t.dim();
    std::vector<Scalar> out(static_cast<std::size_t>(std::max(0L, triple_count(n))));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        long pos = triple_offset(n, i);
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) out[pos++] = d2_at(t, omega, i, j, k);
    }
    return out;
}

JacobiReport jacobi_serial(const LieTable& t) {
    JacobiReport r;
    const int n = t.dim();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                ++r.triples;
                if (!jacobi_at(t, x, y, z)) {
                    if (!r.witness) r.witness = std::array<int, 3>{x, y, z};
                    ++r.violations;
                }
            }
    return r;
}

JacobiReport jacobi_omp(const LieTable& t) {
    JacobiReport r;
    const int n = t.dim();
    std::vector<std::optional<std::array<int, 3>>> first(n);
    long violations = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : violations)
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                if (!jacobi_at(t, x, y, z)) {
                    if (!first[x]) first[x] = std::array<int, 3>{x, y, z};
                    ++violations;
                }
    r.triples = triple_count(n);
    r.violations = violations;
    for (auto& w : first)
        if (w) {
            r.witness = w;
            break;
        }
    return r;
}

namespace {

RootMask image(const Perm& p, const RootMask& s) {
    RootMask out;
    s.for_each([&](int i) { out.set(p[i]); });
    return out;
}

}  // namespace

std::pair<RootMask, int> canonical_serial(const std::vector<Perm>& group, const RootMask& s) {
    RootMask best = image(group[0], s);
    int arg = 0;
    for (int g = 1; g < static_cast<int>(group.size()); ++g) {
        RootMask m = image(group[g], s);
        if (m < best) {
            best = m;
            arg = g;
        }
    }
    return {best, arg};
}

std::pair<RootMask, int> canonical_omp(const std::vector<Perm>& group, const RootMask& s) {
    const int G = static_cast<int>(group.size());
    const int T = omp_get_max_threads();
    std::vector<RootMask> best(T);
    std::vector<int> arg(T, -1);
#pragma omp parallel
    {
        const int id = omp_get_thread_num();
#pragma omp for schedule(static)
        for (int g = 0; g < G; ++g) {
            RootMask m = image(group[g], s);
            if (arg[id] < 0 || m < best[id]) {
                best[id] = m;
                arg[id] = g;
            }
        }
    }
    // Lowest group index among the minimizers, matching the serial scan.
    RootMask b;
    int a = -1;
    for (int k = 0; k < T; ++k) {
        if (arg[k] < 0) continue;
        if (a < 0 || best[k] < b || (best[k] == b && arg[k] < a)) {
            b = best[k];
            a = arg[k];
        }
    }
    return {b, a};
}

}  // namespace lie::kernels
