// Integer matrix realizations of sl_m (A) and so_2n (D).
#pragma once

#include "lie/root_system.hpp"

#include <vector>

namespace lie {

struct IntMat {
    int n = 0;
    std::vector<long> a;

    IntMat() = default;
    explicit IntMat(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
    long& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    long operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    friend bool operator==(const IntMat& x, const IntMat& y) { return x.a == y.a; }
};

IntMat operator*(const IntMat& x, const IntMat& y);
IntMat operator+(const IntMat& x, const IntMat& y);
IntMat operator-(const IntMat& x, const IntMat& y);
IntMat scaled(const IntMat& x, long s);
IntMat commutator(const IntMat& x, const IntMat& y);

// X_alpha with E_alpha = X_alpha / sqrt(lambda); H_a for the Cartan basis.
// A: X = E_ij on C^m.  D: on C^2n with basis e_1..e_n, e_-1..e_-n.
struct MatrixModel {
    int size = 0;
    std::vector<IntMat> root;
    std::vector<IntMat> cartan;
};

MatrixModel matrix_model(const RootSystem& rs);

// Multiple of y equal to x (x = c*y), or 0 with ok=false.
long proportionality(const IntMat& x, const IntMat& y, bool& ok);

}  // namespace lie
