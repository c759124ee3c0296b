#include "doctest.h"
#include "lie/scalar.hpp"

#include <random>

using lie::Rational;
using lie::Scalar;

namespace {

Scalar random_scalar(std::mt19937& g, std::uint32_t p) {
    std::uniform_int_distribution<int> d(-9, 9), q(1, 5);
    return Scalar(Rational(d(g), q(g)), Rational(d(g), q(g)), Rational(d(g), q(g)), Rational(d(g), q(g)), p);
}

}  // namespace

TEST_CASE("conj and imag_part") {
    Scalar x(1, 2, 0, 0, 0);
    CHECK(lie::conj(x) == Scalar(1, -2, 0, 0, 0));
    CHECK(lie::conj(Scalar::root(6)) == Scalar::root(6));
    Scalar ir = Scalar::i() * Scalar::root(6);
    CHECK(lie::conj(ir) == -ir);
    CHECK(lie::imag_part(Scalar(3, 5, 0, 0, 0)) == Scalar(5));
    CHECK(lie::imag_part(Scalar(7)).is_zero());
    Scalar one_i(1, 1, 0, 0, 0);
    CHECK(one_i * one_i == Scalar(0, 2, 0, 0, 0));
    CHECK(lie::imag_part(one_i * one_i) == Scalar(2));
}

TEST_CASE("square root relations") {
    Scalar r = Scalar::root(6);
    CHECK(r * r == Scalar(6));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar::sqrt_of(24) == Scalar(0, 0, 2, 0, 6));
    CHECK(Scalar::sqrt_of(4) == Scalar(2));
    CHECK(Scalar::sqrt_of(24).inverse() == Scalar(0, 0, Rational(1, 12), 0, 6));
}

TEST_CASE("field axioms on random quadruples") {
    std::mt19937 g(7);
    for (int t = 0; t < 200; ++t) {
        Scalar x = random_scalar(g, 6), y = random_scalar(g, 6), z = random_scalar(g, 6);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(lie::conj(x * y) == lie::conj(x) * lie::conj(y));
        CHECK(x == lie::real_part(x) + Scalar::i() * lie::imag_part(x));
        CHECK(lie::imag_part(lie::conj(x)) == -lie::imag_part(x));
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(Scalar::root(2) + Scalar::root(3), lie::FieldMismatch);
    CHECK_NOTHROW(Scalar::root(2) + Scalar(1, 1, 0, 0, 3));
}

TEST_CASE("text round trip") {
    std::mt19937 g(3);
    for (int t = 0; t < 50; ++t) {
        Scalar x = random_scalar(g, 5);
        CHECK(Scalar::parse(x.str(), 5) == x);
    }
    CHECK(Scalar::parse("1/2 - 1/6*r", 6) == Scalar(Rational(1, 2), 0, Rational(-1, 6), 0, 6));
    CHECK(Scalar::parse("i", 0) == Scalar::i());
    CHECK(Scalar(0).str() == "0");
    CHECK_THROWS(Scalar::parse("1 + x", 2));
}
