// Elements of Q(i, sqrt p): a + b*i + c*sqrt(p) + d*i*sqrt(p).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace lie {

using Rational = mpq_class;

struct FieldMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}
    Scalar(const Rational& v) : a_(v) { a_.canonicalize(); }
    Scalar(Rational a, Rational b, Rational c, Rational d, std::uint32_t p);

    static Scalar i();
    // sqrt(p) itself; p must be squarefree and > 1.
    static Scalar root(std::uint32_t p);
    // q * sqrt(m) with sqrt(m) reduced to s*sqrt(p), p squarefree.
    static Scalar sqrt_of(std::uint64_t m);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    // 0 when the value has no sqrt component.
    std::uint32_t p() const { return has_root() ? p_ : 0; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && !has_root(); }
    bool is_real() const { return sgn(b_) == 0 && sgn(d_) == 0; }
    bool is_rational() const { return sgn(b_) == 0 && !has_root(); }
    bool has_root() const { return sgn(c_) != 0 || sgn(d_) != 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar inverse() const;

    std::string str() const;
    static Scalar parse(const std::string& text, std::uint32_t p);

private:
    std::uint32_t join(const Scalar& o) const;

    Rational a_, b_, c_, d_;
    std::uint32_t p_ = 0;
};

Scalar conj(const Scalar& x);
Scalar real_part(const Scalar& x);
Scalar imag_part(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

// Largest s with s*s | m, and the squarefree rest.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t m);

}  // namespace lie
