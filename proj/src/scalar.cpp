#include "lie/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace lie {

Scalar::Scalar(Rational a, Rational b, Rational c, Rational d, std::uint32_t p)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), p_(p) {
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
    if (has_root() && p_ < 2) throw std::invalid_argument("Scalar: sqrt part needs p >= 2");
}

Scalar Scalar::i() { return Scalar(0, 1, 0, 0, 0); }

Scalar Scalar::root(std::uint32_t p) { return Scalar(0, 0, 1, 0, p); }

std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t m) {
    std::uint64_t s = 1, rest = m;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
        while (rest % (f * f) == 0) {
            rest /= f * f;
            s *= f;
        }
    }
    return {s, rest};
}

Scalar Scalar::sqrt_of(std::uint64_t m) {
    auto [s, rest] = split_square(m);
    if (rest == 1) return Scalar(Rational(static_cast<long>(s)));
    return Scalar(0, 0, Rational(static_cast<long>(s)), 0, static_cast<std::uint32_t>(rest));
}

std::uint32_t Scalar::join(const Scalar& o) const {
    std::uint32_t x = p(), y = o.p();
    if (x && y && x != y) throw FieldMismatch("Scalar: values from Q(i,sqrt " + std::to_string(x) +
                                              ") and Q(i,sqrt " + std::to_string(y) + ") mixed");
    return x ? x : y;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    r.c_ = -r.c_;
    r.d_ = -r.d_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    std::uint32_t p = join(o);
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    p_ = p;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    std::uint32_t p = join(o);
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    p_ = p;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    std::uint32_t p = join(o);
    if (is_rational() && o.is_rational()) {
        a_ *= o.a_;
        return *this;
    }
    if (o.is_rational()) {
        a_ *= o.a_;
        b_ *= o.a_;
        c_ *= o.a_;
        d_ *= o.a_;
        return *this;
    }
    // x = u + i v with u = a + c r, v = b + d r, r^2 = p.
    Rational P(static_cast<unsigned long>(p));
    Rational na = a_ * o.a_ + P * c_ * o.c_ - b_ * o.b_ - P * d_ * o.d_;
    Rational nc = a_ * o.c_ + c_ * o.a_ - b_ * o.d_ - d_ * o.b_;
    Rational nb = a_ * o.b_ + P * c_ * o.d_ + b_ * o.a_ + P * d_ * o.c_;
    Rational nd = a_ * o.d_ + c_ * o.b_ + b_ * o.c_ + d_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    c_ = std::move(nc);
    d_ = std::move(nd);
    p_ = p;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (is_rational()) return Scalar(Rational(1) / a_);
    Rational P(static_cast<unsigned long>(p_));
    // u^2 + v^2 = e + f r
    Rational e = a_ * a_ + P * c_ * c_ + b_ * b_ + P * d_ * d_;
    Rational f = 2 * (a_ * c_ + b_ * d_);
    Rational n = e * e - P * f * f;
    Scalar inv_norm(e / n, 0, -f / n, 0, p_);
    if (!inv_norm.has_root()) inv_norm = Scalar(e / n);
    return conj(*this) * inv_norm;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_rational()) {
        if (sgn(o.a_) == 0) throw std::domain_error("Scalar: division by zero");
        a_ /= o.a_;
        b_ /= o.a_;
        c_ /= o.a_;
        d_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.has_root() && y.has_root() && x.p_ != y.p_) return false;
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

Scalar conj(const Scalar& x) { return Scalar(x.a(), -x.b(), x.c(), -x.d(), x.p()); }

Scalar real_part(const Scalar& x) { return Scalar(x.a(), 0, x.c(), 0, x.p()); }

Scalar imag_part(const Scalar& x) { return Scalar(x.b(), 0, x.d(), 0, x.p()); }

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    auto term = [&out](const Rational& q, const char* unit) {
        if (sgn(q) == 0) return;
        if (out.empty()) {
            if (sgn(q) < 0) out += "-";
        } else {
            out += sgn(q) < 0 ? " - " : " + ";
        }
        out += Rational(abs(q)).get_str();
        out += unit;
    };
    term(a_, "");
    term(b_, "*i");
    term(c_, "*r");
    term(d_, "*i*r");
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

namespace {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Scalar::parse: empty coefficient");
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/')
            throw std::invalid_argument("Scalar::parse: bad coefficient '" + s + "'");
    Rational q(s);
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text, std::uint32_t p) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("Scalar::parse: empty string");
    Rational parts[4];
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string t = s.substr(pos, end - pos);
        if (t.empty()) throw std::invalid_argument("Scalar::parse: dangling sign in '" + text + "'");
        int slot = 0;
        auto strip = [&t](const std::string& suffix) {
            if (t.size() >= suffix.size() && t.compare(t.size() - suffix.size(), suffix.size(), suffix) == 0) {
                t.erase(t.size() - suffix.size());
                return true;
            }
            return false;
        };
        if (t == "i") t = "1*i";
        if (t == "r") t = "1*r";
        if (t == "i*r") t = "1*i*r";
        if (strip("*i*r")) slot = 3;
        else if (strip("*r")) slot = 2;
        else if (strip("*i")) slot = 1;
        Rational q = parse_rational(t);
        parts[slot] += sign * q;
        pos = end;
    }
    if ((sgn(parts[2]) || sgn(parts[3])) && p < 2)
        throw std::invalid_argument("Scalar::parse: sqrt term without a field parameter p");
    return Scalar(parts[0], parts[1], parts[2], parts[3], (sgn(parts[2]) || sgn(parts[3])) ? p : 0);
}

}  // namespace lie
