#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "loday/error.hpp"

namespace loday {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction. Always stored in lowest terms with a
/// positive denominator, so equality is structural. There is deliberately no
/// construction from or conversion to floating point.
class Rational {
  public:
    Rational() = default;

    Rational(std::integral auto value)
      : v_(static_cast<long long>(value)) {}

    Rational(std::integral auto num, std::integral auto den) {
        long long n = static_cast<long long>(num);
        long long d = static_cast<long long>(den);
        if (d == 0) { throw Error("Rational: zero denominator"); }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        v_ = boost::multiprecision::cpp_rational(n, d);
    }

    explicit Rational(BigInt num, BigInt den = 1) {
        if (den == 0) { throw Error("Rational: zero denominator"); }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    Rational(std::floating_point auto) = delete;

    /// Parses "a", "-a" or "a/b". Whitespace is not accepted.
    static Rational parse(std::string_view text) {
        if (text.empty()) { throw ParseError("Rational: empty string"); }
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rational(BigInt(std::string(text)));
            }
            BigInt num(std::string(text.substr(0, slash)));
            BigInt den(std::string(text.substr(slash + 1)));
            if (den == 0) { throw ParseError("Rational: zero denominator in \"" + std::string(text) + "\""); }
            return Rational(std::move(num), std::move(den));
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &) {
            throw ParseError("Rational: cannot parse \"" + std::string(text) + "\"");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    /// Renders "a" when the denominator is 1, otherwise "a/b".
    std::string str() const {
        if (denominator() == 1) { return numerator().str(); }
        return numerator().str() + "/" + denominator().str();
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational &operator+=(const Rational &o) {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) { throw Error("Rational: division by zero"); }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

  private:
    boost::multiprecision::cpp_rational v_;
};

/// 1/k! as an exact rational.
inline Rational inverse_factorial(unsigned k) {
    BigInt f = 1;
    for (unsigned i = 2; i <= k; ++i) { f *= i; }
    return Rational(BigInt(1), f);
}

} // namespace loday
