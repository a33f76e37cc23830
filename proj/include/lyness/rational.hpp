#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lyness {

using BigInt = mpz_class;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("rational: zero denominator") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational number, always in canonical form: positive denominator,
/// gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}  // NOLINT: implicit on purpose
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw DivisionByZero{};
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}

    // Accepts "n/d" or "n"; throws ParseError on malformed input.
    static Rational parse(std::string_view s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Canonical "n/d" string; bare "n" for integers.
    std::string str() const;
    // Decimal rendering for display only; `digits` fractional digits.
    std::string decimal(int digits) const;

    size_t num_bits() const { return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero{};
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rational normalize(const BigInt& n, const BigInt& d) { return Rational(n, d); }

/// Exact square root: r >= 0 with r*r == q, or nullopt when q is negative
/// or not a square of a rational.
std::optional<Rational> sqrt_exact(const Rational& q);

/// Exact integer square root check: r with r*r == n, if n is a perfect square.
std::optional<BigInt> isqrt_exact(const BigInt& n);

inline Rational pow_int(const Rational& base, long e) {
    Rational r = 1, b = base;
    bool inv = e < 0;
    unsigned long k = inv ? -static_cast<unsigned long>(e) : e;
    for (; k; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return inv ? Rational(1) / r : r;
}

}  // namespace lyness
