#include "lyness/rational.hpp"

#include <cctype>

namespace lyness {

Rational Rational::parse(std::string_view s) {
    auto valid_int = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string str(s);
    auto slash = str.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(str)) throw ParseError("bad rational: '" + str + "'");
        return Rational(BigInt(str));
    }
    std::string n = str.substr(0, slash), d = str.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d)) throw ParseError("bad rational: '" + str + "'");
    BigInt dd(d);
    if (dd == 0) throw ParseError("bad rational (zero denominator): '" + str + "'");
    return Rational(BigInt(n), dd);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt n = num() * scale, d = den();
    BigInt q = n / d, r = n % d;
    // round half away from zero
    if (2 * abs(r) >= d) q += (n < 0 ? -1 : 1);
    bool neg = q < 0;
    std::string sdig = BigInt(abs(q)).get_str();
    if (static_cast<int>(sdig.size()) <= digits)
        sdig.insert(0, digits + 1 - sdig.size(), '0');
    if (digits > 0) sdig.insert(sdig.size() - digits, ".");
    return (neg ? "-" : "") + sdig;
}

std::optional<BigInt> isqrt_exact(const BigInt& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> sqrt_exact(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    // num and den are coprime, so q is a square iff both are.
    auto rn = isqrt_exact(q.num());
    if (!rn) return std::nullopt;
    auto rd = isqrt_exact(q.den());
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

}  // namespace lyness
