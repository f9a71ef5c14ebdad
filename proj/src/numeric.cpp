#include "hkg/numeric.hpp"

#include "hkg/errors.hpp"

#include <cctype>
#include <limits>

namespace hkg {

Int int_pow(const Int& base, unsigned exp) {
    Int r = 1;
    Int b = base;
    while (exp != 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a > 0) == (b > 0))) ++q;
    return q;
}

Int mod_inverse(Int a, const Int& m) {
    // extended Euclid on (a mod m, m)
    a %= m;
    if (a < 0) a += m;
    Int r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw Error("mod_inverse: arguments are not coprime");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::pair<Int, unsigned>> as_prime_power(const Int& q) {
    if (q < 2) return std::nullopt;
    Int p = 2;
    while (p * p <= q) {
        if (q % p == 0) break;
        p += (p == 2) ? 1 : 2;
    }
    if (p * p > q) return {{q, 1u}};  // q itself is prime
    Int rest = q;
    unsigned s = 0;
    while (rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (rest != 1) return std::nullopt;
    return {{p, s}};
}

std::optional<std::int64_t> to_int64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) return std::nullopt;
    return v.convert_to<std::int64_t>();
}

std::string format_rational(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(parse_int(text));
        Int num = parse_int(text.substr(0, slash));
        Int den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + text);
        return Rat(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational: " + text);
    }
}

Int parse_int(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) throw ParseError("malformed integer: " + text);
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("malformed integer: " + text);
    }
    return Int(text);
}

}  // namespace hkg
