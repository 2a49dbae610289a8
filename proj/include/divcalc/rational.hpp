#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace divcalc {

// All arithmetic in this library is exact. Positivity predicates (nef, big,
// negative definite) live on cone boundaries, so there is no tolerance
// anywhere: a Rat is an exact rational, an Int an exact integer.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q, rem;
    divide_qr(numerator(r), denominator(r), q, rem);
    if (rem != 0 && numerator(r) < 0) --q;
    return q;
}

/// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// Serializes as "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) { return r.str(); }

/// Parses "p", "p/q" (optionally signed). Throws std::invalid_argument on
/// malformed input or a zero denominator. Result is canonicalized.
inline Rat rat_from_string(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(text)));
        }
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        if (den == 0) fail();
        return Rat(num, den);  // canonicalizes, normalizes sign
    } catch (const std::runtime_error&) {
        fail();
    }
    return Rat();  // unreachable
}

}  // namespace divcalc
