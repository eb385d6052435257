#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace scho {

// Exact rational scalar used everywhere in the library.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q" (arbitrary precision). Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical text form: "p" or "p/q" with q > 1.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);
bool is_half_integer(const Rational& r);  // in Z + 1/2, i.e. strictly half-integral

// floor(r) as long (value assumed to fit).
long floor_long(const Rational& r);

}  // namespace scho
