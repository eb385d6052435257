#pragma once

#include "scho/rational.hpp"

namespace scho {

// A weight (lambda(h), lambda(z)); the z-value is the central charge.
struct Weight {
    Rational h_val;
    Rational z_val;

    Weight() = default;
    Weight(Rational h, Rational z) : h_val(std::move(h)), z_val(std::move(z)) {}

    bool operator==(const Weight&) const = default;

    bool zero_charge() const { return z_val == 0; }
    bool integral() const { return is_integer(h_val); }
    bool half_integral() const { return is_half_integer(h_val); }

    // rho-shifted reflection r.lambda = -lambda - 3 h_check (z unchanged).
    Weight dot_reflect() const { return Weight(-h_val - 3, z_val); }

    // lambda - k h_check.
    Weight below(long k) const { return Weight(h_val - k, z_val); }
};

// Scalar action of the Casimir on the Verma of the given weight, plus the charge.
struct CentralCharacter {
    Rational theta;
    Rational charge;

    bool operator==(const CentralCharacter&) const = default;
};

}  // namespace scho
