#pragma once

#include <vector>

#include "dpe/arith.hpp"

namespace dpe {

/// GF(p) for an odd prime p < 2^32. Elements are represented as integers in [0, p).
class PrimeField {
public:
    explicit PrimeField(Int p);

    Int p() const { return p_; }

    Int reduce(Int x) const { return mod_floor(x, p_); }
    Int add(Int a, Int b) const { return reduce(a + b); }
    Int sub(Int a, Int b) const { return reduce(a - b); }
    Int neg(Int a) const { return reduce(-a); }
    Int mul(Int a, Int b) const { return mul_mod(a, b, p_); }
    Int pow(Int a, std::uint64_t e) const { return pow_mod(a, e, p_); }
    /// Throws DomainError when a == 0 (mod p).
    Int inv(Int a) const;
    Int div(Int a, Int b) const { return mul(a, inv(b)); }

    bool is_square(Int a) const;
    /// Square roots of a: empty, {0}, or {r, p - r} with r < p - r.
    std::vector<Int> sqrt(Int a) const;
    /// Both square-root routines, exposed so they can be checked against each other.
    std::vector<Int> sqrt_exhaustive(Int a) const;
    std::vector<Int> sqrt_tonelli_shanks(Int a) const;

    /// All x with x^2 + b x + c = 0, ascending.
    std::vector<Int> quadratic_roots(Int b, Int c) const;

    /// Lee-signed representative in [-(p-1)/2, (p-1)/2].
    Int signed_value(Int z) const;
    /// Lee absolute value |z| = min(z, p - z).
    Int lee_abs(Int z) const;

    /// Smallest generator of the multiplicative group.
    Int primitive_element() const;

    bool operator==(const PrimeField&) const = default;

private:
    Int p_;
};

/// Switch point between exhaustive and Tonelli-Shanks square roots.
inline constexpr Int kExhaustiveSqrtLimit = 10000;

}  // namespace dpe
