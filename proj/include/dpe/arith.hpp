#pragma once

// Exact integer utilities shared by every scheme: checked arithmetic,
// remaindering, base-q and mixed-radix digit expansions, the f_j(q)
// locator sequence, and the L1/Hamming metrics.

#include <cstdint>
#include <span>
#include <vector>

namespace dpe {

using Int = std::int64_t;

// Checked native arithmetic; overflow throws ConsistencyError.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, int exp);

/// Remainder in [0, modulus), also for negative x.
constexpr Int mod_floor(Int x, Int modulus) {
    Int r = x % modulus;
    return r < 0 ? r + modulus : r;
}

/// (a * b) mod modulus without intermediate overflow.
Int mul_mod(Int a, Int b, Int modulus);
Int pow_mod(Int base, std::uint64_t exp, Int modulus);

/// Smallest m with q^m >= x (x >= 1).
int ceil_log(Int q, Int x);

struct DigitVector {
    std::vector<Int> digits;  // least-significant first
    Int base = 2;
};

/// Base-q expansion of 0 <= x < q^m into exactly m digits.
DigitVector base_q_digits(Int x, Int q, int m);
Int base_q_value(const DigitVector& d);

/// f_j(q) = (q^{j+1} + (-1)^j) / (q + 1), for even q > 2.
Int f_seq(Int q, int j);
std::vector<Int> f_weights(Int q, int m);

/// Digits b_j in [0, q) with sum b_j * weights[j] = x. Weights must be the
/// f-sequence (or powers of q); extraction is most-significant first with each
/// digit capped at q-1.
DigitVector mixed_radix_digits(Int x, Int q, std::span<const Int> weights);
Int mixed_radix_value(std::span<const Int> digits, std::span<const Int> weights);

Int l1_norm(std::span<const Int> e);
Int hamming_weight(std::span<const Int> e);
Int hamming_dist(std::span<const Int> x, std::span<const Int> y);
Int l1_dist(std::span<const Int> x, std::span<const Int> y);

/// Number of integer points in the Manhattan sphere of radius t in Z^n.
Int sphere_volume_l1(Int n, Int t);
Int binomial(Int n, Int k);

/// Deterministic primality for 0 <= p < 2^32.
bool is_prime(Int p);
Int next_prime_at_least(Int x);
Int largest_prime_at_most(Int x);  // 0 if none >= 2

}  // namespace dpe
