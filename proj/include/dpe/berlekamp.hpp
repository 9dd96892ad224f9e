#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dpe/prime_field.hpp"

namespace dpe {

/// Components s_v = sum_j y_j beta_j^{2v+1} mod p, v = 0..tau-1.
using LeeSyndrome = std::vector<Int>;
/// Signed integer error values, one per code position.
using ErrorVector = std::vector<Int>;

struct BerlekampOptions {
    /// Accept locators with beta_i + beta_j == 0 (mod p). Such pairs make some
    /// syndromes ambiguous; callers use this only when the colliding positions
    /// are redundancy positions whose correction is discarded.
    bool allow_opposite_pairs = false;
};

/// Enumeration limit for the exhaustive decoder. DPE_CODEC_GUARD_OVERRIDE,
/// when set to a positive integer, replaces it.
Int oracle_guard(Int default_limit);
inline constexpr Int kBerlekampOracleGuard = 10'000'000;

/// Lee-metric Berlekamp code over GF(p) with parity checks at the odd powers
/// 1, 3, ..., 2 tau - 1 of the locators.
class BerlekampCode {
public:
    BerlekampCode(Int p, std::vector<Int> beta, Int tau, BerlekampOptions opts = {});

    const PrimeField& field() const { return field_; }
    const std::vector<Int>& beta() const { return beta_; }
    Int tau() const { return tau_; }
    Int n() const { return static_cast<Int>(beta_.size()); }
    /// Message length of systematic_encode: n - tau.
    Int k() const { return n() - tau_; }

    /// Parity-check entry beta_j^{2v+1}.
    Int check(Int v, Int j) const { return checks_[static_cast<size_t>(v * n() + j)]; }

    LeeSyndrome syndrome(std::span<const Int> y) const;

    /// Dispatches on tau: direct lookup, quadratic solving, or exhaustive search.
    std::optional<ErrorVector> decode(const LeeSyndrome& s) const;
    std::optional<ErrorVector> decode_tau1(const LeeSyndrome& s) const;
    std::optional<ErrorVector> decode_tau2(const LeeSyndrome& s) const;
    /// Searches every error of L1 weight <= budget. Throws GuardError when the
    /// search space exceeds oracle_guard(kBerlekampOracleGuard) and
    /// ConsistencyError if two errors share the syndrome.
    std::optional<ErrorVector> decode_oracle(const LeeSyndrome& s, Int budget) const;

    /// Codeword with `message` in the first k positions and tau field symbols after it.
    std::vector<Int> systematic_encode(std::span<const Int> message) const;

private:
    std::optional<ErrorVector> verified(ErrorVector e, const LeeSyndrome& s) const;
    long index_of(Int value) const;

    PrimeField field_;
    std::vector<Int> beta_;
    Int tau_;
    std::vector<Int> checks_;        // tau x n
    std::vector<long> position_;     // field value -> locator index or -1
    std::vector<Int> redundancy_inv_;  // tau x tau inverse of the redundancy columns, if invertible
};

/// Solves M x = b over GF(p) for square M (row-major). Returns nullopt when singular.
std::optional<std::vector<Int>> solve_linear(const PrimeField& F, std::vector<Int> m, std::vector<Int> b, size_t dim);
/// Inverse of a square matrix over GF(p), or nullopt when singular.
std::optional<std::vector<Int>> invert_matrix(const PrimeField& F, std::vector<Int> m, size_t dim);

}  // namespace dpe
