#pragma once

#include <memory>

#include "dpe/berlekamp.hpp"
#include "dpe/locators.hpp"
#include "dpe/scheme.hpp"

namespace dpe {

/// Row-wise Berlekamp syndromes of a matrix: entry (i, v) = A_i . H_v mod p.
struct SyndromeMatrix {
    size_t rows = 0;
    size_t cols = 0;
    Int p = 0;
    std::vector<Int> data;

    Int operator()(size_t i, size_t v) const { return data[i * cols + v]; }
    bool operator==(const SyndromeMatrix&) const = default;
};

SyndromeMatrix syndrome_matrix(const QMatrix& a, const BerlekampCode& code);

/// Base-q digit planes: plane j holds digit j of every entry.
std::vector<QMatrix> digit_split(const SyndromeMatrix& s, Int q, int m);

/// Multiple-error correction by re-encoding syndromes: the digit planes of
/// the Berlekamp syndrome matrix, their own syndrome digits over a smaller
/// prime, and 2 tau + 1 copies of those.
///
/// Raw mode takes an arbitrary l x n matrix and decodes the full n-prefix.
/// Trimmed mode first applies single-error encoding, drops the syndrome column
/// that encoding forces to zero, and decodes the shorter information prefix.
class RecursiveScheme final : public Scheme {
public:
    RecursiveScheme(Int q, Int ell, Int tau, Int p, bool trimmed = false, LocatorOptions opts = {});

    std::string kind() const override { return "recursive"; }
    Int tau() const override { return tau_; }

    Int p() const { return p_; }
    Int base_length() const { return loc_.n; }
    int m() const { return loc_.m; }
    bool trimmed() const { return trimmed_; }
    Int level2_length() const { return level2_.n(); }
    Int level2_prime() const { return level2_.field().p(); }
    int level2_digits() const { return m2_; }
    Int repetitions() const { return 2 * tau_ + 1; }
    /// Widths of the three appended blocks.
    Int level1_width() const { return level2_.n(); }
    Int level2_width() const { return tau_ * m2_; }
    const Locators& locators() const { return loc_; }
    const BerlekampCode& level1_code() const { return level1_; }
    const BerlekampCode& level2_code() const { return level2_; }

    QMatrix encode(const QMatrix& a) const override;
    DecodeOutcome decode(const ReadVector& y) const override;
    nlohmann::json describe() const override;

private:
    RecursiveScheme(Int q, Int ell, Int tau, Int p, bool trimmed, Locators loc);
    Int first_column() const { return trimmed_ ? 1 : 0; }

    Int tau_;
    Int p_;
    bool trimmed_;
    Locators loc_;
    BerlekampCode level1_;
    BerlekampCode level2_;
    int m2_;
};

/// Systematic Berlekamp encoding of each row reduced mod p, for q large
/// enough that a prime p in (2 tau, q] exists. Redundancy is tau symbols.
class LargeAlphabetScheme final : public Scheme {
public:
    /// n defaults to (p-1)/2, the longest code with locators in GF(p).
    LargeAlphabetScheme(Int q, Int ell, Int tau, std::optional<Int> n = std::nullopt);

    std::string kind() const override { return "large-alphabet"; }
    Int tau() const override { return code_.tau(); }
    Int p() const { return code_.field().p(); }
    const BerlekampCode& code() const { return code_; }

    QMatrix encode(const QMatrix& aprime) const override;
    DecodeOutcome decode(const ReadVector& y) const override;
    nlohmann::json describe() const override;

private:
    LargeAlphabetScheme(Int q, Int ell, BerlekampCode code);
    BerlekampCode code_;
};

/// Largest prime p <= q with p > 2 tau; 0 when none exists.
Int large_alphabet_prime(Int q, Int tau);

}  // namespace dpe
