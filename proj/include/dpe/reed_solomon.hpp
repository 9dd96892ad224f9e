#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dpe/prime_field.hpp"

namespace dpe {

/// Narrow-sense Reed-Solomon code over GF(p): position i has locator g^i for
/// a primitive g, and codewords satisfy sum_i c_i g^{i r} = 0 for r = 1..n-k.
class ReedSolomonCode {
public:
    ReedSolomonCode(Int p, Int length, Int dimension);

    const PrimeField& field() const { return field_; }
    Int n() const { return n_; }
    Int k() const { return k_; }
    Int distance() const { return n_ - k_ + 1; }
    Int locator(Int i) const { return locators_[static_cast<size_t>(i)]; }

    /// n-k syndrome components; all zero exactly for codewords.
    std::vector<Int> syndromes(std::span<const Int> word) const;
    /// Message in the first k positions, parity after it.
    std::vector<Int> encode(std::span<const Int> message) const;

    /// Errors-and-erasures decoding. Returns the error vector (field values;
    /// word - error is a codeword) or nullopt when more than `max_errors`
    /// errors would be needed or 2*errors + erasures >= distance.
    std::optional<std::vector<Int>> decode(std::span<const Int> word, const std::vector<bool>& erased,
                                           Int max_errors) const;

private:
    PrimeField field_;
    Int n_;
    Int k_;
    std::vector<Int> locators_;
    std::vector<Int> parity_inv_;  // (n-k) x (n-k)
};

}  // namespace dpe
