#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dpe/arith.hpp"

namespace dpe {

/// Output alphabet size Q = ell (q-1)^2 + 1 of a DPE with ell rows over Sigma_q.
Int output_alphabet(Int q, Int ell);

/// An ell x n integer matrix with entries in Sigma_q, stored row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(Int q, size_t rows, size_t cols);  // zero matrix
    QMatrix(Int q, size_t rows, size_t cols, std::vector<Int> data);

    Int q() const { return q_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    /// Checked write; the value must lie in Sigma_q.
    void set(size_t i, size_t j, Int value);

    std::span<const Int> row(size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Int>& data() const { return data_; }

    /// Columns [first, first + count).
    QMatrix columns(size_t first, size_t count) const;
    /// Side-by-side concatenation; both operands must share q and row count.
    QMatrix hcat(const QMatrix& right) const;

    bool operator==(const QMatrix&) const = default;

private:
    Int q_ = 2;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Int> data_;
};

/// The read vector y of a DPE: integers plus per-entry erasure flags.
/// Erased entries hold 0 and must not be interpreted.
struct ReadVector {
    std::vector<Int> values;
    std::vector<bool> erased;

    ReadVector() = default;
    explicit ReadVector(std::vector<Int> v);
    ReadVector(std::vector<Int> v, std::vector<bool> erasures);

    size_t size() const { return values.size(); }
    bool has_erasures() const;
    size_t erasure_count() const;
    /// Clamps non-erased entries into [0, Q-1].
    void coerce(Int Q);
};

/// Either a recovered k-prefix or the failure sentinel "e".
class DecodeOutcome {
public:
    static DecodeOutcome success(std::vector<Int> prefix) { return DecodeOutcome(std::move(prefix)); }
    static DecodeOutcome failure() { return DecodeOutcome(); }

    bool ok() const { return prefix_.has_value(); }
    bool is_failure() const { return !ok(); }
    /// Precondition: ok().
    const std::vector<Int>& prefix() const { return *prefix_; }

    bool operator==(const DecodeOutcome&) const = default;

private:
    DecodeOutcome() = default;
    explicit DecodeOutcome(std::vector<Int> p) : prefix_(std::move(p)) {}
    std::optional<std::vector<Int>> prefix_;
};

}  // namespace dpe
