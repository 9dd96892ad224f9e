#include "dpe/types.hpp"

#include <algorithm>
#include <string>

#include "dpe/errors.hpp"

namespace dpe {

Int output_alphabet(Int q, Int ell) {
    return checked_add(checked_mul(ell, checked_mul(q - 1, q - 1)), 1);
}

QMatrix::QMatrix(Int q, size_t rows, size_t cols) : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (q < 2) throw ParameterError("alphabet size q must be >= 2");
}

QMatrix::QMatrix(Int q, size_t rows, size_t cols, std::vector<Int> data)
    : q_(q), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (q < 2) throw ParameterError("alphabet size q must be >= 2");
    if (data_.size() != rows * cols)
        throw ParameterError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                             std::to_string(rows * cols));
    for (size_t idx = 0; idx < data_.size(); ++idx) {
        if (data_[idx] < 0 || data_[idx] >= q)
            throw ParameterError("matrix entry (" + std::to_string(idx / std::max<size_t>(cols, 1)) + "," +
                                 std::to_string(idx % std::max<size_t>(cols, 1)) + ") = " +
                                 std::to_string(data_[idx]) + " is outside Sigma_" + std::to_string(q));
    }
}

void QMatrix::set(size_t i, size_t j, Int value) {
    if (value < 0 || value >= q_)
        throw ParameterError("value " + std::to_string(value) + " is outside Sigma_" + std::to_string(q_));
    data_[i * cols_ + j] = value;
}

QMatrix QMatrix::columns(size_t first, size_t count) const {
    if (first + count > cols_) throw ParameterError("column range out of bounds");
    QMatrix out(q_, rows_, count);
    for (size_t i = 0; i < rows_; ++i)
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_ + first), count,
                    out.data_.begin() + static_cast<std::ptrdiff_t>(i * count));
    return out;
}

QMatrix QMatrix::hcat(const QMatrix& right) const {
    if (right.q_ != q_ || right.rows_ != rows_) throw ParameterError("hcat: shape or alphabet mismatch");
    QMatrix out(q_, rows_, cols_ + right.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        auto dst = out.data_.begin() + static_cast<std::ptrdiff_t>(i * out.cols_);
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_), cols_, dst);
        std::copy_n(right.data_.begin() + static_cast<std::ptrdiff_t>(i * right.cols_), right.cols_,
                    dst + static_cast<std::ptrdiff_t>(cols_));
    }
    return out;
}

ReadVector::ReadVector(std::vector<Int> v) : values(std::move(v)), erased(values.size(), false) {}

ReadVector::ReadVector(std::vector<Int> v, std::vector<bool> erasures)
    : values(std::move(v)), erased(std::move(erasures)) {
    if (erased.size() != values.size()) throw ParameterError("erasure mask length mismatch");
    for (size_t j = 0; j < values.size(); ++j)
        if (erased[j]) values[j] = 0;
}

bool ReadVector::has_erasures() const { return std::find(erased.begin(), erased.end(), true) != erased.end(); }

size_t ReadVector::erasure_count() const {
    return static_cast<size_t>(std::count(erased.begin(), erased.end(), true));
}

void ReadVector::coerce(Int Q) {
    for (size_t j = 0; j < values.size(); ++j)
        if (!erased[j]) values[j] = std::clamp<Int>(values[j], 0, Q - 1);
}

}  // namespace dpe
