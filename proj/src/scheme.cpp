#include "dpe/scheme.hpp"

#include "dpe/errors.hpp"

namespace dpe {

Scheme::Scheme(Int q, Int ell, Int n, Int k) : q_(q), ell_(ell), n_(n), k_(k) {
    if (q < 2) throw ParameterError("q must be >= 2");
    if (ell < 1) throw ParameterError("ell must be >= 1");
    if (k < 1 || k >= n)
        throw ParameterError("scheme needs 1 <= k < n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
}

void Scheme::check_input(const QMatrix& aprime) const {
    if (aprime.q() != q_)
        throw ParameterError("input matrix alphabet q=" + std::to_string(aprime.q()) + " does not match scheme q=" +
                             std::to_string(q_));
    if (static_cast<Int>(aprime.cols()) != k_)
        throw ParameterError("input matrix has " + std::to_string(aprime.cols()) + " columns, scheme dimension is " +
                             std::to_string(k_));
}

void Scheme::check_read(const ReadVector& y, bool allow_erasures) const {
    if (static_cast<Int>(y.size()) != n_)
        throw ParameterError("read vector has length " + std::to_string(y.size()) + ", scheme length is " +
                             std::to_string(n_));
    if (!allow_erasures && y.has_erasures())
        throw ParameterError(kind() + " decoding does not accept erasures; use the hamming scheme");
}

DecodeOutcome Scheme::finish(std::vector<Int> prefix) const {
    const Int Q = output_alphabet();
    for (Int v : prefix)
        if (v < 0 || v >= Q) return DecodeOutcome::failure();
    return DecodeOutcome::success(std::move(prefix));
}

}  // namespace dpe
