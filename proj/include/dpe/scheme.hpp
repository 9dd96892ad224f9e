#pragma once

#include <string>

#include <json.hpp>

#include "dpe/types.hpp"

namespace dpe {

enum class Metric { L1, Hamming };

/// A systematic DPE coding scheme: an encoder A' -> (A' | A'') over Sigma_q
/// and a decoder from read vectors to k-prefixes (or "e").
///
/// Instances are immutable after construction and safe to share across threads.
class Scheme {
public:
    virtual ~Scheme() = default;

    virtual std::string kind() const = 0;
    virtual Metric metric() const { return Metric::L1; }

    Int q() const { return q_; }
    Int ell() const { return ell_; }
    Int n() const { return n_; }
    Int k() const { return k_; }
    Int redundancy() const { return n_ - k_; }
    /// Q = ell (q-1)^2 + 1.
    Int output_alphabet() const { return dpe::output_alphabet(q_, ell_); }

    /// Designed correction budget and extra detection margin.
    virtual Int tau() const = 0;
    virtual Int sigma() const { return 0; }
    /// Erasures tolerated on top of tau errors (Hamming metric only).
    virtual Int rho() const { return 0; }
    /// Largest error magnitude per position the decoder is designed for
    /// (Hamming metric); Q - 1 means unbounded.
    virtual Int magnitude_bound() const { return output_alphabet() - 1; }

    virtual QMatrix encode(const QMatrix& aprime) const = 0;
    virtual DecodeOutcome decode(const ReadVector& y) const = 0;

    /// Parameters plus derived structure (locators, moduli), for sidecar files.
    virtual nlohmann::json describe() const = 0;

protected:
    Scheme(Int q, Int ell, Int n, Int k);
    void check_input(const QMatrix& aprime) const;
    void check_read(const ReadVector& y, bool allow_erasures) const;
    /// Every corrected prefix entry must lie in Sigma_Q; otherwise "e".
    DecodeOutcome finish(std::vector<Int> prefix) const;

private:
    Int q_, ell_, n_, k_;
};

}  // namespace dpe
