#pragma once

#include "dpe/reed_solomon.hpp"
#include "dpe/scheme.hpp"

namespace dpe {

struct HammingParams {
    Int q = 2;
    Int ell = 1;
    Int k = 1;
    Int tau = 1;
    /// Largest error magnitude per position; 0 selects ell (q-1)^2.
    Int theta = 0;
    Int sigma = 0;
    Int rho = 0;
    /// 0 selects the smallest prime > 2 theta that fits the inner code.
    Int p = 0;
};

/// Hamming-metric scheme: the redundancy digits are packed base q into
/// GF(p) symbols so that each encoded row maps onto a Reed-Solomon codeword.
/// The A'' columns are block-major: digit j of inner redundancy symbol v sits
/// at column k + v + j (n_inner - k).
class HammingScheme final : public Scheme {
public:
    explicit HammingScheme(HammingParams params);

    std::string kind() const override { return "hamming"; }
    Metric metric() const override { return Metric::Hamming; }
    Int tau() const override { return params_.tau; }
    Int sigma() const override { return params_.sigma; }
    Int rho() const override { return params_.rho; }
    Int magnitude_bound() const override { return params_.theta; }
    Int theta() const { return params_.theta; }
    Int p() const { return params_.p; }
    int m() const { return m_; }
    Int inner_length() const { return inner_.n(); }
    const ReedSolomonCode& inner() const { return inner_; }
    const HammingParams& params() const { return params_; }

    /// Packs a length-n integer vector into n_inner field symbols.
    std::vector<Int> lambda(std::span<const Int> x) const;
    /// Field positions fed by erased entries of y.
    std::vector<bool> lambda_erasures(const ReadVector& y) const;

    QMatrix encode(const QMatrix& aprime) const override;
    DecodeOutcome decode(const ReadVector& y) const override;
    nlohmann::json describe() const override;

private:
    struct Resolved {};
    HammingScheme(Resolved, HammingParams params);
    HammingParams params_;
    int m_;
    ReedSolomonCode inner_;
};

/// Resolves theta and p defaults and checks p > 2 theta and n_inner <= p - 1.
HammingParams resolve_hamming_params(HammingParams params);

/// Upper bound ceil(1 + (p-1)(2 tau - 1)/p) * ceil(log_p n_inner) * ceil(log_q p)
/// on the redundancy of a BCH-based construction.
Int redundancy_bound_hamming(Int q, Int p, Int tau, Int n_inner);

}  // namespace dpe
