#pragma once

#include <memory>

#include "dpe/scheme.hpp"

namespace dpe {

/// Shortens a scheme by pinning its last `drop` information columns to zero
/// and deleting them from both the input and the read vector.
class ShortenedScheme final : public Scheme {
public:
    ShortenedScheme(std::shared_ptr<const Scheme> base, Int drop);

    std::string kind() const override { return base_->kind(); }
    Metric metric() const override { return base_->metric(); }
    Int tau() const override { return base_->tau(); }
    Int sigma() const override { return base_->sigma(); }
    Int rho() const override { return base_->rho(); }
    Int magnitude_bound() const override { return base_->magnitude_bound(); }

    const Scheme& base() const { return *base_; }
    Int dropped() const { return drop_; }

    QMatrix encode(const QMatrix& aprime) const override;
    DecodeOutcome decode(const ReadVector& y) const override;
    nlohmann::json describe() const override;

private:
    std::shared_ptr<const Scheme> base_;
    Int drop_;
};

}  // namespace dpe
