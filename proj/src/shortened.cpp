#include "dpe/shortened.hpp"

#include "dpe/errors.hpp"

namespace dpe {

namespace {

const Scheme& require(const std::shared_ptr<const Scheme>& base) {
    if (!base) throw ParameterError("shortening needs a base scheme");
    return *base;
}

}  // namespace

ShortenedScheme::ShortenedScheme(std::shared_ptr<const Scheme> base, Int drop)
    : Scheme(require(base).q(), base->ell(), base->n() - drop, base->k() - drop), base_(std::move(base)), drop_(drop) {
    if (drop < 0) throw ParameterError("cannot shorten by a negative amount");
}

QMatrix ShortenedScheme::encode(const QMatrix& aprime) const {
    check_input(aprime);
    const QMatrix full = base_->encode(aprime.hcat(QMatrix(q(), aprime.rows(), static_cast<size_t>(drop_))));
    const auto kept = static_cast<size_t>(k());
    const auto cut = static_cast<size_t>(base_->k());
    return full.columns(0, kept).hcat(full.columns(cut, full.cols() - cut));
}

DecodeOutcome ShortenedScheme::decode(const ReadVector& y) const {
    check_read(y, true);
    const auto kept = static_cast<long>(k());
    std::vector<Int> values(y.values.begin(), y.values.begin() + kept);
    std::vector<bool> erased(y.erased.begin(), y.erased.begin() + kept);
    values.insert(values.end(), static_cast<size_t>(drop_), 0);
    erased.insert(erased.end(), static_cast<size_t>(drop_), false);
    values.insert(values.end(), y.values.begin() + kept, y.values.end());
    erased.insert(erased.end(), y.erased.begin() + kept, y.erased.end());
    const auto outcome = base_->decode(ReadVector(std::move(values), std::move(erased)));
    if (!outcome.ok()) return outcome;
    const auto& prefix = outcome.prefix();
    return DecodeOutcome::success({prefix.begin(), prefix.begin() + kept});
}

nlohmann::json ShortenedScheme::describe() const {
    auto j = base_->describe();
    j["shorten"] = drop_;
    j["n"] = n();
    j["k"] = k();
    return j;
}

}  // namespace dpe
