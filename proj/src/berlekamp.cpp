#include "dpe/berlekamp.hpp"

#include <cstdlib>
#include <string>

#include "dpe/errors.hpp"

namespace dpe {

Int oracle_guard(Int default_limit) {
    const char* raw = std::getenv("DPE_CODEC_GUARD_OVERRIDE");
    if (raw == nullptr || *raw == '\0') return default_limit;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v <= 0)
        throw ParameterError(std::string("DPE_CODEC_GUARD_OVERRIDE must be a positive integer, got '") + raw + "'");
    return std::max<Int>(default_limit, v);
}

std::optional<std::vector<Int>> solve_linear(const PrimeField& F, std::vector<Int> m, std::vector<Int> b,
                                             size_t dim) {
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        while (pivot < dim && m[pivot * dim + col] == 0) ++pivot;
        if (pivot == dim) return std::nullopt;
        if (pivot != col) {
            for (size_t c = 0; c < dim; ++c) std::swap(m[pivot * dim + c], m[col * dim + c]);
            std::swap(b[pivot], b[col]);
        }
        const Int inv = F.inv(m[col * dim + col]);
        for (size_t c = 0; c < dim; ++c) m[col * dim + c] = F.mul(m[col * dim + c], inv);
        b[col] = F.mul(b[col], inv);
        for (size_t r = 0; r < dim; ++r) {
            if (r == col || m[r * dim + col] == 0) continue;
            const Int factor = m[r * dim + col];
            for (size_t c = 0; c < dim; ++c) m[r * dim + c] = F.sub(m[r * dim + c], F.mul(factor, m[col * dim + c]));
            b[r] = F.sub(b[r], F.mul(factor, b[col]));
        }
    }
    return b;
}

std::optional<std::vector<Int>> invert_matrix(const PrimeField& F, std::vector<Int> m, size_t dim) {
    std::vector<Int> inverse(dim * dim, 0);
    for (size_t c = 0; c < dim; ++c) {
        std::vector<Int> unit(dim, 0);
        unit[c] = 1;
        auto column = solve_linear(F, m, unit, dim);
        if (!column) return std::nullopt;
        for (size_t r = 0; r < dim; ++r) inverse[r * dim + c] = (*column)[r];
    }
    return inverse;
}

BerlekampCode::BerlekampCode(Int p, std::vector<Int> beta, Int tau, BerlekampOptions opts)
    : field_(p), beta_(std::move(beta)), tau_(tau), position_(static_cast<size_t>(p), -1) {
    if (tau < 1) throw ParameterError("Berlekamp code needs tau >= 1");
    if (2 * tau >= p)
        throw ParameterError("Berlekamp code needs 2*tau < p (tau=" + std::to_string(tau) + ", p=" + std::to_string(p) +
                             ")");
    if (beta_.empty()) throw ParameterError("Berlekamp code needs at least one locator");
    for (size_t j = 0; j < beta_.size(); ++j) {
        const Int b = beta_[j];
        if (b <= 0 || b >= p) throw ParameterError("locator " + std::to_string(b) + " is not a nonzero element mod p");
        if (position_[b] >= 0) throw ParameterError("locator " + std::to_string(b) + " repeats");
        if (!opts.allow_opposite_pairs && (2 * b == p || position_[p - b] >= 0))
            throw ParameterError("locators " + std::to_string(b) + " and " + std::to_string(p - b) +
                                 " are negatives of each other mod " + std::to_string(p));
        position_[b] = static_cast<long>(j);
    }
    checks_.resize(static_cast<size_t>(tau_ * n()));
    for (Int v = 0; v < tau_; ++v)
        for (Int j = 0; j < n(); ++j)
            checks_[static_cast<size_t>(v * n() + j)] = field_.pow(beta_[j], static_cast<std::uint64_t>(2 * v + 1));
    if (n() >= tau_) {
        const auto t = static_cast<size_t>(tau_);
        std::vector<Int> r(t * t);
        for (size_t v = 0; v < t; ++v)
            for (size_t c = 0; c < t; ++c) r[v * t + c] = check(static_cast<Int>(v), k() + static_cast<Int>(c));
        if (auto inv = invert_matrix(field_, std::move(r), t)) redundancy_inv_ = std::move(*inv);
    }
}

long BerlekampCode::index_of(Int value) const {
    if (value <= 0 || value >= field_.p()) return -1;
    return position_[static_cast<size_t>(value)];
}

LeeSyndrome BerlekampCode::syndrome(std::span<const Int> y) const {
    if (static_cast<Int>(y.size()) != n())
        throw ParameterError("word length " + std::to_string(y.size()) + " does not match code length " +
                             std::to_string(n()));
    LeeSyndrome s(static_cast<size_t>(tau_), 0);
    for (Int v = 0; v < tau_; ++v) {
        Int acc = 0;
        for (Int j = 0; j < n(); ++j) acc = field_.add(acc, field_.mul(y[j], check(v, j)));
        s[v] = acc;
    }
    return s;
}

std::optional<ErrorVector> BerlekampCode::verified(ErrorVector e, const LeeSyndrome& s) const {
    if (syndrome(e) != s) return std::nullopt;
    return e;
}

std::optional<ErrorVector> BerlekampCode::decode(const LeeSyndrome& s) const {
    if (static_cast<Int>(s.size()) != tau_) throw ParameterError("syndrome has the wrong number of components");
    if (tau_ == 1) return decode_tau1(s);
    if (tau_ == 2) return decode_tau2(s);
    return decode_oracle(s, tau_);
}

std::optional<ErrorVector> BerlekampCode::decode_tau1(const LeeSyndrome& s) const {
    if (s.empty()) throw ParameterError("empty syndrome");
    ErrorVector e(static_cast<size_t>(n()), 0);
    const Int s1 = field_.reduce(s[0]);
    if (s1 == 0) return e;
    if (long j = index_of(s1); j >= 0) {
        e[j] = 1;
        return e;
    }
    if (long j = index_of(field_.neg(s1)); j >= 0) {
        e[j] = -1;
        return e;
    }
    return std::nullopt;
}

std::optional<ErrorVector> BerlekampCode::decode_tau2(const LeeSyndrome& s) const {
    if (s.size() < 2) throw ParameterError("tau=2 decoding needs two syndrome components");
    const PrimeField& F = field_;
    const Int s1 = F.reduce(s[0]);
    const Int s2 = F.reduce(s[1]);
    const LeeSyndrome target{s1, s2};
    ErrorVector e(static_cast<size_t>(n()), 0);
    if (s1 == 0) {
        if (s2 == 0) return e;
        // e_i beta_i + e_j beta_j = 0 cannot happen for admissible locators.
        return std::nullopt;
    }
    // One error of value +-1.
    if (s2 == F.pow(s1, 3)) {
        if (long j = index_of(s1); j >= 0) {
            e[j] = 1;
            return verified(e, target);
        }
        if (long j = index_of(F.neg(s1)); j >= 0) {
            e[j] = -1;
            return verified(e, target);
        }
        return std::nullopt;
    }
    // One error of value +-2: s1 = +-2 beta_j, s2 = +-2 beta_j^3.
    const Int half = F.div(s1, 2);
    if (s2 == F.mul(2, F.pow(half, 3))) {
        if (long j = index_of(half); j >= 0) {
            e[j] = 2;
            return verified(e, target);
        }
        if (long j = index_of(F.neg(half)); j >= 0) {
            e[j] = -2;
            return verified(e, target);
        }
    }
    // Two errors of value +-1: the roots of x^2 - s1 x + (s1^2 - s2/s1)/3 are e_i beta_i, e_j beta_j.
    const Int c = F.mul(F.inv(3), F.sub(F.mul(s1, s1), F.div(s2, s1)));
    const auto roots = F.quadratic_roots(F.neg(s1), c);
    if (roots.size() != 2) return std::nullopt;
    for (Int r : roots) {
        long j = index_of(r);
        Int value = 1;
        if (j < 0) {
            j = index_of(F.neg(r));
            value = -1;
        }
        if (j < 0 || e[j] != 0) return std::nullopt;
        e[j] = value;
    }
    return verified(e, target);
}

namespace {

struct OracleSearch {
    const BerlekampCode& code;
    const LeeSyndrome& target;
    ErrorVector current;
    std::optional<ErrorVector> found;
    LeeSyndrome acc;

    void run(Int j, Int budget) {
        if (acc == target) record();
        if (budget == 0) return;
        const PrimeField& F = code.field();
        for (Int pos = j; pos < code.n(); ++pos) {
            for (Int mag = 1; mag <= budget; ++mag) {
                for (Int sign : {1, -1}) {
                    const Int v = sign * mag;
                    current[pos] = v;
                    for (Int c = 0; c < code.tau(); ++c) acc[c] = F.add(acc[c], F.mul(v, code.check(c, pos)));
                    run(pos + 1, budget - mag);
                    for (Int c = 0; c < code.tau(); ++c) acc[c] = F.sub(acc[c], F.mul(v, code.check(c, pos)));
                    current[pos] = 0;
                }
            }
        }
    }

    void record() {
        if (found && *found != current)
            throw ConsistencyError("two errors within the oracle budget share a syndrome; the code distance is too small");
        found = current;
    }
};

}  // namespace

std::optional<ErrorVector> BerlekampCode::decode_oracle(const LeeSyndrome& s, Int budget) const {
    if (budget < 0) throw ParameterError("oracle budget must be nonnegative");
    if (static_cast<Int>(s.size()) != tau_) throw ParameterError("syndrome has the wrong number of components");
    const Int limit = oracle_guard(kBerlekampOracleGuard);
    const Int volume = sphere_volume_l1(n(), budget);
    if (volume > limit)
        throw GuardError("exhaustive Lee decoding would visit " + std::to_string(volume) + " errors (limit " +
                         std::to_string(limit) + "); set DPE_CODEC_GUARD_OVERRIDE to raise it");
    LeeSyndrome target(s.size());
    for (size_t i = 0; i < s.size(); ++i) target[i] = field_.reduce(s[i]);
    OracleSearch search{*this, target, ErrorVector(static_cast<size_t>(n()), 0), std::nullopt,
                        LeeSyndrome(static_cast<size_t>(tau_), 0)};
    search.run(0, budget);
    return search.found;
}

std::vector<Int> BerlekampCode::systematic_encode(std::span<const Int> message) const {
    if (static_cast<Int>(message.size()) != k())
        throw ParameterError("message length " + std::to_string(message.size()) + " does not match k=" +
                             std::to_string(k()));
    if (redundancy_inv_.empty())
        throw ParameterError("the redundancy columns of this Berlekamp code are singular; reorder the locators");
    std::vector<Int> word(message.begin(), message.end());
    for (Int& v : word) v = field_.reduce(v);
    std::vector<Int> rhs(static_cast<size_t>(tau_), 0);
    for (Int v = 0; v < tau_; ++v) {
        Int acc = 0;
        for (Int j = 0; j < k(); ++j) acc = field_.add(acc, field_.mul(word[j], check(v, j)));
        rhs[v] = field_.neg(acc);
    }
    for (Int r = 0; r < tau_; ++r) {
        Int acc = 0;
        for (Int c = 0; c < tau_; ++c) acc = field_.add(acc, field_.mul(redundancy_inv_[r * tau_ + c], rhs[c]));
        word.push_back(acc);
    }
    return word;
}

}  // namespace dpe
