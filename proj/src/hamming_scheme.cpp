#include "dpe/hamming_scheme.hpp"

#include "dpe/errors.hpp"

namespace dpe {

HammingParams resolve_hamming_params(HammingParams params) {
    if (params.q < 2) throw ParameterError("q must be >= 2");
    if (params.ell < 1) throw ParameterError("ell must be >= 1");
    if (params.k < 1) throw ParameterError("k must be >= 1");
    if (params.tau < 1) throw ParameterError("hamming scheme needs tau >= 1");
    if (params.sigma < 0 || params.rho < 0) throw ParameterError("sigma and rho must be nonnegative");
    const Int max_theta = output_alphabet(params.q, params.ell) - 1;
    if (params.theta == 0) params.theta = max_theta;
    if (params.theta < 1) throw ParameterError("theta must be >= 1");
    const Int inner = params.k + 2 * params.tau + params.sigma + params.rho;
    if (params.p == 0) {
        Int p = next_prime_at_least(std::max<Int>(2 * params.theta + 1, 3));
        while (inner > p - 1) p = next_prime_at_least(p + 1);
        params.p = p;
    } else {
        if (!is_prime(params.p) || params.p < 3) throw ParameterError("p=" + std::to_string(params.p) + " is not an odd prime");
        if (params.p <= 2 * params.theta)
            throw ParameterError("p=" + std::to_string(params.p) + " must exceed 2*theta=" +
                                 std::to_string(2 * params.theta));
        if (inner > params.p - 1)
            throw ParameterError("inner code length " + std::to_string(inner) + " = k + 2 tau + sigma + rho exceeds p-1=" +
                                 std::to_string(params.p - 1) + "; choose a larger p or smaller k");
    }
    return params;
}

HammingScheme::HammingScheme(HammingParams params)
    : HammingScheme(Resolved{}, resolve_hamming_params(params)) {}

HammingScheme::HammingScheme(Resolved, HammingParams params)
    : Scheme(params.q, params.ell,
             params.k + ceil_log(params.q, params.p) * (2 * params.tau + params.sigma + params.rho), params.k),
      params_(params),
      m_(ceil_log(params.q, params.p)),
      inner_(params.p, params.k + 2 * params.tau + params.sigma + params.rho, params.k) {}

std::vector<Int> HammingScheme::lambda(std::span<const Int> x) const {
    if (static_cast<Int>(x.size()) != n()) throw ParameterError("vector length does not match scheme length");
    const Int p = params_.p;
    const Int r = inner_length() - k();
    std::vector<Int> z(static_cast<size_t>(inner_length()));
    for (Int j = 0; j < k(); ++j) z[j] = mod_floor(x[j], p);
    for (Int v = 0; v < r; ++v) {
        Int acc = 0, weight = 1;
        for (int j = 0; j < m_; ++j) {
            acc = mod_floor(acc + mul_mod(x[k() + v + j * r], weight, p), p);
            weight = mul_mod(weight, q(), p);
        }
        z[k() + v] = acc;
    }
    return z;
}

std::vector<bool> HammingScheme::lambda_erasures(const ReadVector& y) const {
    const Int r = inner_length() - k();
    std::vector<bool> erased(static_cast<size_t>(inner_length()), false);
    for (Int j = 0; j < n(); ++j) {
        if (!y.erased[j]) continue;
        erased[j < k() ? j : k() + (j - k()) % r] = true;
    }
    return erased;
}

QMatrix HammingScheme::encode(const QMatrix& aprime) const {
    check_input(aprime);
    const Int r = inner_length() - k();
    QMatrix out(q(), aprime.rows(), static_cast<size_t>(n()));
    for (size_t i = 0; i < aprime.rows(); ++i) {
        const auto row = aprime.row(i);
        const auto word = inner_.encode(row);
        for (Int j = 0; j < k(); ++j) out.set(i, j, row[j]);
        for (Int v = 0; v < r; ++v) {
            const auto digits = base_q_digits(word[k() + v], q(), m_).digits;
            for (int j = 0; j < m_; ++j) out.set(i, k() + v + j * r, digits[j]);
        }
    }
    return out;
}

DecodeOutcome HammingScheme::decode(const ReadVector& y) const {
    check_read(y, true);
    const auto erased = lambda_erasures(y);
    const auto z = lambda(y.values);
    const auto e = inner_.decode(z, erased, params_.tau);
    if (!e) return DecodeOutcome::failure();
    const PrimeField& F = inner_.field();
    std::vector<Int> w(static_cast<size_t>(k()));
    for (Int j = 0; j < k(); ++j) {
        if (!y.erased[j]) {
            w[j] = y.values[j] - F.signed_value((*e)[j]);
            continue;
        }
        // The corrected symbol is c_j mod p, which pins c_j only when p >= Q.
        if (params_.p < output_alphabet()) return DecodeOutcome::failure();
        w[j] = F.sub(z[j], (*e)[j]);
    }
    return finish(std::move(w));
}

nlohmann::json HammingScheme::describe() const {
    return {{"scheme", kind()}, {"q", q()},        {"ell", ell()},     {"k", k()},
            {"n", n()},         {"tau", tau()},    {"theta", theta()}, {"sigma", sigma()},
            {"rho", rho()},     {"p", p()},        {"m", m_},          {"inner_length", inner_length()},
            {"inner_distance", inner_.distance()}};
}

Int redundancy_bound_hamming(Int q, Int p, Int tau, Int n_inner) {
    if (tau < 1) throw ParameterError("redundancy bound needs tau >= 1");
    if (n_inner < 2) throw ParameterError("redundancy bound needs inner length >= 2");
    const Int numerator = checked_mul(p - 1, 2 * tau - 1);
    const Int first = 1 + (numerator + p - 1) / p;
    return checked_mul(checked_mul(first, ceil_log(p, n_inner)), ceil_log(q, p));
}

}  // namespace dpe
