#include "dpe/reed_solomon.hpp"

#include <string>

#include "dpe/berlekamp.hpp"
#include "dpe/errors.hpp"

namespace dpe {

namespace {

using Poly = std::vector<Int>;  // coefficient i multiplies x^i

Poly multiply(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return r;
}

Poly truncate(Poly a, size_t len) {
    if (a.size() > len) a.resize(len);
    return a;
}

void trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Int evaluate(const PrimeField& F, const Poly& a, Int x) {
    Int r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
}

Poly derivative(const PrimeField& F, const Poly& a) {
    if (a.size() <= 1) return {0};
    Poly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(static_cast<Int>(i), a[i]);
    return d;
}

// Shortest linear recurrence (connection polynomial) generating `s`.
Poly berlekamp_massey(const PrimeField& F, const std::vector<Int>& s, Int& length) {
    Poly c{1}, b{1};
    Int l = 0, shift = 1, last = 1;
    for (size_t n = 0; n < s.size(); ++n) {
        Int d = s[n];
        for (Int i = 1; i <= l && i < static_cast<Int>(c.size()); ++i) d = F.add(d, F.mul(c[i], s[n - i]));
        if (d == 0) {
            ++shift;
            continue;
        }
        const Poly prev = c;
        const Int factor = F.div(d, last);
        if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
        for (size_t i = 0; i < b.size(); ++i) c[i + shift] = F.sub(c[i + shift], F.mul(factor, b[i]));
        if (2 * l <= static_cast<Int>(n)) {
            l = static_cast<Int>(n) + 1 - l;
            b = prev;
            last = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    trim(c);
    length = l;
    return c;
}

}  // namespace

ReedSolomonCode::ReedSolomonCode(Int p, Int length, Int dimension) : field_(p), n_(length), k_(dimension) {
    if (length < 2 || length > p - 1)
        throw ParameterError("Reed-Solomon length must lie in [2, p-1] (length=" + std::to_string(length) + ", p=" +
                             std::to_string(p) + ")");
    if (dimension < 1 || dimension >= length)
        throw ParameterError("Reed-Solomon dimension must lie in [1, length)");
    const Int g = field_.primitive_element();
    for (Int i = 0; i < n_; ++i) locators_.push_back(field_.pow(g, static_cast<std::uint64_t>(i)));
    const auto r = static_cast<size_t>(n_ - k_);
    std::vector<Int> h(r * r);
    for (size_t row = 0; row < r; ++row)
        for (size_t c = 0; c < r; ++c) h[row * r + c] = field_.pow(locators_[k_ + c], row + 1);
    auto inv = invert_matrix(field_, std::move(h), r);
    if (!inv) throw ConsistencyError("Reed-Solomon parity columns are singular");
    parity_inv_ = std::move(*inv);
}

std::vector<Int> ReedSolomonCode::syndromes(std::span<const Int> word) const {
    if (static_cast<Int>(word.size()) != n_) throw ParameterError("word length does not match Reed-Solomon length");
    std::vector<Int> s(static_cast<size_t>(n_ - k_), 0);
    for (Int i = 0; i < n_; ++i) {
        const Int x = locators_[i];
        Int power = x;
        for (auto& component : s) {
            component = field_.add(component, field_.mul(word[i], power));
            power = field_.mul(power, x);
        }
    }
    return s;
}

std::vector<Int> ReedSolomonCode::encode(std::span<const Int> message) const {
    if (static_cast<Int>(message.size()) != k_) throw ParameterError("message length does not match dimension");
    std::vector<Int> word(static_cast<size_t>(n_), 0);
    for (Int i = 0; i < k_; ++i) word[i] = field_.reduce(message[i]);
    const auto s = syndromes(word);
    const auto r = static_cast<size_t>(n_ - k_);
    for (size_t c = 0; c < r; ++c) {
        Int acc = 0;
        for (size_t row = 0; row < r; ++row) acc = field_.add(acc, field_.mul(parity_inv_[c * r + row], s[row]));
        word[k_ + c] = field_.neg(acc);
    }
    return word;
}

std::optional<std::vector<Int>> ReedSolomonCode::decode(std::span<const Int> word, const std::vector<bool>& erased,
                                                        Int max_errors) const {
    const PrimeField& F = field_;
    if (erased.size() != word.size()) throw ParameterError("erasure mask length does not match word");
    const auto checks = static_cast<size_t>(n_ - k_);
    std::vector<Int> reduced(word.begin(), word.end());
    for (auto& v : reduced) v = F.reduce(v);
    const auto s = syndromes(reduced);
    std::vector<Int> error(static_cast<size_t>(n_), 0);

    Poly gamma{1};
    size_t rho = 0;
    for (Int i = 0; i < n_; ++i) {
        if (!erased[i]) continue;
        gamma = multiply(F, gamma, {1, F.neg(locators_[i])});
        ++rho;
    }
    if (rho >= checks + 1) return std::nullopt;
    bool clean = true;
    for (Int v : s) clean = clean && v == 0;
    if (clean) return error;

    // Forney syndromes: the tail of S * Gamma follows the error-only recurrence.
    const Poly modified = truncate(multiply(F, s, gamma), checks);
    std::vector<Int> tail(modified.begin() + static_cast<long>(rho), modified.end());
    Int nu = 0;
    const Poly sigma = berlekamp_massey(F, tail, nu);
    if (2 * nu > static_cast<Int>(tail.size()) || nu > max_errors) return std::nullopt;

    Poly lambda = multiply(F, sigma, gamma);
    trim(lambda);
    const Poly omega = truncate(multiply(F, s, lambda), checks);
    const Poly dlambda = derivative(F, lambda);
    Int roots = 0;
    for (Int i = 0; i < n_; ++i) {
        const Int x_inv = F.inv(locators_[i]);
        if (evaluate(F, lambda, x_inv) != 0) continue;
        ++roots;
        const Int denom = evaluate(F, dlambda, x_inv);
        if (denom == 0) return std::nullopt;
        error[i] = F.neg(F.div(evaluate(F, omega, x_inv), denom));
    }
    if (roots != static_cast<Int>(lambda.size()) - 1) return std::nullopt;

    Int errors = 0;
    for (Int i = 0; i < n_; ++i) errors += (!erased[i] && error[i] != 0);
    if (errors > max_errors || 2 * errors + static_cast<Int>(rho) >= distance()) return std::nullopt;
    std::vector<Int> corrected(reduced);
    for (Int i = 0; i < n_; ++i) corrected[i] = F.sub(corrected[i], error[i]);
    for (Int v : syndromes(corrected))
        if (v != 0) return std::nullopt;
    return error;
}

}  // namespace dpe
