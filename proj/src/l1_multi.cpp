#include "dpe/l1_multi.hpp"

#include <algorithm>
#include <numeric>

#include "dpe/errors.hpp"
#include "dpe/l1_single.hpp"

namespace dpe {

SyndromeMatrix syndrome_matrix(const QMatrix& a, const BerlekampCode& code) {
    if (static_cast<Int>(a.cols()) != code.n())
        throw ParameterError("matrix has " + std::to_string(a.cols()) + " columns, code length is " +
                             std::to_string(code.n()));
    SyndromeMatrix s{a.rows(), static_cast<size_t>(code.tau()), code.field().p(), {}};
    s.data.reserve(s.rows * s.cols);
    for (size_t i = 0; i < a.rows(); ++i) {
        const auto row = code.syndrome(a.row(i));
        s.data.insert(s.data.end(), row.begin(), row.end());
    }
    return s;
}

std::vector<QMatrix> digit_split(const SyndromeMatrix& s, Int q, int m) {
    std::vector<QMatrix> planes(static_cast<size_t>(m), QMatrix(q, s.rows, s.cols));
    for (size_t i = 0; i < s.rows; ++i) {
        for (size_t v = 0; v < s.cols; ++v) {
            const auto digits = base_q_digits(s(i, v), q, m).digits;
            for (int j = 0; j < m; ++j) planes[j].set(i, v, digits[j]);
        }
    }
    return planes;
}

namespace {

Int check_recursive_prime(Int p, Int tau) {
    if (tau < 1) throw ParameterError("recursive scheme needs tau >= 1");
    if (!is_prime(p) || p < 3) throw ParameterError("p=" + std::to_string(p) + " is not an odd prime");
    if (p <= 2 * tau)
        throw ParameterError("recursive scheme needs p > 2*tau (p=" + std::to_string(p) + ", tau=" +
                             std::to_string(tau) + ")");
    return p;
}

BerlekampCode level2_for(Int tau, bool trimmed, const Locators& loc) {
    const Int cols = tau - (trimmed ? 1 : 0);
    const Int n2 = cols * loc.m;
    const Int p2 = next_prime_at_least(std::max(2 * n2 + 1, 2 * tau + 1));
    std::vector<Int> beta(static_cast<size_t>(n2));
    std::iota(beta.begin(), beta.end(), Int{1});
    return BerlekampCode(p2, std::move(beta), tau);
}

// Concatenates digit planes of the chosen syndrome columns, plane-major.
QMatrix planes_block(const SyndromeMatrix& s, Int q, int m, size_t first_col) {
    const auto planes = digit_split(s, q, m);
    const size_t cols = s.cols - first_col;
    QMatrix out(q, s.rows, cols * static_cast<size_t>(m));
    for (int j = 0; j < m; ++j)
        for (size_t i = 0; i < s.rows; ++i)
            for (size_t v = 0; v < cols; ++v) out.set(i, static_cast<size_t>(j) * cols + v, planes[j](i, first_col + v));
    return out;
}

// Inverse of planes_block on a read word: sum_j q^j y[j*cols + v] mod p.
std::vector<Int> planes_value(std::span<const Int> block, Int q, int m, size_t cols, Int p) {
    std::vector<Int> s(cols, 0);
    for (size_t v = 0; v < cols; ++v) {
        Int acc = 0, weight = 1;
        for (int j = 0; j < m; ++j) {
            acc = mod_floor(acc + mul_mod(block[static_cast<size_t>(j) * cols + v], weight, p), p);
            weight = mul_mod(weight, q, p);
        }
        s[v] = acc;
    }
    return s;
}

LeeSyndrome difference(const LeeSyndrome& a, const std::vector<Int>& b, Int p) {
    LeeSyndrome d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = mod_floor(a[i] - b[i], p);
    return d;
}

}  // namespace

RecursiveScheme::RecursiveScheme(Int q, Int ell, Int tau, Int p, bool trimmed, LocatorOptions opts)
    : RecursiveScheme(q, ell, tau, check_recursive_prime(p, tau), trimmed,
                      build_locators_basic(q, (p - 1) / 2, opts)) {}

RecursiveScheme::RecursiveScheme(Int q, Int ell, Int tau, Int p, bool trimmed, Locators loc)
    : Scheme(q, ell,
             loc.n + (tau - (trimmed ? 1 : 0)) * loc.m +
                 (2 * tau + 1) * tau * ceil_log(q, level2_for(tau, trimmed, loc).field().p()),
             trimmed ? loc.k() : loc.n),
      tau_(tau),
      p_(p),
      trimmed_(trimmed),
      loc_(std::move(loc)),
      level1_(p, loc_.alpha, tau, BerlekampOptions{loc_.options.allow_suffix_conflicts}),
      level2_(level2_for(tau, trimmed, loc_)),
      m2_(ceil_log(q, level2_.field().p())) {
    if (trimmed && tau < 2) throw ParameterError("trimmed mode needs tau >= 2 (with tau = 1 nothing is left to encode)");
}

QMatrix RecursiveScheme::encode(const QMatrix& input) const {
    check_input(input);
    const QMatrix a = trimmed_ ? encode_e1(input, loc_) : input;
    const QMatrix b1 = planes_block(syndrome_matrix(a, level1_), q(), m(), static_cast<size_t>(first_column()));
    const QMatrix b2 = planes_block(syndrome_matrix(b1, level2_), q(), m2_, 0);
    QMatrix out = a.hcat(b1);
    for (Int r = 0; r < repetitions(); ++r) out = out.hcat(b2);
    return out;
}

DecodeOutcome RecursiveScheme::decode(const ReadVector& y) const {
    check_read(y, false);
    const std::span<const Int> word(y.values);
    const auto n0 = static_cast<size_t>(base_length());
    const auto w1 = static_cast<size_t>(level1_width());
    const auto w2 = static_cast<size_t>(level2_width());
    const auto yA = word.subspan(0, n0);
    const auto yB1 = word.subspan(n0, w1);

    // Repetition block: the median of 2 tau + 1 copies survives tau unit errors.
    std::vector<Int> b2(w2);
    std::vector<Int> copies(static_cast<size_t>(repetitions()));
    for (size_t c = 0; c < w2; ++c) {
        for (size_t r = 0; r < copies.size(); ++r) copies[r] = word[n0 + w1 + r * w2 + c];
        std::nth_element(copies.begin(), copies.begin() + tau_, copies.end());
        b2[c] = copies[static_cast<size_t>(tau_)];
    }

    // Level-1 digit block, checked against its recovered syndrome.
    const Int p2 = level2_prime();
    const auto s2 = planes_value(b2, q(), m2_, static_cast<size_t>(tau_), p2);
    const auto e1 = level2_.decode(difference(level2_.syndrome(yB1), s2, p2));
    if (!e1) return DecodeOutcome::failure();
    std::vector<Int> b1(yB1.begin(), yB1.end());
    for (size_t j = 0; j < b1.size(); ++j) b1[j] -= (*e1)[j];

    // Information block.
    const auto cols = static_cast<size_t>(tau_ - first_column());
    auto s1 = planes_value(b1, q(), m(), cols, p_);
    if (trimmed_) s1.insert(s1.begin(), 0);
    const auto e0 = level1_.decode(difference(level1_.syndrome(yA), s1, p_));
    if (!e0) return DecodeOutcome::failure();
    std::vector<Int> w(yA.begin(), yA.begin() + k());
    for (Int j = 0; j < k(); ++j) w[j] -= (*e0)[j];
    return finish(std::move(w));
}

nlohmann::json RecursiveScheme::describe() const {
    return {{"scheme", kind()},
            {"q", q()},
            {"ell", ell()},
            {"tau", tau_},
            {"p", p_},
            {"trimmed", trimmed_},
            {"n", n()},
            {"k", k()},
            {"base_length", base_length()},
            {"m", m()},
            {"level2_length", level2_length()},
            {"level2_prime", level2_prime()},
            {"level2_digits", m2_},
            {"repetitions", repetitions()},
            {"locators", loc_}};
}

Int large_alphabet_prime(Int q, Int tau) {
    const Int p = largest_prime_at_most(q);
    return p > 2 * tau && p > 2 ? p : 0;
}

namespace {

BerlekampCode large_alphabet_code(Int q, Int tau, std::optional<Int> n) {
    if (tau < 1) throw ParameterError("large-alphabet scheme needs tau >= 1");
    const Int p = large_alphabet_prime(q, tau);
    if (p == 0)
        throw ParameterError("no prime p <= q=" + std::to_string(q) + " with p > 2*tau=" + std::to_string(2 * tau) +
                             "; use a larger q or smaller tau");
    const Int longest = (p - 1) / 2;
    const Int length = n.value_or(longest);
    if (length > longest)
        throw ParameterError("n=" + std::to_string(length) + " exceeds (p-1)/2=" + std::to_string(longest) +
                             " for p=" + std::to_string(p) + "; longer codes need an extension field");
    if (length <= tau)
        throw ParameterError("n=" + std::to_string(length) + " leaves no information columns for tau=" +
                             std::to_string(tau));
    std::vector<Int> beta(static_cast<size_t>(length));
    std::iota(beta.begin(), beta.end(), Int{1});
    return BerlekampCode(p, std::move(beta), tau);
}

}  // namespace

LargeAlphabetScheme::LargeAlphabetScheme(Int q, Int ell, Int tau, std::optional<Int> n)
    : LargeAlphabetScheme(q, ell, large_alphabet_code(q, tau, n)) {}

LargeAlphabetScheme::LargeAlphabetScheme(Int q, Int ell, BerlekampCode code)
    : Scheme(q, ell, code.n(), code.k()), code_(std::move(code)) {}

QMatrix LargeAlphabetScheme::encode(const QMatrix& aprime) const {
    check_input(aprime);
    QMatrix out(q(), aprime.rows(), static_cast<size_t>(n()));
    for (size_t i = 0; i < aprime.rows(); ++i) {
        const auto row = aprime.row(i);
        const auto word = code_.systematic_encode(row);
        for (Int j = 0; j < k(); ++j) out.set(i, j, row[j]);
        for (Int j = k(); j < n(); ++j) out.set(i, j, word[j]);
    }
    return out;
}

DecodeOutcome LargeAlphabetScheme::decode(const ReadVector& y) const {
    check_read(y, false);
    const auto e = code_.decode(code_.syndrome(y.values));
    if (!e) return DecodeOutcome::failure();
    std::vector<Int> w(y.values.begin(), y.values.begin() + k());
    for (Int j = 0; j < k(); ++j) w[j] -= (*e)[j];
    return finish(std::move(w));
}

nlohmann::json LargeAlphabetScheme::describe() const {
    return {{"scheme", kind()}, {"q", q()}, {"ell", ell()}, {"tau", tau()},
            {"p", p()},         {"n", n()}, {"k", k()},     {"beta", code_.beta()}};
}

}  // namespace dpe
