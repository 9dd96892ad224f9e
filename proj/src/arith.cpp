#include "dpe/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "dpe/errors.hpp"

namespace dpe {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ConsistencyError("integer overflow in addition");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ConsistencyError("integer overflow in multiplication");
    return r;
}

Int checked_pow(Int base, int exp) {
    if (exp < 0) throw ParameterError("negative exponent");
    Int r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

Int mul_mod(Int a, Int b, Int modulus) {
    const auto r = static_cast<__int128>(mod_floor(a, modulus)) * mod_floor(b, modulus) % modulus;
    return static_cast<Int>(r);
}

Int pow_mod(Int base, std::uint64_t exp, Int modulus) {
    Int result = 1 % modulus;
    base = mod_floor(base, modulus);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

int ceil_log(Int q, Int x) {
    if (q < 2) throw ParameterError("logarithm base must be >= 2");
    if (x < 1) throw ParameterError("logarithm argument must be >= 1");
    int m = 0;
    Int power = 1;
    while (power < x) {
        power = checked_mul(power, q);
        ++m;
    }
    return m;
}

DigitVector base_q_digits(Int x, Int q, int m) {
    if (q < 2) throw ParameterError("base must be >= 2, got " + std::to_string(q));
    if (m < 0) throw ParameterError("digit count must be nonnegative");
    if (x < 0) throw ParameterError("cannot expand negative value " + std::to_string(x));
    DigitVector d{std::vector<Int>(static_cast<size_t>(m), 0), q};
    Int rest = x;
    for (int j = 0; j < m; ++j) {
        d.digits[j] = rest % q;
        rest /= q;
    }
    if (rest != 0)
        throw ParameterError("value " + std::to_string(x) + " does not fit in " + std::to_string(m) +
                             " base-" + std::to_string(q) + " digits");
    return d;
}

Int base_q_value(const DigitVector& d) {
    Int value = 0;
    for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it)
        value = checked_add(checked_mul(value, d.base), *it);
    return value;
}

Int f_seq(Int q, int j) {
    if (q <= 2 || q % 2 != 0) throw ParameterError("f_j(q) requires an even q > 2");
    if (j < 0) throw ParameterError("f_j(q) requires j >= 0");
    const Int numerator = checked_add(checked_pow(q, j + 1), (j % 2 == 0) ? 1 : -1);
    return numerator / (q + 1);
}

std::vector<Int> f_weights(Int q, int m) {
    std::vector<Int> w;
    w.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) w.push_back(f_seq(q, j));
    return w;
}

DigitVector mixed_radix_digits(Int x, Int q, std::span<const Int> weights) {
    if (x < 0) throw ParameterError("cannot expand negative value " + std::to_string(x));
    DigitVector d{std::vector<Int>(weights.size(), 0), q};
    Int rest = x;
    for (size_t j = weights.size(); j-- > 0;) {
        const Int digit = std::min(q - 1, rest / weights[j]);
        d.digits[j] = digit;
        rest -= digit * weights[j];
    }
    if (rest != 0)
        throw ParameterError("value " + std::to_string(x) + " is not representable with " +
                             std::to_string(weights.size()) + " mixed-radix digits below " +
                             std::to_string(q));
    return d;
}

Int mixed_radix_value(std::span<const Int> digits, std::span<const Int> weights) {
    if (digits.size() != weights.size()) throw ParameterError("digit/weight length mismatch");
    Int value = 0;
    for (size_t j = 0; j < digits.size(); ++j)
        value = checked_add(value, checked_mul(digits[j], weights[j]));
    return value;
}

Int l1_norm(std::span<const Int> e) {
    Int total = 0;
    for (Int v : e) total = checked_add(total, v < 0 ? -v : v);
    return total;
}

Int hamming_weight(std::span<const Int> e) {
    Int w = 0;
    for (Int v : e) w += (v != 0);
    return w;
}

Int hamming_dist(std::span<const Int> x, std::span<const Int> y) {
    if (x.size() != y.size())
        throw ParameterError("hamming_dist: length mismatch (" + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()) + ")");
    Int d = 0;
    for (size_t j = 0; j < x.size(); ++j) d += (x[j] != y[j]);
    return d;
}

Int l1_dist(std::span<const Int> x, std::span<const Int> y) {
    if (x.size() != y.size()) throw ParameterError("l1_dist: length mismatch");
    Int d = 0;
    for (size_t j = 0; j < x.size(); ++j) d = checked_add(d, std::abs(x[j] - y[j]));
    return d;
}

Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

Int sphere_volume_l1(Int n, Int t) {
    if (n < 1 || t < 0) throw ParameterError("sphere_volume_l1 requires n >= 1 and t >= 0");
    Int total = 0;
    for (Int i = 0; i <= std::min(t, n); ++i)
        total = checked_add(total, checked_mul(checked_mul(Int{1} << i, binomial(n, i)), binomial(t, i)));
    return total;
}

bool is_prime(Int p) {
    if (p < 2) return false;
    if (p >= (Int{1} << 32)) throw ParameterError("primality test supports p < 2^32");
    for (Int small : {2, 3, 5, 7, 11, 13}) {
        if (p == small) return true;
        if (p % small == 0) return false;
    }
    // Miller-Rabin with bases {2, 7, 61} is exact below 4759123141.
    Int d = p - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (Int a : {2, 7, 61}) {
        if (a % p == 0) continue;
        Int x = pow_mod(a, static_cast<std::uint64_t>(d), p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, p);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Int next_prime_at_least(Int x) {
    Int c = std::max<Int>(x, 2);
    while (!is_prime(c)) ++c;
    return c;
}

Int largest_prime_at_most(Int x) {
    for (Int c = x; c >= 2; --c)
        if (is_prime(c)) return c;
    return 0;
}

}  // namespace dpe
