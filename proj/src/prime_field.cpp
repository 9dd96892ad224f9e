#include "dpe/prime_field.hpp"

#include <algorithm>
#include <string>

#include "dpe/errors.hpp"

namespace dpe {

PrimeField::PrimeField(Int p) : p_(p) {
    if (p < 3 || !is_prime(p))
        throw ParameterError("GF(p) requires an odd prime p, got " + std::to_string(p));
}

Int PrimeField::inv(Int a) const {
    a = reduce(a);
    if (a == 0) throw DomainError("zero has no inverse in GF(" + std::to_string(p_) + ")");
    // Extended Euclid on (a, p).
    Int r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const Int quot = r0 / r1;
        Int tmp = r0 - quot * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - quot * t1;
        t0 = t1;
        t1 = tmp;
    }
    return reduce(t0);
}

bool PrimeField::is_square(Int a) const {
    a = reduce(a);
    return a == 0 || pow(a, static_cast<std::uint64_t>((p_ - 1) / 2)) == 1;
}

std::vector<Int> PrimeField::sqrt_exhaustive(Int a) const {
    a = reduce(a);
    std::vector<Int> roots;
    for (Int x = 0; x < p_; ++x)
        if (mul(x, x) == a) roots.push_back(x);
    return roots;
}

std::vector<Int> PrimeField::sqrt_tonelli_shanks(Int a) const {
    a = reduce(a);
    if (a == 0) return {0};
    if (!is_square(a)) return {};
    Int q = p_ - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (is_square(z)) ++z;
    Int m = s;
    Int c = pow(z, static_cast<std::uint64_t>(q));
    Int t = pow(a, static_cast<std::uint64_t>(q));
    Int r = pow(a, static_cast<std::uint64_t>((q + 1) / 2));
    while (t != 1) {
        Int i = 0;
        Int t2 = t;
        while (t2 != 1) {
            t2 = mul(t2, t2);
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    const Int other = neg(r);
    return {std::min(r, other), std::max(r, other)};
}

std::vector<Int> PrimeField::sqrt(Int a) const {
    return p_ <= kExhaustiveSqrtLimit ? sqrt_exhaustive(a) : sqrt_tonelli_shanks(a);
}

std::vector<Int> PrimeField::quadratic_roots(Int b, Int c) const {
    // x = (-b +- sqrt(b^2 - 4c)) / 2
    const Int disc = sub(mul(b, b), mul(4, c));
    const Int half = inv(2);
    std::vector<Int> roots;
    for (Int r : sqrt(disc)) roots.push_back(mul(sub(r, b), half));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Int PrimeField::signed_value(Int z) const {
    z = reduce(z);
    return z <= (p_ - 1) / 2 ? z : z - p_;
}

Int PrimeField::lee_abs(Int z) const {
    z = reduce(z);
    return std::min(z, p_ - z);
}

Int PrimeField::primitive_element() const {
    std::vector<Int> factors;
    Int rest = p_ - 1;
    for (Int f = 2; f * f <= rest; ++f) {
        if (rest % f == 0) {
            factors.push_back(f);
            while (rest % f == 0) rest /= f;
        }
    }
    if (rest > 1) factors.push_back(rest);
    for (Int g = 2; g < p_; ++g) {
        if (std::all_of(factors.begin(), factors.end(),
                        [&](Int f) { return pow(g, static_cast<std::uint64_t>((p_ - 1) / f)) != 1; }))
            return g;
    }
    return 1;  // p = 3 never reaches here; GF(3)* is generated by 2.
}

}  // namespace dpe
