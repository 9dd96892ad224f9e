#pragma once

// Small helpers shared by the tests, kept independent of the library code paths under test.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "dpe/types.hpp"

namespace support {

using dpe::Int;

inline dpe::QMatrix random_matrix(std::mt19937_64& rng, Int q, size_t rows, size_t cols) {
    std::vector<Int> data(rows * cols);
    for (auto& v : data) v = static_cast<Int>(rng() % static_cast<std::uint64_t>(q));
    return dpe::QMatrix(q, rows, cols, std::move(data));
}

inline std::vector<Int> random_vector(std::mt19937_64& rng, Int q, size_t len) {
    std::vector<Int> u(len);
    for (auto& v : u) v = static_cast<Int>(rng() % static_cast<std::uint64_t>(q));
    return u;
}

inline std::vector<Int> product(const std::vector<Int>& u, const dpe::QMatrix& a) {
    std::vector<Int> c(a.cols(), 0);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c[j] += u[i] * a(i, j);
    return c;
}

inline std::vector<Int> prefix(const std::vector<Int>& c, Int k) { return {c.begin(), c.begin() + k}; }

// Every error vector of length n with L1 weight exactly w.
inline void each_error_of_weight(size_t n, Int w, const std::function<void(const std::vector<Int>&)>& f) {
    std::vector<Int> e(n, 0);
    std::function<void(size_t, Int)> rec = [&](size_t j, Int left) {
        if (left == 0) {
            f(e);
            return;
        }
        if (j == n) return;
        rec(j + 1, left);
        for (Int mag = 1; mag <= left; ++mag)
            for (Int sign : {1, -1}) {
                e[j] = sign * mag;
                rec(j + 1, left - mag);
                e[j] = 0;
            }
    };
    rec(0, w);
}

// y = c + e clamped into [0, Q-1], as a physical read would be. Clamping only
// shrinks error magnitudes, so every decoding contract still applies.
inline std::vector<Int> read_with_error(const std::vector<Int>& c, const std::vector<Int>& e, Int Q) {
    std::vector<Int> y(c.size());
    for (size_t j = 0; j < c.size(); ++j) y[j] = std::min(std::max<Int>(c[j] + e[j], 0), Q - 1);
    return y;
}

}  // namespace support
