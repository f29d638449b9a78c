#pragma once

// Sylvester's sequence s_0 = 2, s_{k+1} = s_0 s_1 ... s_k + 1, computed by
// the equivalent quadratic recurrence s_{k+1} = s_k^2 - s_k + 1. The terms
// grow doubly exponentially, so everything is mpz-backed and memoized.

#include <mutex>
#include <vector>

#include "rational.hpp"

namespace mldlab {

inline Int sylvester(std::size_t k) {
    static std::vector<Int> cache{Int(2)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= k) {
        const Int& s = cache.back();
        cache.push_back(s * s - s + 1);
    }
    return cache[k];
}

// Product s_0 s_1 ... s_{n-1} = s_n - 1 (empty product for n = 0 is 1).
inline Int sylvester_product(std::size_t n) {
    if (n == 0) return Int(1);
    return sylvester(n) - 1;
}

// Sum of reciprocals 1/s_0 + ... + 1/s_n. Satisfies the closed form
// 1 - 1/(s_{n+1} - 1); the unit tests pin both routes against each other.
inline Rat sylvester_prefix_sum(std::size_t n) {
    Rat sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += make_rat(1, sylvester(i));
    return sum;
}

}  // namespace mldlab
