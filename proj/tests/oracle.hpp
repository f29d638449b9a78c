#pragma once

// Reference implementation of the cyclic-quotient minimum, deliberately
// sharing nothing with the scan engine: group points are generated by
// repeated coordinatewise rational addition with wraparound inside the unit
// cube, and the minimum is tracked as exact rationals. Slow but obviously
// correct; the test suites compare the engine against it case by case.

#include <optional>
#include <vector>

#include "mldlab/rational.hpp"

struct OracleResult {
    mldlab::Rat value;             // min(1, min_{0<j<r} sum_i frac(j b_i / r))
    std::optional<mldlab::Int> j;  // smallest attaining j, absent when the cap wins
};

inline OracleResult quotient_mld_oracle(const mldlab::Int& r, const std::vector<mldlab::Int>& b) {
    using mldlab::Int;
    using mldlab::Rat;
    const std::size_t s = b.size();
    std::vector<Rat> step(s), cur(s, Rat(0));
    for (std::size_t i = 0; i < s; ++i) step[i] = mldlab::frac(mldlab::make_rat(b[i], r));

    bool have = false;
    Rat best;
    Int bestj;
    for (Int j = 1; j < r; ++j) {
        Rat sum = 0;
        for (std::size_t i = 0; i < s; ++i) {
            cur[i] += step[i];
            if (cur[i] >= 1) cur[i] -= 1;
            sum += cur[i];
        }
        if (!have || sum < best) {
            have = true;
            best = sum;
            bestj = j;
        }
    }

    OracleResult out{Rat(1), std::nullopt};
    if (have && best <= 1) {
        out.value = best;
        out.j = bestj;
    }
    return out;
}
