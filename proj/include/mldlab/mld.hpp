#pragma once

// Minimal log discrepancy engines.
//
// cyclic_quotient_mld:      mld(1/r(b_1..b_s)) = min{1, min_{0<j<r} sum_i frac(j b_i / r)}
// hypersurface_quotient_mld: min over the candidate set {e_0..e_n} u {beta_j}
//                            of beta(x_0...x_n) - beta(f), where
//                            beta_j^i = frac(j a_i / r) and
//                            beta(f) = min over monomials m of sum_i beta^i m_i.
//
// Both scans run over contiguous j-blocks with a per-block (value, smallest j)
// minimum and a lexicographic cross-block reduction, so value and witness are
// independent of the worker count. Residues are tracked incrementally in
// machine words when the bounds below allow it, in mpz otherwise; the two
// arithmetic routes are interchangeable and cross-checked by the test suite.
//
// Newton non-degeneracy of the chart polynomial is an assumption of the
// hypersurface formula, not something this engine checks; report emitters
// must surface it as an assumption.

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <variant>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace mldlab {

struct QuotientSingularity {
    Int order;                 // r >= 1
    std::vector<Int> weights;  // b_i reduced into [0, r)
};

inline QuotientSingularity make_quotient_singularity(const Int& r, std::vector<Int> weights) {
    if (r < 1) throw std::invalid_argument("quotient order must be >= 1");
    for (Int& b : weights) b = mod_floor(b, r);
    return {r, std::move(weights)};
}

// Well-formedness of 1/r(b_1..b_s): gcd(r, all weights but the i-th) = 1 for
// every i. With no weights at all this forces r = 1. Returns a description
// of the first violated condition, or nullopt if well formed.
inline std::optional<std::string> well_formed_violation(const QuotientSingularity& q) {
    if (q.weights.empty())
        return q.order == 1 ? std::nullopt
                            : std::optional<std::string>(
                                  "no weights: the group of order " + q.order.get_str() +
                                  " cannot act freely in codimension 1");
    for (std::size_t drop = 0; drop < q.weights.size(); ++drop) {
        Int g = q.order;
        for (std::size_t i = 0; i < q.weights.size(); ++i)
            if (i != drop) g = gcd(g, q.weights[i]);
        if (g != 1)
            return "gcd(r, weights omitting index " + std::to_string(drop) + ") = " +
                   g.get_str() + " != 1";
    }
    return std::nullopt;
}

inline bool is_well_formed(const QuotientSingularity& q) {
    return !well_formed_violation(q).has_value();
}

// ---------------------------------------------------------------------------

struct LatticePoint {
    std::vector<Rat> coordinates;           // each in [0, 1]
    std::variant<std::size_t, Int> source;  // basis index i | group index j

    bool is_basis() const { return source.index() == 0; }
    std::size_t basis_index() const { return std::get<0>(source); }
    const Int& group_index() const { return std::get<1>(source); }
};

inline LatticePoint basis_lattice_point(std::size_t i, std::size_t nvars) {
    if (i >= nvars) throw std::invalid_argument("basis_lattice_point: index out of range");
    LatticePoint p;
    p.coordinates.assign(nvars, Rat(0));
    p.coordinates[i] = 1;
    p.source = i;
    return p;
}

inline LatticePoint group_lattice_point(const Int& j, const Int& r, const std::vector<Int>& a) {
    LatticePoint p;
    p.coordinates.reserve(a.size());
    for (const Int& ai : a) p.coordinates.push_back(make_rat(mod_floor(j * ai, r), r));
    p.source = j;
    return p;
}

// beta(x_0...x_n) - beta(f) for an explicit point.
inline Rat lattice_value(const LatticePoint& beta, const WeightedPolynomial& chart) {
    if (beta.coordinates.size() != chart.variable_count())
        throw std::invalid_argument("lattice_value: dimension mismatch");
    Rat total = 0;
    for (const Rat& x : beta.coordinates) total += x;
    bool first = true;
    Rat best = 0;
    for (const Monomial& m : chart.monomials) {
        Rat v = 0;
        for (std::size_t i = 0; i < beta.coordinates.size(); ++i)
            if (m.exponents[i] != 0) v += beta.coordinates[i] * Rat(m.exponents[i]);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return total - best;
}

enum class SingularityClass { Klt, LcNotKlt, NotLc };

inline const char* to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::Klt: return "KLT";
        case SingularityClass::LcNotKlt: return "LC_NOT_KLT";
        case SingularityClass::NotLc: return "NOT_LC";
    }
    return "?";
}

struct MldResult {
    std::optional<Rat> value;  // nullopt encodes NEGATIVE_INFINITY (NotLc)
    std::optional<LatticePoint> witness;
    SingularityClass classification = SingularityClass::Klt;
};

enum class ScanArithmetic { Auto, Word, Big };

struct ScanOptions {
    unsigned workers = 1;
    ScanArithmetic arithmetic = ScanArithmetic::Auto;
    // Diagnostic callback, invoked with the cumulative number of scanned
    // candidates roughly every progress_stride of them. Never affects results.
    std::function<void(std::uint64_t)> progress;
    std::uint64_t progress_stride = 10'000'000;
};

// ---------------------------------------------------------------------------
// Scan internals.

namespace detail {

struct ProgressSink {
    std::function<void(std::uint64_t)> fn;
    std::uint64_t stride = 10'000'000;
    std::atomic<std::uint64_t> done{0};
    std::mutex mu;

    void add(std::uint64_t k) {
        if (!fn || k == 0) return;
        const std::uint64_t before = done.fetch_add(k);
        const std::uint64_t after = before + k;
        if (before / stride != after / stride) {
            std::lock_guard<std::mutex> lock(mu);
            fn(after);
        }
    }
};

// Scan plan over residues c_i(j) = (j * step_i) mod r. With an empty monomial
// list the per-j value is sum_i c_i (cyclic quotient); otherwise it is
// sum_i c_i - min over monomials of sum e_i c_i (hypersurface chart), which
// may be negative.
template <class I>
struct ScanPlan {
    I r{};
    std::vector<I> step;
    std::vector<std::vector<std::pair<std::size_t, I>>> monomials;
};

template <class I>
struct BlockBest {
    bool any = false;
    I value{};
    I j{};
};

inline std::int64_t to_word(const Int& v) {
    if (!v.fits_slong_p()) throw std::logic_error("scan: word conversion overflow");
    return v.get_si();
}

template <class I>
I index_from(const Int& v) {
    if constexpr (std::is_same_v<I, Int>)
        return v;
    else
        return to_word(v);
}

template <class I>
Int index_to_int(const I& v) {
    if constexpr (std::is_same_v<I, Int>)
        return v;
    else
        return Int(static_cast<long>(v));
}

template <class I>
BlockBest<I> scan_block(const ScanPlan<I>& plan, const Int& lo, const Int& hi,
                        const std::vector<Int>& step_full, const Int& r_full,
                        ProgressSink* progress) {
    BlockBest<I> best;
    if (lo >= hi) return best;
    const std::size_t nv = plan.step.size();

    std::vector<I> c(nv);
    for (std::size_t i = 0; i < nv; ++i)
        c[i] = index_from<I>(mod_floor(lo * step_full[i], r_full));

    I j = index_from<I>(lo);
    const I jend = index_from<I>(hi);
    constexpr std::uint64_t kChunk = 1u << 20;
    std::uint64_t since_flush = 0;

    for (; j < jend; ++j) {
        I total{};
        for (const I& x : c) total += x;
        I value;
        if (plan.monomials.empty()) {
            value = total;
        } else {
            bool first = true;
            I mmin{};
            for (const auto& mono : plan.monomials) {
                I v{};
                for (const auto& [var, e] : mono) v += e * c[var];
                if (first || v < mmin) {
                    mmin = v;
                    first = false;
                }
            }
            value = total - mmin;
        }
        if (!best.any || value < best.value) {
            best.any = true;
            best.value = value;
            best.j = j;
        }
        for (std::size_t i = 0; i < nv; ++i) {
            c[i] += plan.step[i];
            if (c[i] >= plan.r) c[i] -= plan.r;
        }
        if (progress && ++since_flush == kChunk) {
            progress->add(kChunk);
            since_flush = 0;
        }
    }
    if (progress) progress->add(since_flush);
    return best;
}

// Partition [1, r) into contiguous blocks, scan, and reduce in block order;
// strict comparison keeps the smallest witness j among equal values.
template <class I>
BlockBest<I> scan_parallel(const ScanPlan<I>& plan, const std::vector<Int>& step_full,
                           const Int& r_full, unsigned workers, ProgressSink* progress) {
    const Int total = r_full - 1;
    if (total <= 0) return {};
    Int wanted(workers == 0 ? 1u : workers);
    if (wanted > total) wanted = total;
    if (wanted > 256) wanted = 256;
    const auto nblocks = static_cast<unsigned>(wanted.get_ui());

    std::vector<BlockBest<I>> results(nblocks);
    std::vector<std::exception_ptr> errors(nblocks);
    auto run = [&](unsigned k) {
        try {
            const Int lo = 1 + (total * k) / nblocks;
            const Int hi = 1 + (total * (k + 1)) / nblocks;
            results[k] = scan_block(plan, lo, hi, step_full, r_full, progress);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(nblocks - 1);
    for (unsigned k = 1; k < nblocks; ++k) pool.emplace_back(run, k);
    run(0);
    for (std::thread& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    BlockBest<I> best;
    for (const BlockBest<I>& b : results) {
        if (!b.any) continue;
        if (!best.any || b.value < best.value) best = b;
    }
    return best;
}

struct ScaledMin {
    bool any = false;
    Int value;  // scaled by r
    Int j;
};

// Dispatches to the word-size or big-integer scan. step entries must already
// be reduced into [0, r).
inline ScaledMin scan_residues(
    const Int& r, const std::vector<Int>& step,
    const std::vector<std::vector<std::pair<std::size_t, Int>>>& monomials,
    const ScanOptions& opts) {
    ProgressSink sink;
    ProgressSink* progress = nullptr;
    if (opts.progress) {
        sink.fn = opts.progress;
        sink.stride = opts.progress_stride ? opts.progress_stride : 10'000'000;
        progress = &sink;
    }

    // Word-path bound: every intermediate (totals, per-monomial sums, their
    // difference) stays within +/- 2^62 in int64 arithmetic.
    bool word_ok = r >= 2 && r - 1 <= Int(0xFFFFFFFFu);
    if (word_ok) {
        Int heaviest = step.size();  // weight of the all-ones functional
        for (const auto& mono : monomials) {
            Int degsum = 0;
            for (const auto& [var, e] : mono) degsum += e;
            if (degsum > heaviest) heaviest = degsum;
        }
        word_ok = heaviest * (r - 1) < (Int(1) << 62);
    }
    const bool use_word = opts.arithmetic == ScanArithmetic::Word ||
                          (opts.arithmetic == ScanArithmetic::Auto && word_ok);
    if (opts.arithmetic == ScanArithmetic::Word && !word_ok)
        throw std::invalid_argument("scan: input exceeds the machine-word fast path");

    ScaledMin out;
    if (use_word) {
        ScanPlan<std::int64_t> plan;
        plan.r = to_word(r);
        for (const Int& s : step) plan.step.push_back(to_word(s));
        for (const auto& mono : monomials) {
            auto& m = plan.monomials.emplace_back();
            for (const auto& [var, e] : mono) m.emplace_back(var, to_word(e));
        }
        auto best = scan_parallel(plan, step, r, opts.workers, progress);
        out.any = best.any;
        if (best.any) {
            out.value = index_to_int(best.value);
            out.j = index_to_int(best.j);
        }
    } else {
        ScanPlan<Int> plan;
        plan.r = r;
        plan.step = step;
        plan.monomials = monomials;
        auto best = scan_parallel(plan, step, r, opts.workers, progress);
        out.any = best.any;
        if (best.any) {
            out.value = best.value;
            out.j = best.j;
        }
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline MldResult cyclic_quotient_mld(const QuotientSingularity& q, const ScanOptions& opts = {}) {
    if (auto bad = well_formed_violation(q))
        throw std::invalid_argument("quotient not well formed: " + *bad);

    MldResult res;
    res.classification = SingularityClass::Klt;
    if (q.order == 1) {
        res.value = Rat(1);  // empty inner minimum; the cap applies
        return res;
    }
    detail::ScaledMin best = detail::scan_residues(q.order, q.weights, {}, opts);
    // r >= 2, so j = 1 was scanned; well-formedness forces a positive sum.
    if (!best.any || best.value <= 0)
        throw std::logic_error("cyclic_quotient_mld: scan invariant violated");
    if (best.value > q.order) {
        res.value = Rat(1);  // the cap is the minimum; no group witness
        return res;
    }
    res.value = make_rat(best.value, q.order);
    res.witness = group_lattice_point(best.j, q.order, q.weights);
    return res;
}

// Chart precondition: every variable must be absent from at least one
// monomial; otherwise the hypersurface contains a toric divisor and the
// candidate-set formula does not apply.
inline std::optional<std::size_t> variable_dividing_all(const WeightedPolynomial& chart) {
    for (std::size_t i = 0; i < chart.variable_count(); ++i) {
        bool absent_somewhere = false;
        for (const Monomial& m : chart.monomials)
            if (m.exponents[i] == 0) {
                absent_somewhere = true;
                break;
            }
        if (!absent_somewhere) return i;
    }
    return std::nullopt;
}

inline MldResult hypersurface_quotient_mld(const WeightedPolynomial& chart, const Int& r,
                                           const std::vector<Int>& a,
                                           const ScanOptions& opts = {}) {
    chart.validate();
    if (r < 1) throw std::invalid_argument("group order must be >= 1");
    if (a.size() != chart.variable_count())
        throw std::invalid_argument("hypersurface engine: weight count != variable count");
    if (auto i = variable_dividing_all(chart))
        throw std::invalid_argument("variable x" + std::to_string(*i) +
                                    " divides every monomial; such charts are rejected");

    std::vector<Int> step;
    step.reserve(a.size());
    for (const Int& ai : a) step.push_back(mod_floor(ai, r));  // r = 1 gives all zeros
    std::vector<std::vector<std::pair<std::size_t, Int>>> monos;
    for (const Monomial& m : chart.monomials) {
        auto& mono = monos.emplace_back();
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] != 0) mono.emplace_back(i, m.exponents[i]);
    }

    detail::ScaledMin best = detail::scan_residues(r, step, monos, opts);

    MldResult res;
    // Every basis vector e_i scores exactly 1: it contributes 1 to the total
    // and beta(f) = 0 because some monomial omits x_i. A group point wins
    // only when its value is <= 1; basis witnesses are reported otherwise.
    if (best.any && best.value <= r) {
        if (best.value < 0) {
            res.value = std::nullopt;  // arbitrarily negative multiples exist
            res.classification = SingularityClass::NotLc;
        } else if (best.value == 0) {
            res.value = Rat(0);
            res.classification = SingularityClass::LcNotKlt;
        } else {
            res.value = make_rat(best.value, r);
            res.classification = SingularityClass::Klt;
        }
        res.witness = group_lattice_point(best.j, r, a);
    } else {
        res.value = Rat(1);
        res.classification = SingularityClass::Klt;
        res.witness = basis_lattice_point(0, chart.variable_count());
    }
    return res;
}

}  // namespace mldlab
