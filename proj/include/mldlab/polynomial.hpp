#pragma once

// Weighted-homogeneous polynomial combinatorics. A polynomial here is its
// set of exponent vectors plus the ambient weight vector; coefficients are
// optional bookkeeping and no operation in this header consults them.

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace mldlab {

using WeightVector = std::vector<Int>;

struct Monomial {
    std::vector<Int> exponents;  // nonnegative, one entry per variable

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

struct WeightedPolynomial {
    WeightVector weights;             // positive, length = variable count
    std::vector<Monomial> monomials;  // distinct exponent vectors, at least one
    std::vector<Rat> coefficients;    // empty, or one nonzero entry per monomial

    std::size_t variable_count() const { return weights.size(); }

    // Throws std::invalid_argument if the struct violates its invariants.
    void validate() const;
};

inline void WeightedPolynomial::validate() const {
    if (weights.empty()) throw std::invalid_argument("polynomial: no variables");
    for (const Int& w : weights)
        if (w <= 0) throw std::invalid_argument("polynomial: weights must be positive");
    if (monomials.empty()) throw std::invalid_argument("polynomial: no monomials");
    for (const Monomial& m : monomials) {
        if (m.exponents.size() != weights.size())
            throw std::invalid_argument("polynomial: exponent vector length mismatch");
        for (const Int& e : m.exponents)
            if (e < 0) throw std::invalid_argument("polynomial: negative exponent");
    }
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t j = i + 1; j < monomials.size(); ++j)
            if (monomials[i] == monomials[j])
                throw std::invalid_argument("polynomial: duplicate monomial");
    if (!coefficients.empty()) {
        if (coefficients.size() != monomials.size())
            throw std::invalid_argument("polynomial: coefficient count mismatch");
        for (const Rat& c : coefficients)
            if (c == 0) throw std::invalid_argument("polynomial: zero coefficient");
    }
}

// A weight vector is well formed when every leave-one-out gcd is 1, i.e. no
// prime divides all weights but one. (Pairs of weights may still share
// factors when three or more weights survive the drop.)
inline bool is_well_formed(const WeightVector& w) {
    if (w.size() < 2) return false;
    for (std::size_t drop = 0; drop < w.size(); ++drop) {
        Int g = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != drop) g = gcd(g, w[i]);
        if (g != 1) return false;
    }
    return true;
}

inline Int weighted_degree(const Monomial& m, const WeightVector& w) {
    if (m.exponents.size() != w.size())
        throw std::invalid_argument("weighted_degree: dimension mismatch");
    Int d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) d += m.exponents[i] * w[i];
    return d;
}

// Common weighted degree of all monomials, or nullopt if they disagree.
inline std::optional<Int> homogeneous_degree(const WeightedPolynomial& p) {
    Int d = weighted_degree(p.monomials.front(), p.weights);
    for (std::size_t k = 1; k < p.monomials.size(); ++k)
        if (weighted_degree(p.monomials[k], p.weights) != d) return std::nullopt;
    return d;
}

// Restriction to the affine chart x_i = 1: coordinate i is deleted from the
// weight vector and from every exponent vector. Exponent vectors that
// collide afterwards are merged, keeping the first copy (coefficients are
// bookkeeping only, so no summing is attempted).
inline WeightedPolynomial affine_chart(const WeightedPolynomial& p, std::size_t i) {
    p.validate();
    if (i >= p.variable_count())
        throw std::invalid_argument("affine_chart: variable index out of range");
    if (p.variable_count() < 2)
        throw std::invalid_argument("affine_chart: cannot drop the only variable");
    WeightedPolynomial out;
    out.weights = p.weights;
    out.weights.erase(out.weights.begin() + static_cast<std::ptrdiff_t>(i));
    for (std::size_t k = 0; k < p.monomials.size(); ++k) {
        Monomial m = p.monomials[k];
        m.exponents.erase(m.exponents.begin() + static_cast<std::ptrdiff_t>(i));
        if (std::find(out.monomials.begin(), out.monomials.end(), m) != out.monomials.end())
            continue;
        out.monomials.push_back(std::move(m));
        if (!p.coefficients.empty()) out.coefficients.push_back(p.coefficients[k]);
    }
    return out;
}

// Status of the coordinate point P_i relative to the hypersurface:
//   NotOnX      -- some monomial is a pure power of x_i, so f(P_i) != 0;
//   Quasismooth -- some monomial is x_i^k * x_j (k >= 0, one other variable
//                  with exponent exactly 1), giving a nonvanishing partial
//                  derivative at P_i for general coefficients;
//   Suspect     -- neither pattern; the point needs a singularity analysis.
enum class CoordinatePointStatus { NotOnX, Quasismooth, Suspect };

inline const char* to_string(CoordinatePointStatus s) {
    switch (s) {
        case CoordinatePointStatus::NotOnX: return "NOT_ON_X";
        case CoordinatePointStatus::Quasismooth: return "QUASISMOOTH";
        case CoordinatePointStatus::Suspect: return "SUSPECT";
    }
    return "?";
}

inline std::vector<CoordinatePointStatus> quasismooth_report(const WeightedPolynomial& p) {
    p.validate();
    const std::size_t nv = p.variable_count();
    std::vector<CoordinatePointStatus> out(nv, CoordinatePointStatus::Suspect);
    for (std::size_t i = 0; i < nv; ++i) {
        bool pure_power = false;
        bool derivative = false;
        for (const Monomial& m : p.monomials) {
            bool pure = m.exponents[i] > 0;
            for (std::size_t l = 0; l < nv && pure; ++l)
                if (l != i && m.exponents[l] != 0) pure = false;
            if (pure) { pure_power = true; break; }

            // x_i^k * x_j pattern: exactly one other variable, with exponent 1.
            std::size_t others = 0;
            bool unit = false;
            for (std::size_t l = 0; l < nv; ++l) {
                if (l == i || m.exponents[l] == 0) continue;
                ++others;
                unit = (m.exponents[l] == 1);
            }
            if (others == 1 && unit) derivative = true;
        }
        if (pure_power)
            out[i] = CoordinatePointStatus::NotOnX;
        else if (derivative)
            out[i] = CoordinatePointStatus::Quasismooth;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format. Line-oriented:
//   - '#' starts a comment (to end of line), blank lines are skipped;
//   - the first content line lists the weights;
//   - every further line is one exponent vector, optionally followed by a
//     single extra token which is the coefficient (integer or p/q).

inline WeightedPolynomial parse_polynomial(std::istream& in) {
    WeightedPolynomial p;
    std::string line;
    bool have_weights = false;
    bool any_coefficient = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (!have_weights) {
            for (const std::string& t : toks) p.weights.push_back(parse_int(t));
            have_weights = true;
            continue;
        }
        const std::size_t nv = p.variable_count();
        if (toks.size() != nv && toks.size() != nv + 1)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(nv) + " exponents");
        Monomial m;
        for (std::size_t i = 0; i < nv; ++i) m.exponents.push_back(parse_int(toks[i]));
        p.monomials.push_back(std::move(m));
        if (toks.size() == nv + 1) {
            // Backfill 1s if earlier lines had no explicit coefficient.
            if (!any_coefficient) p.coefficients.assign(p.monomials.size() - 1, Rat(1));
            any_coefficient = true;
            p.coefficients.push_back(parse_rat(toks[nv]));
        } else if (any_coefficient) {
            p.coefficients.push_back(Rat(1));
        }
    }
    if (!have_weights) throw std::invalid_argument("polynomial file: no weight line");
    p.validate();
    return p;
}

inline WeightedPolynomial parse_polynomial(const std::string& text) {
    std::istringstream in(text);
    return parse_polynomial(in);
}

inline void format_polynomial(std::ostream& os, const WeightedPolynomial& p) {
    for (std::size_t i = 0; i < p.weights.size(); ++i)
        os << (i ? " " : "") << p.weights[i].get_str();
    os << "\n";
    for (std::size_t k = 0; k < p.monomials.size(); ++k) {
        const Monomial& m = p.monomials[k];
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            os << (i ? " " : "") << m.exponents[i].get_str();
        if (!p.coefficients.empty()) os << " " << rat_str(p.coefficients[k]);
        os << "\n";
    }
}

// Human-readable monomial like "x0^2*x1" for diagnostics.
inline std::string monomial_name(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (m.exponents[i] != 1) s += "^" + m.exponents[i].get_str();
    }
    return s.empty() ? "1" : s;
}

}  // namespace mldlab
