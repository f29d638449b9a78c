#pragma once

// The Sylvester-indexed family of weighted Fano hypersurfaces. For each
// dimension n >= 2 the member X_n lives in P(a_0,...,a_{n+1}) and is chosen
// so that its unique non-quasismooth point carries a prescribed, very small
// minimal log discrepancy. Everything here is exact integer arithmetic; the
// construction functions throw if any defining division fails to be exact,
// and the verify_* functions return diagnostics instead of throwing.

#include <optional>
#include <string>
#include <vector>

#include "mld.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "sylvester.hpp"

namespace mldlab {

struct CheckReport {
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void expect(bool cond, const std::string& what) {
        if (!cond) failures.push_back(what);
    }
    void merge(const CheckReport& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

struct FamilyMember {
    int n = 0;    // dimension, >= 2
    bool even = true;
    Int s;        // s_n
    std::vector<Int> a;  // weights a_0..a_{n+1}
    Int d;        // degree
    Int b;        // exponent of x_n in the x_n^b x_{n+1} monomial
    Int c;        // exponent of x_{n+1} in the product monomial
    Int r;        // a_n + a_{n+1} - 1
    WeightedPolynomial equation;  // n+2 variables
};

inline FamilyMember build_family(int n) {
    if (n < 2) throw std::invalid_argument("family index n must be >= 2");
    FamilyMember F;
    F.n = n;
    F.even = (n % 2 == 0);
    F.s = sylvester(static_cast<std::size_t>(n));
    const Int& s = F.s;

    Int an, an1;
    if (F.even) {
        an = exact_div(s * s + s - 4, Int(4));
        an1 = exact_div((s - 1) * an - s - 1, Int(2));
        F.b = exact_div(s * s - s - 4, Int(2));
        F.c = exact_div(s + 3, Int(2));
    } else {
        an = exact_div(s * s + 3 * s - 6, Int(4));
        an1 = exact_div((s - 3) * an - s - 1, Int(4));
        F.b = exact_div(s * s - s - 2, Int(4));
        F.c = exact_div(s + 5, Int(2));
    }
    F.r = an + an1 - 1;
    F.d = F.r * (s - 1);
    for (int i = 0; i < n; ++i) F.a.push_back(exact_div(F.d, sylvester(static_cast<std::size_t>(i))));
    F.a.push_back(an);
    F.a.push_back(an1);

    const std::size_t nv = static_cast<std::size_t>(n) + 2;
    F.equation.weights = F.a;
    for (int i = 0; i < n; ++i) {
        Monomial m;
        m.exponents.assign(nv, Int(0));
        m.exponents[static_cast<std::size_t>(i)] = sylvester(static_cast<std::size_t>(i));
        F.equation.monomials.push_back(std::move(m));
    }
    {
        Monomial m;  // x_n^b x_{n+1}
        m.exponents.assign(nv, Int(0));
        m.exponents[static_cast<std::size_t>(n)] = F.b;
        m.exponents[nv - 1] = 1;
        F.equation.monomials.push_back(std::move(m));
    }
    {
        Monomial m;  // x_1...x_{n-1} x_n^{1 or 2} x_{n+1}^c
        m.exponents.assign(nv, Int(0));
        for (int i = 1; i < n; ++i) m.exponents[static_cast<std::size_t>(i)] = 1;
        m.exponents[static_cast<std::size_t>(n)] = F.even ? 1 : 2;
        m.exponents[nv - 1] = F.c;
        F.equation.monomials.push_back(std::move(m));
    }
    F.equation.validate();
    return F;
}

// --- identity checks -------------------------------------------------------

inline CheckReport verify_degree_identities(const FamilyMember& F) {
    CheckReport rep;
    Int sum = 0;
    for (const Int& ai : F.a) sum += ai;
    rep.expect(sum == F.d + 1, "sum of weights != d + 1");
    rep.expect(homogeneous_degree(F.equation) == std::optional<Int>(F.d),
               "equation is not homogeneous of degree d");
    const std::size_t n = static_cast<std::size_t>(F.n);
    rep.expect(F.d - F.a[n + 1] == F.b * F.a[n], "d - a_{n+1} != b * a_n");
    Int mid = 0;  // weights of the product monomial apart from x_{n+1}^c
    for (std::size_t i = 1; i < n; ++i) mid += F.a[i];
    mid += F.even ? F.a[n] : 2 * F.a[n];
    rep.expect(F.d - mid == F.c * F.a[n + 1], "product-monomial identity fails");
    for (std::size_t i = 0; i < n; ++i)
        rep.expect(F.a[i] * sylvester(i) == F.d, "a_i * s_i != d at i=" + std::to_string(i));
    return rep;
}

inline CheckReport verify_weight_coprimality(const FamilyMember& F) {
    CheckReport rep;
    const std::size_t n = static_cast<std::size_t>(F.n);
    for (std::size_t i = 0; i <= n; ++i)
        rep.expect(gcd(F.a[i], F.a[n + 1]) == 1,
                   "gcd(a_" + std::to_string(i) + ", a_{n+1}) != 1");
    for (std::size_t i = 0; i < n; ++i)
        rep.expect(gcd(F.a[i], F.a[n]) == 1, "gcd(a_" + std::to_string(i) + ", a_n) != 1");
    rep.expect(mpz_odd_p(F.a[n].get_mpz_t()) != 0, "a_n is even");
    rep.expect(mpz_odd_p(F.a[n + 1].get_mpz_t()) != 0, "a_{n+1} is even");
    rep.expect(is_well_formed(F.a), "weight vector is not well formed");
    return rep;
}

// Coordinate points: pure powers put P_0..P_{n-1} off the hypersurface,
// x_n^b x_{n+1} certifies P_n, and P_{n+1} must be the one suspect point.
inline CheckReport verify_quasismooth_pattern(const FamilyMember& F) {
    CheckReport rep;
    const auto report = quasismooth_report(F.equation);
    const std::size_t n = static_cast<std::size_t>(F.n);
    for (std::size_t i = 0; i < n; ++i)
        rep.expect(report[i] == CoordinatePointStatus::NotOnX,
                   "P_" + std::to_string(i) + " is not NOT_ON_X");
    rep.expect(report[n] == CoordinatePointStatus::Quasismooth, "P_n is not QUASISMOOTH");
    rep.expect(report[n + 1] == CoordinatePointStatus::Suspect, "P_{n+1} is not SUSPECT");
    return rep;
}

// --- the mld at the suspect point ------------------------------------------

inline Rat closed_form_mld(const FamilyMember& F) {
    const std::size_t n = static_cast<std::size_t>(F.n);
    return F.even ? make_rat(F.s - 1, 2 * F.a[n + 1]) : make_rat(F.s - 3, 4 * F.a[n + 1]);
}

// The same number expressed purely in s_n.
inline Rat sylvester_form_mld(const FamilyMember& F) {
    const Int& s = F.s;
    return F.even ? make_rat(4 * (s - 1), s * s * s - 9 * s)
                  : make_rat(4 * (s - 3), s * s * s - 19 * s + 14);
}

inline CheckReport verify_mld_sylvester_form(const FamilyMember& F) {
    CheckReport rep;
    rep.expect(closed_form_mld(F) == sylvester_form_mld(F),
               "closed-form mld disagrees with the s_n-only form");
    return rep;
}

// Group index attaining the minimum at the suspect point.
inline Int witness_index(const FamilyMember& F) {
    return F.even ? exact_div(F.s - 1, Int(2)) : exact_div(F.s - 3, Int(4));
}

// Chart around the suspect point: set x_{n+1} = 1.
inline WeightedPolynomial nonquasismooth_chart(const FamilyMember& F) {
    return affine_chart(F.equation, static_cast<std::size_t>(F.n) + 1);
}

class budget_exceeded : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Full enumeration when a budget admits r = a_{n+1}; otherwise the one-point
// witness evaluation at j_0 (the certificate layer compares either result
// against the closed form).
inline MldResult mld_nonquasismooth(const FamilyMember& F, const std::optional<Int>& budget,
                                    const ScanOptions& opts = {}) {
    const std::size_t n = static_cast<std::size_t>(F.n);
    const Int& r = F.a[n + 1];
    const WeightedPolynomial chart = nonquasismooth_chart(F);
    std::vector<Int> weights(F.a.begin(), F.a.end() - 1);

    if (budget) {
        if (r > *budget)
            throw budget_exceeded("full scan needs budget >= " + r.get_str() +
                                  " group elements, got " + budget->get_str());
        return hypersurface_quotient_mld(chart, r, weights, opts);
    }

    const Int j0 = witness_index(F);
    LatticePoint beta = group_lattice_point(j0, r, weights);
    Rat value = lattice_value(beta, chart);
    MldResult res;
    res.value = value;
    res.witness = std::move(beta);
    res.classification = value > 0    ? SingularityClass::Klt
                         : value == 0 ? SingularityClass::LcNotKlt
                                      : SingularityClass::NotLc;
    return res;
}

// --- the rest of the variety -----------------------------------------------

// Positive-dimensional singular strata of the ambient space that meet X:
// one for every pair of indices i1 < i2 < n (their weights always share the
// factor m * r with m = (s_n - 1)/(s_{i1} s_{i2})).
struct WeightStratum {
    std::size_t i1 = 0, i2 = 0;
    Int g;  // gcd(a_{i1}, a_{i2})
    Int m;  // g / r
};

inline std::vector<WeightStratum> weight_strata(const FamilyMember& F) {
    std::vector<WeightStratum> out;
    const std::size_t n = static_cast<std::size_t>(F.n);
    for (std::size_t i1 = 0; i1 + 1 < n; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
            Int g = gcd(F.a[i1], F.a[i2]);
            if (g == 1) continue;
            WeightStratum st;
            st.i1 = i1;
            st.i2 = i2;
            st.m = exact_div(g, F.r);  // non-divisibility signals a construction bug
            st.g = std::move(g);
            out.push_back(std::move(st));
        }
    return out;
}

struct AwayFromPointReport {
    CheckReport checks;
    Rat coordinate_quotient_mld;  // mld of 1/a_n(a_0..a_{n-1})
    std::vector<WeightStratum> strata;
};

// Estimated scan length of the away-from-the-point verification.
inline Int away_from_point_work(const FamilyMember& F) {
    const std::size_t n = static_cast<std::size_t>(F.n);
    Int work = F.a[n] - 1;  // coordinate-point quotient scan
    for (const WeightStratum& st : weight_strata(F)) {
        Int jmax;  // ceil(2g/a_n) - 1
        mpz_cdiv_q(jmax.get_mpz_t(), Int(2 * st.g).get_mpz_t(), F.a[n].get_mpz_t());
        jmax -= 1;
        if (jmax > 0) work += jmax;
    }
    return work;
}

// Checks that the mld away from the suspect point exceeds the mld at it:
// (case 2) the remaining coordinate point is a cyclic quotient with mld
// >= n/a_n; (case 1) along every positive-dimensional stratum the group
// indices small enough to matter satisfy frac(j a_n / g) > j/g; finally
// 2/a_n must exceed the closed-form mld. Returns nullopt when the scan
// length exceeds work_limit (members past n = 4 at the default).
inline std::optional<AwayFromPointReport> verify_mld_away_from_point(
    const FamilyMember& F, const Int& work_limit = Int(1) << 31, const ScanOptions& opts = {}) {
    if (away_from_point_work(F) > work_limit) return std::nullopt;

    AwayFromPointReport rep;
    const std::size_t n = static_cast<std::size_t>(F.n);
    const Int& an = F.a[n];

    QuotientSingularity q =
        make_quotient_singularity(an, std::vector<Int>(F.a.begin(), F.a.begin() + n));
    MldResult qr = cyclic_quotient_mld(q, opts);
    rep.coordinate_quotient_mld = *qr.value;
    rep.checks.expect(*qr.value >= make_rat(Int(F.n), an),
                      "coordinate-point quotient mld below n/a_n");

    rep.strata = weight_strata(F);
    for (const WeightStratum& st : rep.strata) {
        Int jmax;
        mpz_cdiv_q(jmax.get_mpz_t(), Int(2 * st.g).get_mpz_t(), an.get_mpz_t());
        const Int step = mod_floor(an, st.g);
        Int res = 0;
        bool ok = true;
        for (Int j = 1; j < jmax; ++j) {
            res += step;
            if (res >= st.g) res -= st.g;
            if (res <= j) {
                ok = false;
                break;
            }
        }
        rep.checks.expect(ok, "stratum (" + std::to_string(st.i1) + "," + std::to_string(st.i2) +
                                  ") fails the fractional-part criterion");
    }

    rep.checks.expect(make_rat(2, an) > closed_form_mld(F),
                      "2/a_n does not exceed the closed-form mld");
    return rep;
}

}  // namespace mldlab
