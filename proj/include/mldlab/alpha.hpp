#pragma once

// Alpha-invariant bounds for the family members, plus the tangent-cone
// machinery their lower bound depends on. The four upper bounds come from
// explicit divisor constructions; the binding one (the overall lower bound
// for 1/alpha... see README for orientation) is always the smooth-point
// multiplicity bound.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "family.hpp"
#include "newton.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "sylvester.hpp"

namespace mldlab {

// Lowest-degree part of the suspect-point chart under the weights that make
// the scan lattice integral: b_i = (s_n - 1)/s_i for i < n and a balanced
// last entry. Dropping x_n^b (the unique monomial of higher b-degree) leaves
// a homogeneous cone of degree s_n - 1.
struct TangentCone {
    std::vector<Int> b_weights;
    WeightedPolynomial cone;
    Int degree;
    Monomial dropped;
};

inline TangentCone tangent_cone(const FamilyMember& F) {
    const std::size_t n = static_cast<std::size_t>(F.n);
    TangentCone tc;
    for (std::size_t i = 0; i < n; ++i)
        tc.b_weights.push_back(exact_div(F.s - 1, sylvester(i)));
    tc.b_weights.push_back(F.even ? exact_div(F.s + 1, Int(2)) : exact_div(F.s + 1, Int(4)));
    tc.degree = F.s - 1;

    const WeightedPolynomial chart = nonquasismooth_chart(F);
    Monomial pure;  // x_n^b, the one monomial above the cutoff
    pure.exponents.assign(n + 1, Int(0));
    pure.exponents[n] = F.b;

    tc.cone.weights = tc.b_weights;
    bool found = false;
    for (const Monomial& m : chart.monomials) {
        if (m == pure) {
            found = true;
            tc.dropped = m;
            if (weighted_degree(m, tc.b_weights) <= tc.degree)
                throw std::logic_error("dropped monomial fails to exceed the cone degree");
            continue;
        }
        if (weighted_degree(m, tc.b_weights) != tc.degree)
            throw std::logic_error("cone monomial " + monomial_name(m) +
                                   " is not of b-degree s_n - 1");
        tc.cone.monomials.push_back(m);
    }
    if (!found) throw std::logic_error("chart is missing the x_n^b monomial");
    tc.cone.validate();
    return tc;
}

inline bool tangent_cone_klt(const FamilyMember& F) {
    return newton_interior_slack(tangent_cone(F).cone).slack > 0;
}

// Four independent upper bounds for the multiplier nu (equivalently, lower
// bounds 1/nu for alpha), and the window [lower, upper] they pin down.
struct AlphaBounds {
    Rat ambient_mult_bound;  // from multiplicity at smooth points
    Rat cone_degree_bound;   // from the tangent-cone degree
    Rat cone_mult_bound;     // from multiplicity along the cone's singular locus
    Rat cone_point_bound;    // from the cone's distinguished point
    Rat lower;               // min of the four: valid bound nu <= lower
    Rat upper;               // generic construction: nu can reach upper
};

inline AlphaBounds alpha_bounds(const FamilyMember& F) {
    const std::size_t n = static_cast<std::size_t>(F.n);
    const Int& s = F.s;
    const Int& an = F.a[n];
    const Int& an1 = F.a[n + 1];
    AlphaBounds ab;

    ab.ambient_mult_bound = make_rat(an * an1, F.d);
    ab.cone_degree_bound =
        F.even ? make_rat((s - 1) * an, s + 1) : make_rat((s - 3) * an, s + 1);

    const Int sm1 = sylvester(n - 1);
    if (F.even) {
        ab.cone_mult_bound = make_rat(2 * an * (s - 1), sylvester(n - 2) * sm1 * (s + 1));
    } else if (F.n == 3) {
        ab.cone_mult_bound = make_rat(an, sm1);
    } else {
        ab.cone_mult_bound = make_rat(4 * an * (s - 1), sylvester(n - 2) * sm1 * (s + 1));
    }

    if (F.n == 2) {
        ab.cone_point_bound = make_rat(2 * an, sylvester(2) + 1);
    } else {
        // (2 or 4) a_n (s-1)^{n-2} / (s_{n-1}^{n-2} (s_{n-1}+1)^2 (s_{n-1}-1)^{n-4} (s+1));
        // at n = 3 the last power has exponent -1 and divides the numerator.
        Rat num = make_rat(F.even ? 4 * an : 8 * an, 1) * rat_pow(make_rat(s - 1, 1), F.n - 2);
        Rat den = rat_pow(make_rat(sm1, 1), F.n - 2) * make_rat((sm1 + 1) * (sm1 + 1), 1) *
                  rat_pow(make_rat(sm1 - 1, 1), F.n - 4) * make_rat(s + 1, 1);
        ab.cone_point_bound = num / den;
    }

    ab.lower = std::min({ab.ambient_mult_bound, ab.cone_degree_bound, ab.cone_mult_bound,
                         ab.cone_point_bound});
    ab.upper = make_rat((s - 2) * an1, s - 1);
    return ab;
}

// The member is exceptional when the multiplier window sits strictly above 1
// and the tangent cone is klt.
inline CheckReport verify_exceptional(const FamilyMember& F) {
    CheckReport rep;
    const AlphaBounds ab = alpha_bounds(F);
    rep.expect(ab.lower == ab.ambient_mult_bound,
               "binding bound is not the smooth-point one");
    rep.expect(ab.lower > 1, "multiplier lower bound does not exceed 1");
    rep.expect(ab.lower <= ab.upper, "bound window is empty");
    rep.expect(tangent_cone_klt(F), "tangent cone is not klt");
    return rep;
}

// Log canonical threshold of the Fermat-type part x_0^{s_0} + ... +
// x_{n-1}^{s_{n-1}}: the prefix sum of Sylvester reciprocals, capped at 1.
inline Rat fermat_lct(const FamilyMember& F) {
    Rat v = std::min(sylvester_prefix_sum(static_cast<std::size_t>(F.n) - 1), Rat(1));
    if (v != make_rat(F.s - 2, F.s - 1))
        throw std::logic_error("fermat lct disagrees with its closed form");
    return v;
}

}  // namespace mldlab
