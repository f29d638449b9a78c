#pragma once

// Newton-polytope interiority certificate. The point (1,...,1) lies in the
// interior of the Newton polytope Gamma_+(f) iff some convex combination of
// the exponent vectors is coordinatewise strictly below (1,...,1); the LP
// below maximizes the uniform slack delta and returns the witnessing
// combination, so a positive slack is a checkable klt certificate.

#include <cstddef>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"
#include "simplex.hpp"

namespace mldlab {

struct SlackTerm {
    std::size_t monomial;  // index into the polynomial's monomial list
    Rat lambda;            // barycentric coefficient, > 0
};

struct NewtonSlackCertificate {
    Rat slack;  // delta; > 0 iff (1,...,1) is interior
    std::vector<SlackTerm> combination;
};

// The convex combination's point: sum_k lambda_k * m_k.
inline std::vector<Rat> combination_point(const WeightedPolynomial& p,
                                          const std::vector<SlackTerm>& combination) {
    std::vector<Rat> pt(p.variable_count(), Rat(0));
    for (const SlackTerm& t : combination) {
        if (t.monomial >= p.monomials.size())
            throw std::invalid_argument("combination_point: monomial index out of range");
        const Monomial& m = p.monomials[t.monomial];
        for (std::size_t i = 0; i < pt.size(); ++i) pt[i] += t.lambda * Rat(m.exponents[i]);
    }
    return pt;
}

// Maximize delta subject to sum_k lambda_k m_k <= (1-delta)*(1,...,1),
// lambda >= 0, sum lambda = 1. Solved as: minimize t with
//   sum_k m_k[i] lambda_k - t + s_i = 0   (i < V, slack s_i >= 0)
//   sum_k lambda_k = 1
// and delta = 1 - t. (t >= 0 holds automatically: exponents are >= 0.)
inline NewtonSlackCertificate newton_interior_slack(const WeightedPolynomial& p) {
    p.validate();
    const std::size_t K = p.monomials.size();
    const std::size_t V = p.variable_count();
    const std::size_t ncols = K + 1 + V;  // lambda_0..K-1, t, s_0..V-1

    std::vector<std::vector<Rat>> a(V + 1, std::vector<Rat>(ncols, Rat(0)));
    std::vector<Rat> b(V + 1, Rat(0));
    for (std::size_t i = 0; i < V; ++i) {
        for (std::size_t k = 0; k < K; ++k) a[i][k] = Rat(p.monomials[k].exponents[i]);
        a[i][K] = -1;
        a[i][K + 1 + i] = 1;
    }
    for (std::size_t k = 0; k < K; ++k) a[V][k] = 1;
    b[V] = 1;
    std::vector<Rat> c(ncols, Rat(0));
    c[K] = 1;

    lp::Solution sol = lp::minimize(a, b, c);
    if (sol.status != lp::Status::Optimal)
        throw std::logic_error("newton_interior_slack: LP did not solve");  // cannot happen

    NewtonSlackCertificate cert;
    cert.slack = Rat(1) - sol.objective;
    for (std::size_t k = 0; k < K; ++k)
        if (sol.x[k] > 0) cert.combination.push_back({k, sol.x[k]});
    return cert;
}

}  // namespace mldlab
