#include "support.hpp"

#include <algorithm>

#include "mldlab/newton.hpp"
#include "mldlab/polynomial.hpp"
#include "mldlab/simplex.hpp"

using namespace mldlab;

namespace {

WeightedPolynomial cone(std::vector<std::vector<int>> rows) {
    WeightedPolynomial p;
    const std::size_t nv = rows.at(0).size();
    p.weights.assign(nv, Int(1));  // weights are irrelevant to the slack LP
    for (auto& row : rows) {
        Monomial m;
        for (int x : row) m.exponents.push_back(x);
        p.monomials.push_back(std::move(m));
    }
    return p;
}

// Every certificate must be checkable by hand: lambdas positive and summing
// to one, and the combination point coordinatewise equal to 1 - slack at
// the binding coordinates, never above.
void require_sound(const WeightedPolynomial& p, const NewtonSlackCertificate& cert) {
    Rat lambda_sum = 0;
    for (const SlackTerm& t : cert.combination) {
        REQUIRE(t.lambda > 0);
        lambda_sum += t.lambda;
    }
    REQUIRE(lambda_sum == 1);
    const auto pt = combination_point(p, cert.combination);
    Rat maxc = pt.at(0);
    for (const Rat& x : pt) maxc = std::max(maxc, x);
    REQUIRE(maxc == 1 - cert.slack);
}

}  // namespace

TEST_CASE("slack of the basic surface cone") {
    // x0^2 + x1^3 + x1 x2: the optimum balances all coordinates at 2/3.
    const auto p = cone({{2, 0, 0}, {0, 3, 0}, {0, 1, 1}});
    const auto cert = newton_interior_slack(p);
    REQUIRE(cert.slack == make_rat(1, 3));
    require_sound(p, cert);

    // a hand-written non-optimal interior witness also certifies klt
    const std::vector<SlackTerm> hand = {
        {0, make_rat(5, 12)}, {1, make_rat(1, 6)}, {2, make_rat(5, 12)}};
    const auto pt = combination_point(p, hand);
    REQUIRE(pt == std::vector<Rat>{make_rat(5, 6), make_rat(11, 12), make_rat(5, 12)});
    for (const Rat& x : pt) REQUIRE(x < 1);
    REQUIRE(cert.slack >= make_rat(1, 12));
}

TEST_CASE("slack pins of small cones") {
    REQUIRE(newton_interior_slack(cone({{2, 0, 0}, {0, 3, 0}, {0, 1, 2}})).slack ==
            make_rat(1, 7));
    // ordinary double point
    REQUIRE(newton_interior_slack(cone({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})).slack ==
            make_rat(1, 3));
    // a single monomial: (1,...,1) can never be interior
    REQUIRE(newton_interior_slack(cone({{2}})).slack == -1);
    REQUIRE(newton_interior_slack(cone({{2, 0}, {0, 3}})).slack == make_rat(-1, 5));
}

TEST_CASE("slack is monotone under adding monomials") {
    const auto small = cone({{2, 0, 0}, {0, 3, 0}});
    const auto large = cone({{2, 0, 0}, {0, 3, 0}, {0, 1, 1}});
    REQUIRE(newton_interior_slack(small).slack <= newton_interior_slack(large).slack);
}

TEST_CASE("slack is invariant under variable permutation") {
    const auto p = cone({{2, 0, 0}, {0, 3, 0}, {0, 1, 1}});
    const auto q = cone({{0, 0, 2}, {0, 3, 0}, {1, 1, 0}});  // reversed variables
    REQUIRE(newton_interior_slack(p).slack == newton_interior_slack(q).slack);
    require_sound(q, newton_interior_slack(q));
}

TEST_CASE("combination_point validates indices") {
    const auto p = cone({{2, 0}, {0, 2}});
    REQUIRE_THROWS_AS(combination_point(p, {{5, Rat(1)}}), std::invalid_argument);
}

TEST_CASE("simplex handles the boundary cases behind the slack LP") {
    using namespace mldlab::lp;
    // infeasible: x1 + x2 = -1 with x >= 0 (normalization flips the row)
    {
        auto sol = minimize({{Rat(1), Rat(1)}}, {Rat(-1)}, {Rat(0), Rat(0)});
        REQUIRE(sol.status == Status::Infeasible);
    }
    // unbounded: minimize -x1 with x1 - x2 = 0
    {
        auto sol = minimize({{Rat(1), Rat(-1)}}, {Rat(0)}, {Rat(-1), Rat(0)});
        REQUIRE(sol.status == Status::Unbounded);
    }
    // redundant row: duplicated constraint still solves
    {
        auto sol = minimize({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, {Rat(1), Rat(1)},
                            {Rat(2), Rat(3)});
        REQUIRE(sol.status == Status::Optimal);
        REQUIRE(sol.objective == 2);
        REQUIRE(sol.x == std::vector<Rat>{Rat(1), Rat(0)});
    }
    // degenerate vertex: Bland's rule must still terminate
    {
        auto sol = minimize({{Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(-1), Rat(0)}},
                            {Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(-1)});
        REQUIRE(sol.status == Status::Optimal);
        REQUIRE(sol.objective == -1);
    }
}
