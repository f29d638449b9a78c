#include "support.hpp"

#include "mldlab/alpha.hpp"
#include "mldlab/family.hpp"
#include "mldlab/newton.hpp"

using namespace mldlab;

TEST_CASE("tangent cone of the surface member") {
    const FamilyMember F = build_family(2);
    const TangentCone tc = tangent_cone(F);
    REQUIRE(tc.b_weights == std::vector<Int>{3, 2, 4});
    REQUIRE(tc.degree == 6);
    REQUIRE(tc.cone.monomials.size() == 3);
    REQUIRE(monomial_name(tc.cone.monomials[0]) == "x0^2");
    REQUIRE(monomial_name(tc.cone.monomials[1]) == "x1^3");
    REQUIRE(monomial_name(tc.cone.monomials[2]) == "x1*x2");
    REQUIRE(monomial_name(tc.dropped) == "x2^19");
}

TEST_CASE("tangent cone of the threefold member") {
    const FamilyMember F = build_family(3);
    const TangentCone tc = tangent_cone(F);
    REQUIRE(tc.b_weights == std::vector<Int>{21, 14, 6, 11});
    REQUIRE(tc.degree == 42);
    REQUIRE(tc.cone.monomials.size() == 4);
    REQUIRE(monomial_name(tc.cone.monomials[3]) == "x1*x2*x3^2");
    REQUIRE(monomial_name(tc.dropped) == "x3^451");
}

TEST_CASE("tangent cone b-weights stay integral") {
    REQUIRE(tangent_cone(build_family(4)).b_weights.back() == 904);
    for (int n = 2; n <= 8; ++n) {
        const TangentCone tc = tangent_cone(build_family(n));
        REQUIRE(homogeneous_degree(tc.cone) == std::optional<Int>(tc.degree));
    }
}

TEST_CASE("tangent cones are klt across the desk range") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        REQUIRE(tangent_cone_klt(build_family(n)));
    }
}

TEST_CASE("alpha bounds of the surface member, fully pinned") {
    const AlphaBounds ab = alpha_bounds(build_family(2));
    REQUIRE(ab.ambient_mult_bound == make_rat(455, 282));
    REQUIRE(ab.cone_degree_bound == make_rat(39, 4));
    REQUIRE(ab.cone_mult_bound == make_rat(13, 4));
    REQUIRE(ab.cone_point_bound == make_rat(13, 4));
    REQUIRE(ab.lower == make_rat(455, 282));
    REQUIRE(ab.upper == make_rat(175, 6));
}

TEST_CASE("alpha bounds of the threefold member") {
    const AlphaBounds ab = alpha_bounds(build_family(3));
    REQUIRE(ab.ambient_mult_bound == make_rat(2425067, 227262));
    REQUIRE(ab.cone_mult_bound == make_rat(493, 7));
    REQUIRE(ab.cone_point_bound == make_rat(4437, 88));
    REQUIRE(ab.lower == ab.ambient_mult_bound);
}

TEST_CASE("the smooth-point bound is always the binding one") {
    for (int n = 2; n <= 10; ++n) {
        CAPTURE(n);
        const AlphaBounds ab = alpha_bounds(build_family(n));
        REQUIRE(ab.lower == ab.ambient_mult_bound);
        REQUIRE(ab.ambient_mult_bound < ab.cone_degree_bound);
        REQUIRE(ab.ambient_mult_bound < ab.cone_mult_bound);
        REQUIRE(ab.ambient_mult_bound < ab.cone_point_bound);
        REQUIRE(ab.lower > 1);
        REQUIRE(ab.lower <= ab.upper);
    }
}

TEST_CASE("cone point and cone mult bounds swap order past the surface") {
    // equal at n = 2, after that the singular-locus bound is the weaker one
    const AlphaBounds a2 = alpha_bounds(build_family(2));
    REQUIRE(a2.cone_point_bound == a2.cone_mult_bound);
    for (int n = 3; n <= 10; ++n) {
        CAPTURE(n);
        const AlphaBounds ab = alpha_bounds(build_family(n));
        REQUIRE(ab.cone_point_bound < ab.cone_mult_bound);
    }
}

TEST_CASE("exceptionality certificate") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        const auto rep = verify_exceptional(build_family(n));
        CAPTURE(rep.failures);
        REQUIRE(rep.ok());
    }
}

TEST_CASE("fermat threshold") {
    REQUIRE(fermat_lct(build_family(2)) == make_rat(5, 6));
    REQUIRE(fermat_lct(build_family(3)) == make_rat(41, 42));
    REQUIRE(fermat_lct(build_family(4)) == make_rat(1805, 1806));
    for (int n = 2; n <= 10; ++n) {
        const FamilyMember F = build_family(n);
        REQUIRE(fermat_lct(F) == make_rat(F.s - 2, F.s - 1));
        REQUIRE(fermat_lct(F) < 1);
    }
}

TEST_CASE("asymptotic envelopes") {
    for (int n = 2; n <= 10; ++n) {
        CAPTURE(n);
        const FamilyMember F = build_family(n);
        const AlphaBounds ab = alpha_bounds(F);
        const Rat s(F.s);

        // the binding bound tracks s_n/4 within a factor of two
        REQUIRE(ab.ambient_mult_bound >= s / 8);
        REQUIRE(ab.ambient_mult_bound <= s / 2);

        // the generic upper bound tracks s_n^3/8 (even) or s_n^3/16 (odd)
        const Rat cube = s * s * s;
        const Rat target = F.even ? cube / 8 : cube / 16;
        REQUIRE(ab.upper >= target / 2);
        REQUIRE(ab.upper <= target * 2);
    }
}
