#include "support.hpp"

#include "mldlab/rational.hpp"
#include "mldlab/sylvester.hpp"

using namespace mldlab;

TEST_CASE("sylvester sequence opening terms") {
    REQUIRE(sylvester(0) == 2);
    REQUIRE(sylvester(1) == 3);
    REQUIRE(sylvester(2) == 7);
    REQUIRE(sylvester(3) == 43);
    REQUIRE(sylvester(4) == 1807);
    REQUIRE(sylvester(5) == 3263443);
}

TEST_CASE("sylvester recurrence and product identity") {
    for (std::size_t k = 1; k <= 12; ++k) {
        Int prev = sylvester(k - 1);
        REQUIRE(sylvester(k) == prev * prev - prev + 1);
    }
    Int prod = 1;
    for (std::size_t k = 0; k <= 12; ++k) {
        REQUIRE(sylvester_product(k) == prod);
        prod *= sylvester(k);
    }
    for (std::size_t k = 1; k <= 12; ++k) REQUIRE(sylvester_product(k) == sylvester(k) - 1);
}

TEST_CASE("sylvester terms are 3 mod 4 past the first") {
    REQUIRE(mod_floor(sylvester(0), 4) == 2);
    for (std::size_t k = 1; k <= 12; ++k) REQUIRE(mod_floor(sylvester(k), 4) == 3);
}

TEST_CASE("sylvester terms are pairwise coprime") {
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = i + 1; j <= 12; ++j) REQUIRE(gcd(sylvester(i), sylvester(j)) == 1);
}

TEST_CASE("reciprocal prefix sums") {
    REQUIRE(sylvester_prefix_sum(0) == make_rat(1, 2));
    REQUIRE(sylvester_prefix_sum(1) == make_rat(5, 6));
    REQUIRE(sylvester_prefix_sum(2) == make_rat(41, 42));
    REQUIRE(sylvester_prefix_sum(3) == make_rat(1805, 1806));
    // closed form: the sum through s_n is 1 - 1/(s_{n+1} - 1)
    for (std::size_t n = 0; n <= 10; ++n)
        REQUIRE(sylvester_prefix_sum(n) == 1 - make_rat(1, sylvester(n + 1) - 1));
}

TEST_CASE("make_rat canonicalizes") {
    REQUIRE(make_rat(6, 4) == make_rat(3, 2));
    REQUIRE(numerator(make_rat(6, 4)) == 3);
    REQUIRE(denominator(make_rat(6, 4)) == 2);
    REQUIRE(make_rat(1, -2) == make_rat(-1, 2));
    REQUIRE(denominator(make_rat(1, -2)) == 2);
    REQUIRE(rat_str(make_rat(0, 5)) == "0/1");
    REQUIRE_THROWS_AS(make_rat(1, 0), std::domain_error);
    REQUIRE(is_integer(make_rat(4, 2)));
    REQUIRE_FALSE(is_integer(make_rat(1, 3)));
}

TEST_CASE("floor, frac and mod_floor") {
    REQUIRE(frac(make_rat(7, 3)) == make_rat(1, 3));
    REQUIRE(frac(make_rat(-1, 4)) == make_rat(3, 4));
    REQUIRE(frac(Rat(5)) == 0);
    REQUIRE(floor_rat(make_rat(-1, 4)) == -1);
    REQUIRE(floor_rat(make_rat(7, 3)) == 2);
    REQUIRE(mod_floor(13, 5) == 3);
    REQUIRE(mod_floor(-3, 5) == 2);
    REQUIRE(mod_floor(0, 7) == 0);
    REQUIRE_THROWS_AS(mod_floor(3, 0), std::domain_error);
    REQUIRE_THROWS_AS(mod_floor(3, -5), std::domain_error);
}

TEST_CASE("exact division") {
    REQUIRE(exact_div(282, 47) == 6);
    REQUIRE(exact_div(-6, 3) == -2);
    REQUIRE_THROWS_AS(exact_div(7, 3), std::domain_error);
    REQUIRE_THROWS_AS(exact_div(7, 0), std::domain_error);
}

TEST_CASE("powers") {
    REQUIRE(int_pow(3, 5) == 243);
    REQUIRE(int_pow(7, 0) == 1);
    REQUIRE(rat_pow(make_rat(2, 3), 3) == make_rat(8, 27));
    REQUIRE(rat_pow(make_rat(2, 3), 0) == 1);
    REQUIRE(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
    REQUIRE_THROWS_AS(rat_pow(Rat(0), -1), std::domain_error);
}

TEST_CASE("parsing and printing") {
    REQUIRE(parse_int("123") == 123);
    REQUIRE(parse_int("-4") == -4);
    REQUIRE(parse_int("737536085") == 737536085);
    REQUIRE_THROWS_AS(parse_int("12a"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_int(""), std::invalid_argument);
    REQUIRE(parse_rat("3/6") == make_rat(1, 2));
    REQUIRE(parse_rat("7") == 7);
    REQUIRE(parse_rat("-5/10") == make_rat(-1, 2));
    REQUIRE_THROWS_AS(parse_rat("1/0"), std::domain_error);
    REQUIRE(int_str(Int("3263443")) == "3263443");
    REQUIRE(rat_str(make_rat(903, 737536085)) == "903/737536085");
    REQUIRE(rat_str(Rat(1)) == "1/1");
}
