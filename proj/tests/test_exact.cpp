#include "doctest.h"

#include "stirdet/exact.hpp"

using namespace stirdet;

TEST_CASE("exact_div divides exactly or refuses")
{
    CHECK(exact_div(ExactInt(84), ExactInt(-7), "t") == -12);
    CHECK_THROWS_AS(exact_div(ExactInt(85), ExactInt(7), "t"), ExactnessViolation);
    CHECK_THROWS_AS(exact_div(ExactInt(1), ExactInt(0), "t"), ExactnessViolation);
}

TEST_CASE("rpow handles negative exponents")
{
    CHECK(rpow(ExactRat(2), -3) == make_rat(1, 8));
    CHECK(rpow(make_rat(-2, 3), 3) == make_rat(-8, 27));
    CHECK(rpow(ExactRat(5), 0) == 1);
    CHECK_THROWS_AS(rpow(ExactRat(0), -1), DomainError);
}

TEST_CASE("make_rat normalizes")
{
    const ExactRat r = make_rat(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
}

TEST_CASE("to_integer accepts only integral rationals")
{
    CHECK(to_integer(make_rat(10, 5), "t") == 2);
    CHECK_THROWS_AS(to_integer(make_rat(1, 2), "t"), ExactnessViolation);
}

TEST_CASE("parsing")
{
    CHECK(parse_int("-123456789012345678901234567890") == ExactInt("-123456789012345678901234567890"));
    CHECK(parse_int("+5") == 5);
    CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("12a"), std::invalid_argument);
    CHECK(parse_rat("-3/6") == make_rat(-1, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK_THROWS_AS(factorial(-1), DomainError);
}
