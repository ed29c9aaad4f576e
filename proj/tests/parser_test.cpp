#include <doctest.h>

#include "milnor/errors.hpp"
#include "milnor/parser.hpp"
#include "milnor/poly.hpp"

using namespace milnor;

TEST_CASE("basic polynomial parsing") {
    HomogeneousPoly f = parse_poly("x^2+y^2+z^2");
    CHECK(f.degree() == 2);
    CHECK(f.terms().size() == 3);
    CHECK(f.terms().at(Monomial{2, 0, 0}) == 1);
}

TEST_CASE("expansion of a composite expression") {
    HomogeneousPoly f = parse_poly("(x^2+y^2)^3 + (y^3+z^3)^2");
    CHECK(f.degree() == 6);
    // x^60 + 3x^4y^2 + 3x^2y^4 + (y^6 + y^6) + 2y^3z^3 + z^6 -> 6 distinct terms
    CHECK(f.terms().size() == 6);
    CHECK(f.terms().at(Monomial{0, 6, 0}) == 2);
    CHECK(f.terms().at(Monomial{4, 2, 0}) == 3);
    CHECK(f.terms().at(Monomial{0, 3, 3}) == 2);
}

TEST_CASE("rational coefficients") {
    HomogeneousPoly f = parse_poly("1/2*x^3 - 3/4*y^3 + z^3");
    CHECK(f.terms().at(Monomial{3, 0, 0}) == Rat(1, 2));
    CHECK(f.terms().at(Monomial{0, 3, 0}) == Rat(-3, 4));
}

TEST_CASE("implicit multiplication") {
    CHECK(parse_poly("xyz") == parse_poly("x*y*z"));
    CHECK(parse_poly("3x^2y") == parse_poly("3*x^2*y"));
    CHECK(parse_poly("(x+y)(x-y)") == parse_poly("x^2 - y^2"));
    CHECK(parse_poly("2(x+y)z^2") == parse_poly("2*x*z^2 + 2*y*z^2"));
}

TEST_CASE("signs and precedence") {
    CHECK(parse_poly("-x^2 + y^2") == parse_poly("y^2 - x^2"));
    CHECK(parse_poly("x - (-y)") == parse_poly("x + y"));
    CHECK_THROWS_AS(parse_poly("x - -y"), SyntaxError); // signs only lead an expression
    CHECK(parse_poly("-(x+y)^2") == -parse_poly("(x+y)^2"));
    // '^' binds tighter than unary minus and products
    CHECK(parse_poly("2x^2") == parse_poly("2*(x^2)"));
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_poly("3 4"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(x+y"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^y"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x/y"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1/0*x"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("w^3"), SyntaxError);
    try {
        parse_poly("x^2 + @");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 6);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("homogeneity is enforced after expansion") {
    CHECK_THROWS_AS(parse_poly("x^2 + y"), NotHomogeneous);
    CHECK_THROWS_AS(parse_poly("(x+y)^2 + z"), NotHomogeneous);
    // cancellation to the zero polynomial is fine
    CHECK(parse_poly("x^2 - x^2").is_zero());
}

TEST_CASE("parse-render round trip") {
    for (const char* text : {
             "x^6 + y^6 + z^6",
             "(x^2+y^2)^3 + (y^3+z^3)^2",
             "1/3*x^4 - 2*x^2*y*z + y^4 - z^4",
             "x^10*y*z - 21*x^4*y^4*z^4",
         }) {
        HomogeneousPoly once = parse_poly(text);
        HomogeneousPoly twice = parse_poly(once.str());
        CHECK(once == twice);
    }
}
