#include <doctest.h>

#include "milnor/curve.hpp"
#include "milnor/errors.hpp"
#include "milnor/parser.hpp"
#include "milnor/syzygy.hpp"

using namespace milnor;

namespace {

HomogeneousPoly apply_to_partials(const CurveInput& c, const SyzygyTriple& t) {
    return t.a * c.fx() + t.b * c.fy() + t.c * c.fz();
}

SyzygyTriple triple_of(int j, const char* a, const char* b, const char* c) {
    SyzygyTriple t;
    t.j = j;
    t.a = parse_poly(a);
    t.b = parse_poly(b);
    t.c = parse_poly(c);
    return t;
}

} // namespace

TEST_CASE("triple/row conversions round trip") {
    SyzygyTriple t = triple_of(2, "x^2 - y*z", "2*y^2", "0");
    SparseRow r = t.to_row();
    SyzygyTriple back = SyzygyTriple::from_row(r, 2);
    CHECK(back.j == 2);
    // reconstruction is projective (rows are primitive integer vectors)
    CHECK(back.a * t.b == back.b * t.a);
    CHECK(back.a == t.a);
    CHECK(back.b == t.b);
    CHECK(back.c.is_zero());
}

TEST_CASE("degree-3 syzygy of the six-cusp sextic") {
    CurveInput c = validate(parse_poly("(x^2+y^2)^3 + (y^3+z^3)^2"));
    auto triples = syzygy_space(c, 3);
    REQUIRE(triples.size() == 1);
    CHECK(apply_to_partials(c, triples[0]).is_zero());
    // the space is spanned by (y*z^2, -x*z^2, x*y^2)
    SyzygyTriple known = triple_of(3, "y*z^2", "-x*z^2", "x*y^2");
    CHECK(apply_to_partials(c, known).is_zero());
    RowEchelon span(3 * space_dim(3));
    span.insert(triples[0].to_row());
    CHECK(span.contains(known.to_row()));
}

TEST_CASE("generator profile of the six-cusp sextic") {
    CurveInput c = validate(parse_poly("(x^2+y^2)^3 + (y^3+z^3)^2"));
    GeneratorProfile p = generator_profile(c, 10);
    REQUIRE(static_cast<int>(p.rows.size()) == 11);
    CHECK(p.rows[3].dim == 1);
    CHECK(p.rows[3].new_gens == 1);
    CHECK(p.rows[5].new_gens == 3);
    CHECK(p.degrees == std::vector<int>{3, 5, 5, 5});
    CHECK_FALSE(p.boundary_warning);
    CHECK_THROWS_AS(generator_profile(c, 0), BadParameter);
}

TEST_CASE("classification of the catalog sextics") {
    CurveInput e14 = validate(parse_poly("(x*z-y^2)^3 - x^2*y^4"));
    Classification ce = classify(e14);
    CHECK(ce.kind == CurveClass::Free);
    CHECK(ce.d1 == 2);
    CHECK(ce.d2 == 3);
    CHECK(free_tjurina(e14.degree(), ce.d1, ce.d2) == e14.tjurina());

    CurveInput nc = validate(parse_poly("x^6+y^6+z^6-2*(x^3*y^3+x^3*z^3+y^3*z^3)"));
    Classification cn = classify(nc);
    CHECK(cn.kind == CurveClass::NearlyFree);
    CHECK(cn.d1 == 3);
    CHECK(cn.d2 == 3);
    CHECK(nearly_free_tjurina(nc.degree(), cn.d1, cn.d2) == nc.tjurina());

    CurveInput za = validate(parse_poly("(x^2+y^2)^3 + (y^3+z^3)^2"));
    CHECK(classify(za).kind == CurveClass::Other);
}

TEST_CASE("smooth curves have three generators one degree down") {
    CurveInput c = validate(parse_poly("x^5+y^5+z^5"));
    Classification cl = classify(c);
    CHECK(cl.kind == CurveClass::Other);
    CHECK(cl.degrees == std::vector<int>{4, 4, 4});
}

TEST_CASE("generator search below the last found degree is inconclusive") {
    CurveInput c = validate(parse_poly("x^4+y^4+z^4"));
    CHECK_THROWS_AS(classify(c, {}, 3), InconclusiveBound); // generators appear at j = 3
    CHECK(classify(c, {}, 6).kind == CurveClass::Other);
}

TEST_CASE("free classification asserts the exponent sum invariant") {
    // cone over four points: free with exponents (0, 3)
    CurveInput c = validate(parse_poly("x*y*(x+y)*(x+2*y)"));
    Classification cl = classify(c);
    CHECK(cl.kind == CurveClass::Free);
    CHECK(cl.d1 == 0);
    CHECK(cl.d2 == 3);
    CHECK(cl.d1 + cl.d2 == c.degree() - 1);
    CHECK(free_tjurina(c.degree(), cl.d1, cl.d2) == c.tjurina());
    CHECK(c.tjurina() == 9); // ordinary fourfold point
}

TEST_CASE("minimal generators are genuine syzygies spanning the new degrees") {
    CurveInput c = validate(parse_poly("x^6+y^6+z^6-2*(x^3*y^3+x^3*z^3+y^3*z^3)"));
    auto gens = minimal_generators(c, 3);
    REQUIRE(static_cast<int>(gens.size()) == new_generator_count(c, 3));
    for (const auto& g : gens) CHECK(apply_to_partials(c, g).is_zero());
    CHECK(minimal_generators(c, 4).empty());
}

TEST_CASE("free syzygy dimension formula") {
    CurveInput c = validate(parse_poly("(x*z-y^2)^3 - x^2*y^4"));
    Classification cl = classify(c);
    REQUIRE(cl.kind == CurveClass::Free);
    for (int k = 0; k <= 10; ++k) CHECK(ar_dim(c, k) == free_ar_dim(k, cl.d1, cl.d2));
}
