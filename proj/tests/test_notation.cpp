#include "nilgc/notation.hpp"

#include <doctest.h>

using namespace nilgc;

namespace {

const GaussianRational I = GaussianRational::i();

Form e(int dim, std::vector<int> idx, GaussianRational c = 1) { return Form::basis(dim, idx, c); }

}  // namespace

TEST_CASE("algebra notation") {
    auto h = parse_algebra("(0,0,12)");
    CHECK(h.dim() == 3);
    CHECK(h.d_generator(3) == e(3, {1, 2}));

    auto g = parse_algebra("(0,0,0,12,13,14+35)");
    CHECK(g.d_generator(4) == e(6, {1, 2}));
    CHECK(g.d_generator(5) == e(6, {1, 3}));
    CHECK(g.d_generator(6) == e(6, {1, 4}) + e(6, {3, 5}));

    g = parse_algebra("(0,0,12,13,23,14-25)");
    CHECK(g.d_generator(6) == e(6, {1, 4}) - e(6, {2, 5}));

    g = parse_algebra("(0,0,12,13,14,34+52)");
    CHECK(g.d_generator(6) == e(6, {3, 4}) - e(6, {2, 5}));

    g = parse_algebra(" ( 0 , 0 , 0 , 12 , 14 , 13 + 42 ) ");
    CHECK(g.d_generator(6) == e(6, {1, 3}) - e(6, {2, 4}));

    g = parse_algebra("(0,0,0,12,13,2×14)");
    CHECK(g.d_generator(6) == e(6, {1, 4}, 2));
    CHECK(parse_algebra("(0,0,0,12,13,2*14)") == g);

    CHECK(to_compact(parse_algebra("(0,0,12,13,14+23,34+52)")) == "(0,0,12,13,14+23,-25+34)");
    CHECK(parse_algebra(to_compact(g)) == g);
}

TEST_CASE("algebra notation errors") {
    CHECK_THROWS_AS(parse_algebra("(0,0,1)"), ParseError);
    CHECK_THROWS_AS(parse_algebra("(0,0,123)"), ParseError);
    CHECK_THROWS_AS(parse_algebra("(0,0,11)"), ParseError);
    CHECK_THROWS_AS(parse_algebra("(0,0,12"), ParseError);
    CHECK_THROWS_AS(parse_algebra("(0,0,17)"), ParseError);
    CHECK_THROWS_AS(parse_algebra("(0,0,i12)"), ParseError);
    CHECK_THROWS_AS(parse_algebra("(0,0,0,0,0,0,0,0,0,0)"), ParseError);
}

TEST_CASE("form notation examples") {
    const Form theta = e(6, {1}) + e(6, {2}, I);
    const Form w = e(6, {3, 6}) - e(6, {4, 5});
    CHECK(parse_form("(1+i2)exp i(36-45)", 6) == wedge(wedge_exp(I * w), theta));
    CHECK(parse_form("16 + 34 - 25", 6) == e(6, {1, 6}) + e(6, {3, 4}) - e(6, {2, 5}));
    CHECK(parse_form("(1+i2)(3 - 2 × i4)(5 + 2 × i6)", 6) ==
          wedge(wedge(theta, e(6, {3}) - e(6, {4}, GaussianRational(0, 2))), e(6, {5}) + e(6, {6}, GaussianRational(0, 2))));

    const auto s = parse_compact_spinor("(1+i2)exp(-45+36+i(36+45))", 6);
    CHECK(s.thetas.size() == 1);
    CHECK(s.exponent == -e(6, {4, 5}) + e(6, {3, 6}) + I * (e(6, {3, 6}) + e(6, {4, 5})));

    const auto p = parse_compact_spinor("(1+2+i3)(5+i4)exp(3+i1)6", 6);
    CHECK(p.thetas.size() == 2);
    CHECK(p.thetas[0] == e(6, {1}) + e(6, {2}) + e(6, {3}, I));
    CHECK(p.exponent == wedge(e(6, {3}) + e(6, {1}, I), e(6, {6})));

    const auto q = parse_compact_spinor("(1+i2)exp(2×35+i(36-45))", 6);
    CHECK(q.exponent == e(6, {3, 5}, 2) + I * w);

    const auto r = parse_compact_spinor("(1+i2)exp(45-35+36+i(-36+45-16))", 6);
    CHECK(r.exponent == e(6, {4, 5}) - e(6, {3, 5}) + e(6, {3, 6}) + I * (-e(6, {3, 6}) + e(6, {4, 5}) - e(6, {1, 6})));

    const auto bare = parse_compact_spinor("12+34+56", 6);
    CHECK(bare.bare_two_form);
    CHECK(bare.two_form == e(6, {1, 2}) + e(6, {3, 4}) + e(6, {5, 6}));

    CHECK(parse_form("(1+i2)(3+4+i4)(5+6-i6)", 6).pure_degree() == 3);
    CHECK(parse_form("15+2×26+34", 6) == e(6, {1, 5}) + e(6, {2, 6}, 2) + e(6, {3, 4}));
}

TEST_CASE("form notation errors") {
    CHECK_THROWS_AS(parse_form("(12+i3)", 6), ParseError);
    CHECK_THROWS_AS(parse_form("(1+i2)exp i(3)", 6), ParseError);
    CHECK_THROWS_AS(parse_form("(1+i7)", 6), ParseError);
    CHECK_THROWS_AS(parse_form("(1+i2)exp", 6), ParseError);
    CHECK_THROWS_AS(parse_form("(1+i2) junk", 6), ParseError);
    CHECK_THROWS_AS(parse_form("1", 6), ParseError);
}

TEST_CASE("two-form and bivector text") {
    CHECK(parse_two_form("35-46", 6) == e(6, {3, 5}) - e(6, {4, 6}));
    const Polyvector beta = parse_bivector("-1/4*(3-i4)(5-i6)", 6);
    const Polyvector x = Polyvector::generator(6, 3) - Polyvector::generator(6, 4, I);
    const Polyvector y = Polyvector::generator(6, 5) - Polyvector::generator(6, 6, I);
    CHECK(beta == GaussianRational::fraction(-1, 4) * wedge(x, y));
    CHECK(parse_bivector("12+34", 4) == Polyvector::basis(4, {1, 2}) + Polyvector::basis(4, {3, 4}));
}

TEST_CASE("JSON formats round trip") {
    const auto g = parse_algebra("(0,0,12,13,14,15,16,36-45-27)");
    const auto j = algebra_to_json(g);
    CHECK(j.at("dim") == 8);
    CHECK(algebra_from_json(j) == g);
    CHECK(algebra_from_json(nlohmann::json::parse(j.dump())) == g);

    const Form f = parse_form("(1+i2)exp i(36-45)", 6);
    CHECK(form_from_json(form_to_json(f), 6) == f);
    const auto parsed = form_from_json(nlohmann::json::parse(R"([{"c":"1/2+i","blade":[2,1]}])"), 3);
    CHECK(parsed == e(3, {1, 2}, GaussianRational::fraction(-1, 2, -1, 1)));
    CHECK_THROWS_AS(algebra_from_json(nlohmann::json::parse(R"({"d":{}})")), ParseError);
    CHECK_THROWS_AS(algebra_from_json(nlohmann::json::parse(R"({"dim":3,"d":{"2":[{"c":"1","blade":[1,3]}]}})")),
                    ValidationError);
}
