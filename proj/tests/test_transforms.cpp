#include "nilgc/cohomology.hpp"
#include "nilgc/notation.hpp"
#include "nilgc/transforms.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace nilgc;

namespace {

const char* const kIwasawa = "(0,0,0,0,13-24,14+23)";

Form iwasawa_rho() { return parse_form("(1+i2)(3+i4)(5+i6)", 6); }

// Direct expansion on decomposables given as lists of vectors.
Polyvector naive_schouten(const std::vector<Polyvector>& xs, const std::vector<Polyvector>& ys, const NilAlgebra& g) {
    const int n = g.dim();
    Polyvector out(n);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < ys.size(); ++j) {
            Polyvector term = lie_bracket(xs[i], ys[j], g);
            for (std::size_t a = 0; a < xs.size(); ++a)
                if (a != i) term = wedge(term, xs[a]);
            for (std::size_t b = 0; b < ys.size(); ++b)
                if (b != j) term = wedge(term, ys[b]);
            out += ((i + j) % 2 == 0) ? term : -term;
        }
    }
    return out;
}

Polyvector wedge_list(int n, const std::vector<Polyvector>& v) {
    Polyvector out = Polyvector::scalar(n, 1);
    for (const auto& x : v) out = wedge(out, x);
    return out;
}

GaussianRational sign_of(int e) { return e % 2 == 0 ? GaussianRational(1) : GaussianRational(-1); }

}  // namespace

TEST_CASE("projective equality") {
    const Form a = iwasawa_rho();
    CHECK(projectively_equal(a, GaussianRational::fraction(3, 2, 0, 1) * a));
    CHECK(*projective_factor(a, GaussianRational::i() * a) == GaussianRational::i());
    CHECK_FALSE(projectively_equal(a, a + Form::scalar(6, 1)));
    CHECK_FALSE(projectively_equal(a, Form(6)));
}

TEST_CASE("beta transform of the Iwasawa complex structure") {
    const Polyvector beta = parse_bivector("-1/4*(3-i4)(5-i6)", 6);
    const Form out = beta_transform(iwasawa_rho(), beta);
    const Form B = parse_two_form("35-46", 6);
    const Form w = parse_two_form("45+36", 6);
    const Form expected = wedge(wedge_exp(-B - GaussianRational::i() * w), parse_form("(1+i2)", 6));
    CHECK(out == -expected);
    CHECK(*projective_factor(expected, out) == GaussianRational(-1));

    const NilAlgebra g = parse_algebra(kIwasawa);
    const Form shifted = b_transform(out, B, g);
    CHECK(shifted == -wedge(wedge_exp(-GaussianRational::i() * w), parse_form("(1+i2)", 6)));
    CHECK(check_gcs(shifted, g).is_gcs);
    CHECK(type_of(shifted) == 1);
}

TEST_CASE("beta transform inverts") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Form rho = testsupport::random_form(rng, 6, 8);
        Polyvector beta(6);
        for (const auto& b : blades_of_grade(6, 2))
            if (rng() % 3 == 0) beta.add(b, testsupport::random_gaussian(rng));
        CHECK(beta_transform(beta_transform(rho, beta), -beta) == rho);
    }
    CHECK_THROWS_AS(beta_transform(iwasawa_rho(), Polyvector::generator(6, 1)), std::invalid_argument);
}

TEST_CASE("B transform requires a closed real 2-form") {
    const NilAlgebra g = parse_algebra(kIwasawa);
    CHECK_THROWS_AS(b_transform(iwasawa_rho(), parse_two_form("56", 6), g), NotClosed);
    CHECK_THROWS_AS(b_transform(iwasawa_rho(), GaussianRational::i() * parse_two_form("12", 6), g), std::invalid_argument);
    const Form rho = iwasawa_rho();
    const Form B = parse_two_form("12+35-46", 6);
    const Form out = b_transform(rho, B, g);
    CHECK(out == wedge(wedge_exp(B), rho));
    CHECK(check_gcs(out, g).is_gcs == check_gcs(rho, g).is_gcs);
    CHECK(b_transform(out, -B, g) == rho);
}

TEST_CASE("B transform preserves the GCS property") {
    const NilAlgebra g = parse_algebra("(0,0,0,0,12,13)");
    const auto closed = closed_basis(g, 2);
    std::mt19937_64 rng(11);
    const Form good = parse_form("(2+i3)(1+i4)(5+i6)", 6);
    const Form bad = parse_form("(1+i5)(2+i3)(4+i6)", 6);
    REQUIRE(check_gcs(good, g).is_gcs);
    REQUIRE_FALSE(check_gcs(bad, g).is_gcs);
    for (int trial = 0; trial < 5; ++trial) {
        Form B(6);
        for (const auto& c : closed) B += testsupport::random_gaussian(rng, 3, false) * c;
        B = real_part(B);
        CHECK(check_gcs(b_transform(good, B, g), g).is_gcs);
        CHECK_FALSE(check_gcs(b_transform(bad, B, g), g).is_gcs);
    }
}

TEST_CASE("dual frame") {
    const DualFrame f = dual_frame({parse_form("(1+i2)", 6), parse_form("(3+i4)", 6), parse_form("(5+i6)", 6)});
    REQUIRE(f.xs.size() == 3);
    const GaussianRational half = GaussianRational::fraction(1, 2);
    for (int i = 1; i <= 3; ++i) {
        const Polyvector expected =
            half * Polyvector::generator(6, 2 * i - 1) - half * GaussianRational::i() * Polyvector::generator(6, 2 * i);
        CHECK(f.xs[i - 1] == expected);
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(evaluate(f.thetas[j], f.xs[i]) == GaussianRational(i == j ? 1 : 0));
            CHECK(evaluate(f.thetas[j].conj(), f.xs[i]).is_zero());
        }
    CHECK_THROWS_AS(dual_frame({parse_form("(1+i2)", 4), parse_form("(1-i2)", 4)}), DegenerateSpinor);
    CHECK_THROWS_AS(dual_frame({parse_form("(1+i2)", 6)}), std::invalid_argument);
}

TEST_CASE("Schouten bracket on degree one is the Lie bracket") {
    const NilAlgebra g = parse_algebra("(0,0,12,13,14+23,34-25)");
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Polyvector x = testsupport::random_vector(rng, 6);
        const Polyvector y = testsupport::random_vector(rng, 6);
        CHECK(schouten(x, y, g) == lie_bracket(x, y, g));
    }
}

TEST_CASE("Schouten bracket matches direct expansion") {
    const NilAlgebra g = parse_algebra("(0,0,12,13,14+23,34-25)");
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int p = 1 + static_cast<int>(rng() % 3);
        const int q = 1 + static_cast<int>(rng() % 3);
        std::vector<Polyvector> xs, ys;
        for (int k = 0; k < p; ++k) xs.push_back(testsupport::random_vector(rng, 6));
        for (int k = 0; k < q; ++k) ys.push_back(testsupport::random_vector(rng, 6));
        CHECK(schouten(wedge_list(6, xs), wedge_list(6, ys), g) == naive_schouten(xs, ys, g));
    }
}

TEST_CASE("Schouten bracket of X^Y with itself") {
    const NilAlgebra g = parse_algebra(kIwasawa);
    const DualFrame f = dual_frame({parse_form("(1+i2)", 6), parse_form("(3+i4)", 6), parse_form("(5+i6)", 6)});
    const Polyvector beta = wedge(f.xs[1], f.xs[2]);
    const Polyvector expected = GaussianRational(2) * wedge(wedge(lie_bracket(f.xs[1], f.xs[2], g), f.xs[1]), f.xs[2]);
    CHECK(schouten(beta, beta, g) == expected);
    CHECK(schouten(beta, beta, g).is_zero());

    const NilAlgebra h = parse_algebra("(0,0,12)");
    const Polyvector xy = wedge(Polyvector::generator(3, 1), Polyvector::generator(3, 2));
    CHECK(schouten(xy, xy, h) == GaussianRational(2) * wedge(-Polyvector::generator(3, 3), xy));
    const NilAlgebra e = parse_algebra("(0,0,12,13)");
    const Polyvector b = wedge(Polyvector::generator(4, 1), Polyvector::generator(4, 3));
    CHECK(schouten(b, b, e) == GaussianRational(2) *
                                   wedge(wedge(lie_bracket(Polyvector::generator(4, 1), Polyvector::generator(4, 3), e),
                                               Polyvector::generator(4, 1)),
                                         Polyvector::generator(4, 3)));
    CHECK_FALSE(schouten(b, b, e).is_zero());
}

TEST_CASE("Schouten bracket graded symmetry and Jacobi") {
    const NilAlgebra g = parse_algebra("(0,0,0,12,14,15+23+24)");
    std::mt19937_64 rng(17);
    auto random_poly = [&](int degree) {
        Polyvector v(6);
        for (const auto& b : blades_of_grade(6, degree))
            if (rng() % 4 == 0) v.add(b, testsupport::random_gaussian(rng));
        return v;
    };
    for (int trial = 0; trial < 15; ++trial) {
        const int p = 1 + static_cast<int>(rng() % 3), q = 1 + static_cast<int>(rng() % 3),
                  r = 1 + static_cast<int>(rng() % 2);
        const Polyvector P = random_poly(p), Q = random_poly(q), R = random_poly(r);
        CHECK(schouten(P, Q, g) == -sign_of((p - 1) * (q - 1)) * schouten(Q, P, g));
        const Polyvector jac = sign_of((p - 1) * (r - 1)) * schouten(P, schouten(Q, R, g), g) +
                               sign_of((q - 1) * (p - 1)) * schouten(Q, schouten(R, P, g), g) +
                               sign_of((r - 1) * (q - 1)) * schouten(R, schouten(P, Q, g), g);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("complex structure to type n-2") {
    SUBCASE("Iwasawa") {
        const NilAlgebra g = parse_algebra(kIwasawa);
        const auto r = complex_to_lower_type({parse_form("(1+i2)", 6), parse_form("(3+i4)", 6), parse_form("(5+i6)", 6)}, g);
        CHECK(r.beta_bracket.is_zero());
        CHECK(r.matches_expected);
        CHECK(r.report.is_gcs);
        CHECK(r.report.type == 1);
        CHECK(r.rho == ansatz_to_form(r.ansatz));
    }
    SUBCASE("Kodaira-Thurston gives type 0") {
        const NilAlgebra g = parse_algebra("(0,0,0,12)");
        const auto r = complex_to_lower_type({parse_form("(1+i2)", 4), parse_form("(3+i4)", 4)}, g);
        CHECK(r.matches_expected);
        CHECK(r.report.is_gcs);
        CHECK(r.report.type == 0);
    }
    SUBCASE("rejects a non-closed Omega") {
        const NilAlgebra g = parse_algebra("(0,0,0,0,12,13)");
        CHECK_THROWS_AS(complex_to_lower_type({parse_form("(1+i5)", 6), parse_form("(2+i3)", 6), parse_form("(4+i6)", 6)}, g),
                        std::invalid_argument);
    }
}
