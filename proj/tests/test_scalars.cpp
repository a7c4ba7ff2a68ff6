#include "nilgc/linsolve.hpp"
#include "nilgc/scalars.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace nilgc;

namespace {

// Cofactor expansion, used as an independent determinant oracle.
GaussianRational cofactor_det(const std::vector<std::vector<GaussianRational>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    GaussianRational total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<GaussianRational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<GaussianRational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const GaussianRational term = m[0][c] * cofactor_det(minor);
        total += c % 2 == 0 ? term : -term;
    }
    return total;
}

Matrix<GaussianRational> to_matrix(const std::vector<std::vector<GaussianRational>>& rows) {
    Matrix<GaussianRational> a(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) a(r, c) = rows[r][c];
    return a;
}

}  // namespace

TEST_CASE("gaussian rational canonical form and text") {
    GaussianRational a(mpq_class(2, 4), mpq_class(-3, 6));
    CHECK(a.re() == mpq_class(1, 2));
    CHECK(a.im() == mpq_class(-1, 2));
    CHECK(a.re().get_den() == 2);
    CHECK(GaussianRational(5).is_real());
    CHECK_FALSE(GaussianRational::i().is_real());
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));

    for (const char* text : {"0", "3", "-2/3", "i", "-i", "3i", "1/2+3/4i", "-1/2-i", "7/3i"}) {
        const auto z = GaussianRational::parse(text);
        CHECK(GaussianRational::parse(z.to_string()) == z);
    }
    CHECK(GaussianRational::parse("1/2+3/4i") == GaussianRational::fraction(1, 2, 3, 4));
    CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
    CHECK_THROWS_AS(GaussianRational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("abc"), ParseError);
    CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
}

TEST_CASE("gaussian rational field axioms on random inputs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = testsupport::random_gaussian(rng);
        const auto b = testsupport::random_gaussian(rng);
        const auto c = testsupport::random_gaussian(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (-a) == GaussianRational(0));
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
    }
}

TEST_CASE("poly_is_zero examples") {
    const auto t1 = ParamPolynomial::variable("t1");
    const auto t2 = ParamPolynomial::variable("t2");
    CHECK(poly_is_zero(ParamPolynomial()));
    CHECK(poly_is_zero(t1 * t2 - t2 * t1));
    CHECK(poly_is_zero((t1 + t2) * (t1 + t2) - t1 * t1 - ParamPolynomial(2) * t1 * t2 - t2 * t2));
    CHECK_FALSE(poly_is_zero(t1 - t2));
}

TEST_CASE("polynomial square matches a term-by-term oracle") {
    // (t1+t2)^2 built from a naive coefficient table over exponent pairs.
    const auto t1 = ParamPolynomial::variable("t1");
    const auto t2 = ParamPolynomial::variable("t2");
    const auto sq = (t1 + t2) * (t1 + t2);
    std::map<std::pair<unsigned, unsigned>, long> oracle{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}};
    CHECK(sq.terms().size() == oracle.size());
    for (const auto& [exps, c] : sq.terms()) CHECK(c == GaussianRational(oracle.at({exps[0], exps[1]})));
}

TEST_CASE("polynomial ring axioms, conjugation, evaluation") {
    std::mt19937_64 rng(5);
    const std::vector<std::string> names{"x", "y", "z2"};
    auto random_poly = [&] {
        ParamPolynomial p;
        std::uniform_int_distribution<int> deg(0, 2);
        for (int t = 0; t < 4; ++t) {
            ParamPolynomial m(testsupport::random_gaussian(rng));
            for (const auto& n : names)
                for (int e = deg(rng); e > 0; --e) m *= ParamPolynomial::variable(n);
            p += m;
        }
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly();
        const auto q = random_poly();
        const auto r = random_poly();
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(poly_is_zero(p - p));
        std::map<std::string, GaussianRational> at{{"x", testsupport::random_gaussian(rng, 3, false)},
                                                   {"y", testsupport::random_gaussian(rng, 3, false)},
                                                   {"z2", testsupport::random_gaussian(rng, 3, false)}};
        CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
        CHECK(p.conj().evaluate(at) == p.evaluate(at).conj());
    }
}

TEST_CASE("polynomial text round trip") {
    const auto p = ParamPolynomial::parse("3/2i*z2*k34 - x^2 + 1");
    CHECK(p.total_degree() == 2);
    CHECK(ParamPolynomial::parse(p.to_string()) == p);
    CHECK(ParamPolynomial::parse("i*z2") == GaussianRational::i() * ParamPolynomial::variable("z2"));
}

TEST_CASE("solve_linear trivial cases") {
    auto id = to_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto sol = solve_linear<GaussianRational>(id, std::vector<GaussianRational>{1, 2, 3});
    REQUIRE(sol);
    CHECK(sol->particular == std::vector<GaussianRational>{1, 2, 3});
    CHECK(sol->null_basis.empty());

    auto row = to_matrix({{1, 1}});
    sol = solve_linear<GaussianRational>(row, std::vector<GaussianRational>{0});
    REQUIRE(sol);
    CHECK(sol->particular == std::vector<GaussianRational>{0, 0});
    REQUIRE(sol->null_basis.size() == 1);
    CHECK(sol->null_basis[0] == std::vector<GaussianRational>{-1, 1});

    auto inconsistent = to_matrix({{1, 1}, {2, 2}});
    CHECK_FALSE(solve_linear<GaussianRational>(inconsistent, std::vector<GaussianRational>{1, 3}));
}

TEST_CASE("solve_linear agrees with Cramer's rule on random 5x5 systems") {
    std::mt19937_64 rng(42);
    int solved = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<GaussianRational>> m(5, std::vector<GaussianRational>(5));
        for (auto& row : m)
            for (auto& x : row) x = testsupport::random_gaussian(rng);
        std::vector<GaussianRational> rhs(5);
        for (auto& x : rhs) x = testsupport::random_gaussian(rng);
        const auto det = cofactor_det(m);
        if (det.is_zero()) continue;
        auto sol = solve_linear<GaussianRational>(to_matrix(m), rhs);
        REQUIRE(sol);
        CHECK(sol->null_basis.empty());
        for (std::size_t c = 0; c < 5; ++c) {
            auto mc = m;
            for (std::size_t r = 0; r < 5; ++r) mc[r][c] = rhs[r];
            CHECK(sol->particular[c] == cofactor_det(mc) / det);
        }
        ++solved;
    }
    CHECK(solved > 20);
}

TEST_CASE("solvability matches nonvanishing determinant; solutions reproduce rhs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + trial % 6;
        std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
        std::uniform_int_distribution<int> coin(0, 2);
        for (auto& row : m)
            for (auto& x : row) x = coin(rng) == 0 ? GaussianRational(0) : testsupport::random_gaussian(rng, 1);
        if (trial % 5 == 0 && n > 1) m[n - 1] = m[0];  // force singular sometimes
        const auto a = to_matrix(m);
        const bool invertible = !cofactor_det(m).is_zero();
        CHECK((rank(a) == n) == invertible);
        CHECK(null_space(a).empty() == invertible);
        for (const auto& v : null_space(a))
            for (const auto& x : a.apply(v)) CHECK(x.is_zero());
        std::vector<GaussianRational> rhs(n);
        for (auto& x : rhs) x = testsupport::random_gaussian(rng);
        if (auto sol = solve_linear<GaussianRational>(a, rhs)) CHECK(a.apply(sol->particular) == rhs);
        else CHECK_FALSE(invertible);
    }
}

TEST_CASE("polynomial elimination certifies pivots") {
    const auto z = ParamPolynomial::variable("z");
    Matrix<ParamPolynomial> ok(2, 2);
    ok(0, 0) = 1;
    ok(0, 1) = z;
    ok(1, 0) = 2;
    ok(1, 1) = ParamPolynomial(2) * z;
    auto sol = solve_linear(ok);
    REQUIRE(sol);
    REQUIRE(sol->null_basis.size() == 1);
    CHECK(sol->null_basis[0] == std::vector<ParamPolynomial>{-z, 1});

    Matrix<ParamPolynomial> ambiguous(1, 2);
    ambiguous(0, 0) = z;
    ambiguous(0, 1) = z * z;
    CHECK_THROWS_AS(solve_linear(ambiguous), PivotAmbiguous);
}

TEST_CASE("row space membership") {
    RowSpace<GaussianRational> s(3);
    CHECK(s.insert({1, 2, 0}));
    CHECK(s.insert({0, 1, 1}));
    CHECK_FALSE(s.insert({1, 3, 1}));
    CHECK(s.contains({2, 5, 1}));
    CHECK_FALSE(s.contains({0, 0, 1}));
    CHECK(s.dimension() == 2);
}
