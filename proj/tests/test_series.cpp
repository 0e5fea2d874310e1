#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rwl/series.hpp"
#include "rwl/twocycles.hpp"

using namespace rwl;
using namespace rwl::series;

namespace {

SignedPoly3 random_poly(std::mt19937& rng, int max_degree, int terms)
{
    std::uniform_int_distribution<int> coeff(-9, 9);
    SignedPoly3 p;
    for (int i = 0; i < terms; ++i) {
        const int d = std::uniform_int_distribution<int>(0, max_degree)(rng);
        const int a = std::uniform_int_distribution<int>(0, d)(rng);
        const int b = std::uniform_int_distribution<int>(0, d - a)(rng);
        p.add_term({a, b, d - a - b}, coeff(rng));
    }
    return p;
}

// Constant term 1 and at least one higher term.
SignedPoly3 random_unit(std::mt19937& rng)
{
    SignedPoly3 p = random_poly(rng, 2, 3);
    p.add_term({0, 0, 0}, 1 - p.coefficient({0, 0, 0}));
    return p;
}

} // namespace

TEST_CASE("polynomial basics")
{
    SignedPoly3 x = SignedPoly3::monomial(1, {1, 0, 0});
    SignedPoly3 y = SignedPoly3::monomial(1, {0, 1, 0});
    SignedPoly3 p = (x + y) * (x - y);
    CHECK(p == parse_poly3("x^2-y^2"));
    CHECK(p.degree() == 2);
    CHECK(SignedPoly3{}.degree() == -1);
    CHECK((p - p).is_zero());
    CHECK((p - p).terms().empty()); // no stored zeros
    CHECK((x + y).pow(3) == parse_poly3("x^3+3x^2y+3xy^2+y^3"));
    CHECK(parse_poly3("2x^2z - 3") .swap_xz() == parse_poly3("2z^2x-3"));
    CHECK(-parse_poly3("x-1") == parse_poly3("1-x"));
    CHECK(SignedPoly3::monomial(0, {1, 1, 1}).is_zero());
    CHECK_THROWS_AS(SignedPoly3::monomial(1, {-1, 0, 0}), Error);
    CHECK_THROWS_AS(x.pow(-1), Error);
}

TEST_CASE("truncation")
{
    SignedPoly3 p = parse_poly3("(1+x+y+z)^4");
    SignedPoly3 t = p.truncated(2);
    REQUIRE(t.truncation() == 2);
    for (const auto& [e, c] : t.terms()) {
        REQUIRE(total_degree(e) <= 2);
    }
    CHECK(t.coefficient({1, 1, 0}) == 12);
    SignedPoly3 a = parse_poly3("1+x+y^2");
    SignedPoly3 b = parse_poly3("1-z+x^3");
    CHECK(multiply(a, b, 2) == (a * b).truncated(2));
    CHECK(multiply(a, b, 2).truncation() == 2);
}

TEST_CASE("parser")
{
    CHECK(parse_poly3("13").coefficient({0, 0, 0}) == 13);
    CHECK(parse_poly3("2(x+1)(x-1)") == parse_poly3("2x^2-2"));
    CHECK(parse_poly3(" x y z ") == SignedPoly3::monomial(1, {1, 1, 1}));
    CHECK(parse_poly3("-(x)^2") == SignedPoly3::monomial(-1, {2, 0, 0}));
    CHECK(parse_poly3("0").is_zero());
    CHECK(parse_poly3("123456789012345678901234567890x").coefficient({1, 0, 0}) ==
          parse_decimal("123456789012345678901234567890"));
    CHECK_THROWS_WITH_AS(parse_poly3("x+"), doctest::Contains("polynomial parse error"), Error);
    CHECK_THROWS_AS(parse_poly3("x^"), Error);
    CHECK_THROWS_AS(parse_poly3("(x+1"), Error);
    CHECK_THROWS_AS(parse_poly3("w"), Error);
    CHECK_THROWS_AS(parse_poly3("x^-1"), Error);
    CHECK_THROWS_AS(parse_poly3(""), Error);
}

TEST_CASE("printing round trip")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        SignedPoly3 p = random_poly(rng, 5, 8);
        REQUIRE(parse_poly3(to_string(p)) == p);
    }
    CHECK(to_string(SignedPoly3{}) == "0");
    CHECK(to_string(parse_poly3("1-x")) == "1 - x");
}

TEST_CASE("simple expansions")
{
    RationalGF geo{SignedPoly3::constant(1), {{parse_poly3("1-x"), 1}}};
    CHECK(expand_rational(geo, 3) == parse_poly3("1+x+x^2+x^3"));

    RationalGF two{SignedPoly3::constant(1), {{parse_poly3("1-x-y"), 1}}};
    CHECK(expand_rational(two, 2) == parse_poly3("1+x+y+x^2+2xy+y^2"));

    RationalGF sq{SignedPoly3::constant(1), {{parse_poly3("1-2z"), 2}}};
    SignedPoly3 e = expand_rational(sq, 6);
    for (int k = 0; k <= 6; ++k) {
        CHECK(e.coefficient({0, 0, k}) == (k + 1) * (Count(1) << k));
    }

    CHECK(expand_rational(geo, 0) == SignedPoly3::constant(1));
    CHECK_THROWS_AS(expand_rational(geo, -1), Error);
    RationalGF bad{SignedPoly3::constant(1), {{parse_poly3("2-x"), 1}}};
    CHECK_THROWS_WITH_AS(expand_rational(bad, 3), doctest::Contains("constant term 1"), Error);
    CHECK_THROWS_AS(series_inverse(parse_poly3("x"), 3), Error);
}

TEST_CASE("inverse times original is one")
{
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        SignedPoly3 p = random_unit(rng);
        REQUIRE(multiply(p, series_inverse(p, 7), 7) == SignedPoly3::constant(1));
    }
}

TEST_CASE("expansion is linear in the numerator and multiplicative in the denominator")
{
    std::mt19937 rng(2024);
    for (int i = 0; i < 25; ++i) {
        const int D = std::uniform_int_distribution<int>(0, 6)(rng);
        SignedPoly3 n1 = random_poly(rng, 3, 4);
        SignedPoly3 n2 = random_poly(rng, 3, 4);
        SignedPoly3 u = random_unit(rng);
        SignedPoly3 v = random_unit(rng);
        auto ex = [&](const SignedPoly3& num, std::vector<std::pair<SignedPoly3, int>> den) {
            return expand_rational(RationalGF{num, std::move(den)}, D);
        };
        REQUIRE(ex(n1 + n2, {{u, 2}}) == ex(n1, {{u, 2}}) + ex(n2, {{u, 2}}));
        REQUIRE(ex(n1, {{u, 1}, {v, 1}}) == multiply(ex(n1, {{u, 1}}), ex(SignedPoly3::constant(1), {{v, 1}}), D));
        REQUIRE(ex(n1, {{u, 1}, {v, 1}}) == ex(n1, {{u * v, 1}}));
        REQUIRE(ex(n1, {{u, 3}}) == ex(n1, {{u.pow(3), 1}}));
    }
}

TEST_CASE("the numerator as printed")
{
    SignedPoly3 f = f_numerator();
    CHECK(f.coefficient({0, 0, 0}) == 13);
    CHECK(f.coefficient({0, 4, 0}) == 360);
    CHECK(f.coefficient({0, 5, 0}) == -112);
    CHECK(f.swap_xz() == f);
    // The verbatim text differs only by the missing '+'.
    CHECK(parse_poly3(f_numerator_verbatim_text()) != f);
}

TEST_CASE("the printed expansion")
{
    const SignedPoly3 printed = parse_poly3(fixtures::kPrintedExpansion);
    REQUIRE(static_cast<int>(printed.terms().size()) == fixtures::kPrintedTermCount);
    const SignedPoly3 F = expand_rational(two_cycle_gf(), 11);
    for (const auto& [e, c] : printed.terms()) {
        CAPTURE(e[0]);
        CAPTURE(e[1]);
        CAPTURE(e[2]);
        REQUIRE(coefficient(F, e) == c);
    }
    // The display lists every nonzero term through degree 11.
    CHECK(F == printed);
    CHECK(coefficient(F, {2, 2, 2}) == 208);
    CHECK(coefficient(F, {1, 2, 2}) == 0);
    CHECK(coefficient(F, {7, 2, 2}) == 45056);
}

TEST_CASE("expansion coefficients count labelings")
{
    const SignedPoly3 F = expand_rational(two_cycle_gf(), 14);
    for (int a1 = 0; a1 <= 14; ++a1) {
        for (int a2 = 0; a1 + a2 <= 14; ++a2) {
            for (int a3 = 0; a1 + a2 + a3 <= 14; ++a3) {
                const SignedCoefficient c = coefficient(F, {a1, a2, a3});
                REQUIRE(c >= 0);
                if (a1 < 2 || a2 < 2 || a3 < 2) {
                    REQUIRE(c == 0);
                } else if (a1 + a2 + a3 <= 12) {
                    REQUIRE(c == twocycles::count_two_cycles(a1, a2, a3));
                }
            }
        }
    }
    CHECK(F.swap_xz() == F);
    CHECK(two_cycle_counts(14) == F);
}

TEST_CASE("numerator recovery")
{
    const SignedPoly3 f = recover_numerator(18);
    CHECK(f.coefficient({0, 0, 0}) == 13);
    CHECK(f.swap_xz() == f);
    CHECK(diff(f_numerator(), f).empty());
    CHECK(recover_numerator(22) == f);

    const auto verbatim = diff(f, parse_poly3(f_numerator_verbatim_text()));
    CHECK_FALSE(verbatim.empty());
    for (const auto& d : verbatim) {
        CHECK(d.expected != d.actual);
    }

    CHECK_THROWS_WITH_AS(recover_numerator(12), doctest::Contains("numerator recovery failed"), Error);
    CHECK_THROWS_WITH_AS(recover_numerator(7), doctest::Contains("numerator recovery failed"), Error);
}

TEST_CASE("csv export")
{
    const std::string csv = to_csv(expand_rational(two_cycle_gf(), 7));
    CHECK(csv.rfind("a1,a2,a3,coefficient\n2,2,2,208\n2,2,3,672\n2,3,2,752\n3,2,2,672\n", 0) == 0);
}
