#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyrec/laurent.hpp"

using namespace polyrec;

namespace {

Laurent rand_poly(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> nterms(0, 5), coeff(-5, 5), expo(-3, 3);
    Laurent p(dim);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Expo e(dim);
        for (int j = 0; j < dim; ++j) e[j] = expo(rng);
        p.add_term(e, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("addition examples") {
    Laurent one = Laurent::constant(1, 1);
    Laurent x = Laurent::monomial({1});
    CHECK((one + x) + (-x) == one);
    Laurent p = Laurent::parse("2 + 3*x1^2", 1);
    CHECK(p + Laurent::zero(1) == p);
    CHECK((one + x) + (one + x) == Laurent::parse("2 + 2*x1", 1));
}

TEST_CASE("addition rejects dimension mismatch") {
    CHECK_THROWS_AS(Laurent::zero(1) + Laurent::zero(2), std::invalid_argument);
    CHECK_THROWS_AS(Laurent::zero(1) * Laurent::zero(2), std::invalid_argument);
}

TEST_CASE("multiplication examples") {
    CHECK(Laurent::monomial({1, 0}) * Laurent::monomial({0, 1}) == Laurent::monomial({1, 1}));
    Laurent one = Laurent::constant(1, 1);
    Laurent x = Laurent::monomial({1});
    CHECK((one + x) * (one - x) == Laurent::parse("1 - x1^2", 1));
    CHECK(Laurent::monomial({-1}) * Laurent::monomial({1}) == one);
}

TEST_CASE("monomial shift") {
    Laurent p = Laurent::parse("1 + x1", 1);
    CHECK(p.shifted({1}) == Laurent::parse("x1 + x1^2", 1));
    CHECK(p.shifted({0}) == p);
    CHECK(Laurent::monomial({1, 1}).shifted({-1, -1}) == Laurent::constant(2, 1));
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric({{2, 0}, {0, 3}}, 0) == Laurent::constant(2, 1));
    // e_2 of {x, x^2} in one variable
    CHECK(elementary_symmetric({{1}, {2}}, 2) == Laurent::monomial({3}));
    CHECK(elementary_symmetric({{0, 0}, {1, 0}, {0, 1}}, 1) ==
          Laurent::parse("1 + x1 + x2", 2));
    CHECK_THROWS_AS(elementary_symmetric({{1}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(elementary_symmetric({{1}}, -1), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240811);
    for (int dim = 1; dim <= 3; ++dim) {
        for (int iter = 0; iter < 40; ++iter) {
            Laurent a = rand_poly(rng, dim), b = rand_poly(rng, dim), c = rand_poly(rng, dim);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("canonical rendering round-trips") {
    std::mt19937 rng(7);
    for (int dim = 1; dim <= 3; ++dim)
        for (int iter = 0; iter < 60; ++iter) {
            Laurent p = rand_poly(rng, dim);
            CHECK(Laurent::parse(p.str(), dim) == p);
        }
}

TEST_CASE("canonical text form") {
    CHECK(Laurent::zero(2).str() == "0");
    CHECK(Laurent::constant(0, 5).str() == "5");
    CHECK(Laurent::parse("5", 0) == Laurent::constant(0, 5));
    Laurent p(2);
    p.add_term({0, 0}, 1);
    p.add_term({1, 0}, 1);
    p.add_term({0, 1}, 1);
    p.add_term({1, 1}, 1);
    CHECK(p.str() == "1 + x1 + x2 + x1*x2");
    Laurent q(1);
    q.add_term({-2}, -3);
    q.add_term({0}, 1);
    CHECK(q.str() == "-3*x1^-2 + 1");
    CHECK(Laurent::parse(q.str(), 1) == q);
}

TEST_CASE("factor product vanishes at its roots") {
    // sum_j (-1)^j e_j(M) X^{r-j} is prod_{m in M} (X - x^m); substituting
    // any X = x^m from the list must give zero.
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> expo(-2, 2), count(1, 4);
    for (int dim = 1; dim <= 3; ++dim)
        for (int iter = 0; iter < 25; ++iter) {
            int r = count(rng);
            std::vector<Expo> M;
            for (int i = 0; i < r; ++i) {
                Expo e(dim);
                for (int j = 0; j < dim; ++j) e[j] = expo(rng);
                M.push_back(e);
            }
            for (const auto& m : M) {
                Laurent value(dim);
                for (int j = 0; j <= r; ++j) {
                    Laurent ej = elementary_symmetric(M, j);
                    if (j % 2 == 1) ej = -ej;
                    // X^{r-j} at X = x^m
                    value += ej * Laurent::monomial(expo_scale(m, r - j));
                }
                CHECK(value.is_zero());
            }
        }
}
