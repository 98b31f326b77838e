#include "umbra/polynomial.hpp"

#include <doctest.h>

using umbra::BivariatePolynomial;
using umbra::Polynomial;
using umbra::Rational;

TEST_CASE("trailing zeros are normalized away") {
    const Polynomial p({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(Polynomial({Rational(0)}).is_zero());
    CHECK(Polynomial().degree() == -1);
}

TEST_CASE("from_doubles is an exact dyadic conversion") {
    const auto p = Polynomial::from_doubles({0.5, -0.25, 3.0});
    CHECK(p.coeff(0) == Rational(1, 2));
    CHECK(p.coeff(1) == Rational(-1, 4));
    CHECK(p.coeff(2) == Rational(3));
}

TEST_CASE("arithmetic and calculus") {
    const auto x2 = Polynomial::monomial(2);
    const auto x = Polynomial::monomial(1);
    CHECK((x2 + x).degree() == 2);
    CHECK((x * x) == x2);
    CHECK(x2.derivative() == Rational(2) * x);
    CHECK(x.derivative().derivative().is_zero());
    CHECK(x.times_indeterminate() == x2);
    CHECK((x2 - x2).is_zero());
    CHECK(x2.evaluate(3.0) == 9.0);
    CHECK(x2.evaluate_exact(Rational(1, 2)) == Rational(1, 4));
    CHECK((-x).coeff(1) == Rational(-1));
}

TEST_CASE("printing") {
    const Polynomial p({Rational(1, 2), Rational(-2), Rational(1)});
    CHECK(p.str() == "x^2 - 2x + 1/2");
    CHECK(Polynomial().str() == "0");
}

TEST_CASE("bivariate canonical form drops zeros") {
    BivariatePolynomial f;
    f.add_term(2, 0, Rational(1));
    f.add_term(2, 0, Rational(-1));
    CHECK(f.is_zero());
    f.add_term(0, 1, Rational(-2));
    CHECK(f.coeff(0, 1) == Rational(-2));
    CHECK(f.coeff(5, 5) == Rational(0));
    CHECK(f.total_degree() == 1);
}

TEST_CASE("bivariate calculus") {
    // F = x^2 - 2 t
    BivariatePolynomial f;
    f.add_term(2, 0, Rational(1));
    f.add_term(0, 1, Rational(-2));

    const auto fx = f.derivative_x();
    CHECK(fx.coeff(1, 0) == Rational(2));
    const auto ft = f.derivative_t();
    CHECK(ft.coeff(0, 0) == Rational(-2));
    CHECK(f.times_t().coeff(2, 1) == Rational(1));
    CHECK(f.at_t_zero() == Polynomial::monomial(2));
    CHECK(f.evaluate(3.0, 1.0) == doctest::Approx(7.0));

    const auto sum = f + f;
    CHECK(sum.coeff(2, 0) == Rational(2));
    CHECK((f - f).is_zero());
    CHECK(BivariatePolynomial::from_univariate(Polynomial::monomial(3)).coeff(3, 0) == Rational(1));
}
