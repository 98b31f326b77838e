#pragma once

#include "umbra/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace umbra {

// Dense univariate polynomial with exact rational coefficients. Trailing zero
// coefficients are trimmed on construction, so degree() is always consistent.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs, std::string label = "x");

    static Polynomial monomial(int degree, Rational coeff = Rational(1), std::string label = "x");
    // Exact: doubles are dyadic rationals.
    static Polynomial from_doubles(const std::vector<double>& coeffs, std::string label = "x");

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const std::string& label() const { return label_; }

    Polynomial derivative() const;
    Polynomial times_indeterminate() const;
    double evaluate(double x) const;
    Rational evaluate_exact(const Rational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    // Coefficient equality; the indeterminate label is cosmetic.
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;

private:
    void trim();

    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies label^k
    std::string label_ = "x";
};

// Sparse bivariate polynomial in (x, t) with exact rational coefficients,
// canonical form (no zero entries stored).
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>;  // (power of x, power of t)

    BivariatePolynomial() = default;
    static BivariatePolynomial from_univariate(const Polynomial& p);

    void add_term(int x_pow, int t_pow, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int x_pow, int t_pow) const;
    const std::map<Key, Rational>& terms() const { return terms_; }
    int total_degree() const;

    BivariatePolynomial derivative_x() const;
    BivariatePolynomial derivative_t() const;
    BivariatePolynomial times_t() const;
    Polynomial at_t_zero() const;
    double evaluate(double x, double t) const;

    friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::map<Key, Rational> terms_;
};

}  // namespace umbra
