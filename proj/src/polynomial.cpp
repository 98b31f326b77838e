#include "umbra/polynomial.hpp"

#include <sstream>

namespace umbra {

Polynomial::Polynomial(std::vector<Rational> coeffs, std::string label)
    : coeffs_(std::move(coeffs)), label_(std::move(label)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int degree, Rational coeff, std::string label) {
    if (degree < 0) throw std::invalid_argument("monomial: degree must be nonnegative");
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = std::move(coeff);
    return Polynomial(std::move(c), std::move(label));
}

Polynomial Polynomial::from_doubles(const std::vector<double>& coeffs, std::string label) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (double v : coeffs) c.push_back(rational_from_double(v));
    return Polynomial(std::move(c), std::move(label));
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial({}, label_);
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(c), label_);
}

Polynomial Polynomial::times_indeterminate() const {
    if (is_zero()) return *this;
    std::vector<Rational> c(coeffs_.size() + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k + 1] = coeffs_[k];
    return Polynomial(std::move(c), label_);
}

double Polynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->convert_to<double>();
    return acc;
}

Rational Polynomial::evaluate_exact(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c), label_);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Polynomial(std::move(c), a.label_);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial({}, a.label_);
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c), a.label_);
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_);
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out), p.label_);
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        if (mag != 1 || k == 0) os << mag.str();
        if (k > 0) {
            os << label_;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

BivariatePolynomial BivariatePolynomial::from_univariate(const Polynomial& p) {
    BivariatePolynomial out;
    for (int k = 0; k <= p.degree(); ++k) out.add_term(k, 0, p.coeff(k));
    return out;
}

void BivariatePolynomial::add_term(int x_pow, int t_pow, const Rational& c) {
    if (c == 0) return;
    if (x_pow < 0 || t_pow < 0) throw std::invalid_argument("add_term: negative exponent");
    const Key key{x_pow, t_pow};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational BivariatePolynomial::coeff(int x_pow, int t_pow) const {
    auto it = terms_.find({x_pow, t_pow});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePolynomial::total_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
    return d;
}

BivariatePolynomial BivariatePolynomial::derivative_x() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_)
        if (key.first > 0) out.add_term(key.first - 1, key.second, c * key.first);
    return out;
}

BivariatePolynomial BivariatePolynomial::derivative_t() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_)
        if (key.second > 0) out.add_term(key.first, key.second - 1, c * key.second);
    return out;
}

BivariatePolynomial BivariatePolynomial::times_t() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) out.add_term(key.first, key.second + 1, c);
    return out;
}

Polynomial BivariatePolynomial::at_t_zero() const {
    int max_x = -1;
    for (const auto& [key, c] : terms_)
        if (key.second == 0) max_x = std::max(max_x, key.first);
    std::vector<Rational> coeffs(static_cast<std::size_t>(max_x + 1), Rational(0));
    for (const auto& [key, c] : terms_)
        if (key.second == 0) coeffs[static_cast<std::size_t>(key.first)] = c;
    return Polynomial(std::move(coeffs), "x");
}

double BivariatePolynomial::evaluate(double x, double t) const {
    double sum = 0.0;
    for (const auto& [key, c] : terms_)
        sum += c.convert_to<double>() * std::pow(x, key.first) * std::pow(t, key.second);
    return sum;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out = a;
    for (const auto& [key, c] : b.terms_) out.add_term(key.first, key.second, c);
    return out;
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out = a;
    for (const auto& [key, c] : b.terms_) out.add_term(key.first, key.second, -c);
    return out;
}

std::string BivariatePolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        const bool unit = (mag == 1) && (key.first > 0 || key.second > 0);
        if (!unit) os << mag.str();
        if (key.first > 0) {
            os << "x";
            if (key.first > 1) os << "^" << key.first;
        }
        if (key.second > 0) {
            os << "t";
            if (key.second > 1) os << "^" << key.second;
        }
    }
    return os.str();
}

}  // namespace umbra
