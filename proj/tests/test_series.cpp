#include "umbra/series.hpp"

#include "oracles.hpp"
#include "umbra/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using umbra::SeriesOptions;
using umbra::UmbralSequence;

TEST_CASE("ones pseudo-exponential is the ordinary exponential") {
    const auto ones = UmbralSequence::ones();
    const auto r = umbra::eval_pseudo_exp(ones, 1.0, {1e-12, 512});
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(std::exp(1.0)).epsilon(1e-13));

    for (double x = -10.0; x <= 10.0; x += 1.25) {
        const auto e = umbra::eval_pseudo_exp(ones, x, {1e-12, 512});
        CHECK(e.converged);
        CHECK(std::abs(e.value - std::exp(x)) < 1e-10 * std::max(1.0, std::exp(x)));
    }
}

TEST_CASE("tricomi pseudo-exponential hits the Bessel oracle") {
    const auto r = umbra::eval_pseudo_exp(UmbralSequence::tricomi(), 1.0, {1e-12, 512});
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(oracle::tricomi_c0(1.0)).epsilon(1e-12));
    // frozen from the J_0(2) quadrature oracle
    CHECK(r.value == doctest::Approx(0.22389077914123567).epsilon(1e-12));
}

TEST_CASE("pseudo-exponential at zero keeps only c_0") {
    const auto r = umbra::eval_pseudo_exp(UmbralSequence::tricomi(), 0.0, {1e-12, 512});
    CHECK(r.converged);
    CHECK(r.value == 1.0);
    CHECK(r.tail_estimate == 0.0);
}

TEST_CASE("tricomi pseudo-exponential equals C_0 across [0, 25]") {
    const auto tri = UmbralSequence::tricomi();
    for (double x = 0.0; x <= 25.0; x += 2.5) {
        const auto f = umbra::eval_pseudo_exp(tri, x, {1e-12, 512});
        const auto c0 = umbra::tricomi_c(0, x, {1e-12, 512});
        CHECK(f.converged);
        CHECK(c0.converged);
        CHECK(std::abs(f.value - c0.value) < 1e-12 + f.tail_estimate + c0.tail_estimate);
    }
}

TEST_CASE("semi-group property fails for tricomi") {
    const auto tri = UmbralSequence::tricomi();
    const double f2 = umbra::eval_pseudo_exp(tri, 2.0, {1e-13, 512}).value;
    const double f1 = umbra::eval_pseudo_exp(tri, 1.0, {1e-13, 512}).value;
    CHECK(std::abs(f2 - f1 * f1) > 0.1);
    CHECK(f2 == doctest::Approx(-0.19654809527046820).epsilon(1e-11));  // J_0(2 sqrt 2) oracle
    CHECK(f1 * f1 == doctest::Approx(0.050127080984469568).epsilon(1e-11));
}

TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(umbra::eval_pseudo_exp(UmbralSequence::ones(),
                                           std::numeric_limits<double>::quiet_NaN(), {1e-10, 512}),
                    std::invalid_argument);
    CHECK_THROWS_AS(umbra::eval_pseudo_exp(UmbralSequence::ones(),
                                           std::numeric_limits<double>::infinity(), {1e-10, 512}),
                    std::invalid_argument);
    CHECK_THROWS_AS(umbra::eval_pseudo_exp(UmbralSequence::ones(), 1.0, {0.0, 512}),
                    std::invalid_argument);
    CHECK_THROWS_AS(umbra::eval_pseudo_exp(UmbralSequence::ones(), 1.0, {-1e-3, 512}),
                    std::invalid_argument);
}

TEST_CASE("term budget exhaustion is reported, not thrown") {
    const auto r = umbra::eval_pseudo_exp(UmbralSequence::ones(), 30.0, {1e-12, 16});
    CHECK_FALSE(r.converged);
    CHECK(r.terms_used == 16);
    CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("convergence flag honours the tail contract") {
    const UmbralSequence seqs[] = {UmbralSequence::ones(), UmbralSequence::tricomi(),
                                   UmbralSequence::inverse_shifted_factorial(2, 1),
                                   UmbralSequence::explicit_list({1.0, -0.5, 0.25, 0.125})};
    const double tols[] = {1e-6, 1e-10, 1e-12};
    for (const auto& seq : seqs) {
        for (double tol : tols) {
            for (double x = -6.0; x <= 6.0; x += 1.7) {
                const auto r = umbra::eval_pseudo_exp(seq, x, {tol, 512});
                REQUIRE(r.converged);
                CHECK(r.tail_estimate <= tol * std::max(1.0, std::abs(r.value)));
                CHECK(r.terms_used <= 512);
            }
        }
    }
}

TEST_CASE("complex pseudo-exponential matches the real path on the real axis") {
    const auto tri = UmbralSequence::tricomi();
    for (double x : {0.0, 0.5, 2.0, -1.5}) {
        const auto re = umbra::eval_pseudo_exp(tri, x, {1e-12, 512});
        const auto cx = umbra::eval_pseudo_exp(tri, std::complex<double>(x, 0.0), {1e-12, 512});
        CHECK(cx.converged);
        CHECK(cx.value.real() == doctest::Approx(re.value).epsilon(1e-13));
        CHECK(std::abs(cx.value.imag()) < 1e-14);
    }
    // ones at a purely imaginary argument is Euler's formula
    const auto e = umbra::eval_pseudo_exp(UmbralSequence::ones(), std::complex<double>(0.0, 1.0),
                                          {1e-13, 512});
    CHECK(e.value.real() == doctest::Approx(std::cos(1.0)).epsilon(1e-13));
    CHECK(e.value.imag() == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
}

TEST_CASE("umbral_eval applies the evaluation functional") {
    const auto tri = UmbralSequence::tricomi();
    const std::vector<double> constant{1.0};
    CHECK(umbra::umbral_eval(constant, tri) == 1.0);
    const std::vector<double> pick1{0.0, 1.0, 0.0};
    CHECK(umbra::umbral_eval(pick1, tri) == -1.0);
    const std::vector<double> three{1.0, 1.0, 1.0};
    CHECK(umbra::umbral_eval(three, UmbralSequence::ones()) == 3.0);
}

TEST_CASE("umbral_eval of (1+c)^k matches the binomial oracle") {
    const UmbralSequence seqs[] = {UmbralSequence::ones(), UmbralSequence::tricomi(),
                                   UmbralSequence::inverse_shifted_factorial(1, 0)};
    for (const auto& seq : seqs) {
        for (int k = 0; k <= 10; ++k) {
            // Pascal-triangle coefficient list of (1 + c)^k
            std::vector<double> coeffs(static_cast<std::size_t>(k) + 1, 0.0);
            coeffs[0] = 1.0;
            for (int row = 1; row <= k; ++row)
                for (int j = row; j >= 1; --j) coeffs[static_cast<std::size_t>(j)] += coeffs[static_cast<std::size_t>(j - 1)];
            const double lhs = umbra::umbral_eval(coeffs, seq);
            double rhs = 0.0;
            for (int j = 0; j <= k; ++j) rhs += oracle::binomial(k, j) * seq.coefficient_value(j);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
        }
    }
}
