#include "umbra/sequence.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cmath>

using umbra::Rational;
using umbra::SequenceKind;
using umbra::SequenceSpecError;
using umbra::UmbralSequence;

TEST_CASE("c_0 is one for the unit-constant families") {
    CHECK(UmbralSequence::ones().coefficient_value(0) == 1.0);
    CHECK(UmbralSequence::tricomi().coefficient_value(0) == 1.0);
    CHECK(UmbralSequence::inverse_shifted_factorial(2, 0).coefficient_value(0) == 1.0);
    CHECK(UmbralSequence::explicit_list({1.0, -1.0}).coefficient_value(0) == 1.0);
}

TEST_CASE("tricomi coefficients are (-1)^n / n!") {
    const auto seq = UmbralSequence::tricomi();
    CHECK(seq.coefficient_value(3) == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
    CHECK(seq.exact_coefficient(3) == Rational(-1, 6));
    CHECK(seq.coefficient(4).sign == 1);
    // log form survives far past the double overflow point of n!
    const auto c200 = seq.coefficient(200);
    CHECK(c200.sign == 1);
    CHECK(std::isfinite(c200.log_mag));
    CHECK(c200.log_mag == doctest::Approx(-std::lgamma(201.0)).epsilon(1e-14));
}

TEST_CASE("inverse shifted factorial c_n = 1/(m n + p)!") {
    const auto seq = UmbralSequence::inverse_shifted_factorial(2, 1);
    CHECK(seq.coefficient_value(2) == doctest::Approx(1.0 / 120.0).epsilon(1e-15));
    CHECK(seq.exact_coefficient(2) == Rational(1, 120));
    CHECK(UmbralSequence::inverse_shifted_factorial(1, 2).coefficient_value(0) ==
          doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("construction rejects bad arguments") {
    CHECK_THROWS_AS(UmbralSequence::inverse_shifted_factorial(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(UmbralSequence::inverse_shifted_factorial(1, -1), std::invalid_argument);
    CHECK_THROWS_AS(UmbralSequence::explicit_list({}), std::invalid_argument);
    CHECK_THROWS_AS(UmbralSequence::tricomi().coefficient(-1), std::invalid_argument);
    CHECK_THROWS_AS(UmbralSequence::tricomi().shifted(-2), std::invalid_argument);
}

TEST_CASE("shift relabels indices") {
    const auto tri = UmbralSequence::tricomi();
    SUBCASE("zero shift is the identity") {
        const auto s = tri.shifted(0);
        for (int n = 0; n < 10; ++n) CHECK(s.coefficient_value(n) == tri.coefficient_value(n));
    }
    SUBCASE("shift by one picks c_1 at n=0") {
        CHECK(tri.shifted(1).coefficient_value(0) == -1.0);
    }
    SUBCASE("shifts compose additively") {
        for (int a = 0; a <= 5; ++a) {
            for (int b = 0; b <= 5; ++b) {
                const auto lhs = tri.shifted(a).shifted(b);
                const auto rhs = tri.shifted(a + b);
                for (int n = 0; n < 20; ++n) {
                    CHECK(lhs.coefficient(n).sign == rhs.coefficient(n).sign);
                    CHECK(lhs.coefficient(n).log_mag == rhs.coefficient(n).log_mag);
                }
            }
        }
    }
    SUBCASE("index addition consistency across kinds") {
        const UmbralSequence seqs[] = {UmbralSequence::ones(), tri,
                                       UmbralSequence::inverse_shifted_factorial(2, 1),
                                       UmbralSequence::explicit_list({1.0, -1.0, 0.5})};
        for (const auto& s : seqs) {
            for (int k = 0; k <= 4; ++k) {
                for (int n = 0; n < 8; ++n) {
                    CHECK(s.shifted(k).coefficient(n).sign == s.coefficient(n + k).sign);
                    CHECK(s.shifted(k).coefficient(n).log_mag == s.coefficient(n + k).log_mag);
                }
            }
        }
    }
}

TEST_CASE("explicit sequences are zero-extended") {
    const auto seq = UmbralSequence::explicit_list({1.0, -1.0, 0.5});
    CHECK(seq.coefficient_value(1) == -1.0);
    CHECK(seq.coefficient_value(2) == 0.5);
    CHECK(seq.coefficient(3).sign == 0);
    CHECK(seq.coefficient_value(17) == 0.0);
    CHECK(seq.exact_coefficient(2) == Rational(1, 2));
}

TEST_CASE("exact coefficients agree with the log form") {
    const UmbralSequence seqs[] = {UmbralSequence::ones(), UmbralSequence::tricomi(),
                                   UmbralSequence::inverse_shifted_factorial(1, 1),
                                   UmbralSequence::explicit_list({1.0, 0.25, -0.125})};
    for (const auto& s : seqs)
        for (int n = 0; n < 12; ++n)
            CHECK(s.exact_coefficient(n).convert_to<double>() ==
                  doctest::Approx(s.coefficient_value(n)).epsilon(1e-14));
}

TEST_CASE("JSON sequence specs") {
    CHECK(UmbralSequence::from_json_text(R"({"kind":"tricomi"})").kind() == SequenceKind::tricomi);
    CHECK(UmbralSequence::from_json_text(R"({"kind":"ones"})").kind() == SequenceKind::ones);
    const auto isf = UmbralSequence::from_json_text(R"({"kind":"inverse_shifted_factorial","m":2,"p":0})");
    CHECK(isf.isf_m() == 2);
    CHECK(isf.isf_p() == 0);
    const auto ex = UmbralSequence::from_json_text(R"({"kind":"explicit","values":[1.0,-1.0,0.5]})");
    CHECK(ex.explicit_values().size() == 3);

    SUBCASE("errors name the offending field") {
        try {
            UmbralSequence::from_json_text(R"({"kind":"nope"})");
            FAIL("expected SequenceSpecError");
        } catch (const SequenceSpecError& e) {
            CHECK(e.field() == "kind");
            CHECK(std::string(e.what()).find("tricomi") != std::string::npos);
        }
        try {
            UmbralSequence::from_json_text(R"({"kind":"inverse_shifted_factorial","p":0})");
            FAIL("expected SequenceSpecError");
        } catch (const SequenceSpecError& e) {
            CHECK(e.field() == "m");
        }
        try {
            UmbralSequence::from_json_text(R"({"kind":"explicit","values":[]})");
            FAIL("expected SequenceSpecError");
        } catch (const SequenceSpecError& e) {
            CHECK(e.field() == "values");
        }
        CHECK_THROWS_AS(UmbralSequence::from_json_text("not json"), SequenceSpecError);
    }
}
