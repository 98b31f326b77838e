#pragma once

#include "umbra/rational.hpp"
#include "umbra/signed_log.hpp"

#include <nlohmann/json_fwd.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace umbra {

enum class SequenceKind { ones, tricomi, inverse_shifted_factorial, explicit_list };

// Thrown when a JSON sequence spec is malformed; names the offending field.
class SequenceSpecError : public std::invalid_argument {
public:
    SequenceSpecError(std::string field, const std::string& message)
        : std::invalid_argument(message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// An umbral coefficient sequence: a rule n -> c_n. Index shifts (the
// realization of multiplying by a power of the umbral symbol) are carried as
// an offset, so shifted(a).shifted(b) == shifted(a+b) by construction.
// Immutable after construction.
class UmbralSequence {
public:
    static UmbralSequence ones() { return UmbralSequence(SequenceKind::ones); }
    static UmbralSequence tricomi() { return UmbralSequence(SequenceKind::tricomi); }
    static UmbralSequence inverse_shifted_factorial(int m, int p);
    // Values beyond the supplied list are zero (a finite-moment umbra).
    static UmbralSequence explicit_list(std::vector<double> values);

    // c'_n = c_{n+k}
    UmbralSequence shifted(int k) const;

    // c_n, exact sign and log-magnitude.
    SignedLog coefficient(long n) const;
    double coefficient_value(long n) const { return coefficient(n).value(); }
    // c_n as an exact rational (all four kinds admit one; explicit values are
    // dyadic).
    Rational exact_coefficient(long n) const;

    SequenceKind kind() const { return kind_; }
    int shift() const { return shift_; }
    int isf_m() const { return m_; }
    int isf_p() const { return p_; }
    const std::vector<double>& explicit_values() const { return values_; }

    std::string describe() const;

    // Parses {"kind":"tricomi"} | {"kind":"ones"} |
    // {"kind":"inverse_shifted_factorial","m":2,"p":0} |
    // {"kind":"explicit","values":[1.0,-1.0,0.5]}.
    static UmbralSequence from_json(const nlohmann::json& spec);
    static UmbralSequence from_json_text(const std::string& text);

private:
    explicit UmbralSequence(SequenceKind kind) : kind_(kind) {}

    SequenceKind kind_;
    int shift_ = 0;
    int m_ = 1;  // inverse_shifted_factorial only
    int p_ = 0;
    std::vector<double> values_;  // explicit_list only
};

}  // namespace umbra
