#include "umbra/sequence.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <utility>

namespace umbra {

UmbralSequence UmbralSequence::inverse_shifted_factorial(int m, int p) {
    if (m < 1) throw std::invalid_argument("inverse_shifted_factorial: m must be a positive integer");
    if (p < 0) throw std::invalid_argument("inverse_shifted_factorial: p must be nonnegative");
    UmbralSequence s(SequenceKind::inverse_shifted_factorial);
    s.m_ = m;
    s.p_ = p;
    return s;
}

UmbralSequence UmbralSequence::explicit_list(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("explicit sequence: values must be a nonempty list (c_0 required)");
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("explicit sequence: values must be finite");
    }
    UmbralSequence s(SequenceKind::explicit_list);
    s.values_ = std::move(values);
    return s;
}

UmbralSequence UmbralSequence::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shift_sequence: k must be nonnegative");
    UmbralSequence s = *this;
    s.shift_ += k;
    return s;
}

SignedLog UmbralSequence::coefficient(long n) const {
    if (n < 0) throw std::invalid_argument("coefficient: index must be nonnegative");
    const long i = n + shift_;
    switch (kind_) {
        case SequenceKind::ones:
            return SignedLog::one();
        case SequenceKind::tricomi:
            // c_i = (-1)^i / i!
            return {(i % 2 == 0) ? 1 : -1, -log_factorial(i)};
        case SequenceKind::inverse_shifted_factorial:
            return {1, -log_factorial(static_cast<long>(m_) * i + p_)};
        case SequenceKind::explicit_list:
            if (i >= static_cast<long>(values_.size())) return SignedLog::zero();
            return SignedLog::from_value(values_[static_cast<std::size_t>(i)]);
    }
    return SignedLog::zero();
}

Rational UmbralSequence::exact_coefficient(long n) const {
    if (n < 0) throw std::invalid_argument("coefficient: index must be nonnegative");
    const long i = n + shift_;
    switch (kind_) {
        case SequenceKind::ones:
            return Rational(1);
        case SequenceKind::tricomi: {
            Rational r(1, int_factorial(i));
            return (i % 2 == 0) ? r : -r;
        }
        case SequenceKind::inverse_shifted_factorial:
            return Rational(1, int_factorial(static_cast<long>(m_) * i + p_));
        case SequenceKind::explicit_list:
            if (i >= static_cast<long>(values_.size())) return Rational(0);
            return rational_from_double(values_[static_cast<std::size_t>(i)]);
    }
    return Rational(0);
}

std::string UmbralSequence::describe() const {
    std::string base;
    switch (kind_) {
        case SequenceKind::ones: base = "ones"; break;
        case SequenceKind::tricomi: base = "tricomi"; break;
        case SequenceKind::inverse_shifted_factorial:
            base = "inverse_shifted_factorial(m=" + std::to_string(m_) + ",p=" + std::to_string(p_) + ")";
            break;
        case SequenceKind::explicit_list:
            base = "explicit[" + std::to_string(values_.size()) + "]";
            break;
    }
    if (shift_ != 0) base += "<<" + std::to_string(shift_);
    return base;
}

UmbralSequence UmbralSequence::from_json(const nlohmann::json& spec) {
    if (!spec.is_object()) throw SequenceSpecError("(root)", "sequence spec must be a JSON object");
    if (!spec.contains("kind")) throw SequenceSpecError("kind", "sequence spec is missing \"kind\"");
    if (!spec["kind"].is_string()) throw SequenceSpecError("kind", "\"kind\" must be a string");
    const std::string kind = spec["kind"].get<std::string>();

    if (kind == "ones") return ones();
    if (kind == "tricomi") return tricomi();
    if (kind == "inverse_shifted_factorial") {
        if (!spec.contains("m") || !spec["m"].is_number_integer())
            throw SequenceSpecError("m", "inverse_shifted_factorial requires integer \"m\"");
        if (!spec.contains("p") || !spec["p"].is_number_integer())
            throw SequenceSpecError("p", "inverse_shifted_factorial requires integer \"p\"");
        const int m = spec["m"].get<int>();
        const int p = spec["p"].get<int>();
        if (m < 1) throw SequenceSpecError("m", "\"m\" must be >= 1");
        if (p < 0) throw SequenceSpecError("p", "\"p\" must be >= 0");
        return inverse_shifted_factorial(m, p);
    }
    if (kind == "explicit") {
        if (!spec.contains("values") || !spec["values"].is_array())
            throw SequenceSpecError("values", "explicit sequence requires array \"values\"");
        std::vector<double> values;
        for (const auto& v : spec["values"]) {
            if (!v.is_number()) throw SequenceSpecError("values", "\"values\" entries must be numbers");
            values.push_back(v.get<double>());
        }
        if (values.empty()) throw SequenceSpecError("values", "\"values\" must supply at least c_0");
        return explicit_list(std::move(values));
    }
    throw SequenceSpecError(
        "kind", "unknown sequence kind \"" + kind +
                    "\"; valid kinds: ones, tricomi, inverse_shifted_factorial, explicit");
}

UmbralSequence UmbralSequence::from_json_text(const std::string& text) {
    nlohmann::json spec = nlohmann::json::parse(text, nullptr, false);
    if (spec.is_discarded()) throw SequenceSpecError("(root)", "sequence spec is not valid JSON");
    return from_json(spec);
}

}  // namespace umbra
