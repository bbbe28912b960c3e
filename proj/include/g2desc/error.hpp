#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2desc {

enum class errc {
    nonzero_remainder,
    non_invertible_lead,
    parent_mismatch,
    degree_exceeded,
    denominator_divisible,
    division_by_zero,
    zero_point,
    not_on_curve,
    indeterminate,
    omega_equals_alpha,
    omega_not_root,
    not_degree_six,
    not_squarefree,
    bad_reduction,
    malformed_input,
    invariant_violation,
};

constexpr std::string_view to_string(errc e) noexcept {
    switch (e) {
    case errc::nonzero_remainder: return "NonzeroRemainder";
    case errc::non_invertible_lead: return "NonInvertibleLead";
    case errc::parent_mismatch: return "ParentMismatch";
    case errc::degree_exceeded: return "DegreeExceeded";
    case errc::denominator_divisible: return "DenominatorDivisible";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::zero_point: return "ZeroPoint";
    case errc::not_on_curve: return "NotOnCurve";
    case errc::indeterminate: return "Indeterminate";
    case errc::omega_equals_alpha: return "OmegaEqualsAlpha";
    case errc::omega_not_root: return "OmegaNotRoot";
    case errc::not_degree_six: return "NotDegreeSix";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::bad_reduction: return "BadReduction";
    case errc::malformed_input: return "MalformedInput";
    case errc::invariant_violation: return "InvariantViolation";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace g2desc
