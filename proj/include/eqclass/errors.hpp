// Error types shared by the whole library. Each computation error carries a
// stable machine-readable code, used verbatim by the CLI's error JSON.
#ifndef EQCLASS_ERRORS_HPP
#define EQCLASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqclass {

class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define EQCLASS_DEFINE_ERROR(name, code)                                     \
    class name : public error {                                              \
    public:                                                                  \
        explicit name(const std::string& what) : error(code, what) {}        \
    }

EQCLASS_DEFINE_ERROR(division_by_zero, "DivisionByZero");
EQCLASS_DEFINE_ERROR(conductor_mismatch, "ConductorMismatch");
EQCLASS_DEFINE_ERROR(conductor_too_large, "ConductorTooLarge");
EQCLASS_DEFINE_ERROR(pole_at_minus_one, "PoleAtMinusOne");
EQCLASS_DEFINE_ERROR(pole_at_zero, "PoleAtZero");
EQCLASS_DEFINE_ERROR(theta_zero, "ThetaZero");
EQCLASS_DEFINE_ERROR(non_nilpotent_argument, "NonNilpotentArgument");
EQCLASS_DEFINE_ERROR(ring_mismatch, "RingMismatch");
EQCLASS_DEFINE_ERROR(non_unit_constant, "NonUnitConstant");
EQCLASS_DEFINE_ERROR(invalid_weights, "InvalidWeights");
EQCLASS_DEFINE_ERROR(unknown_element, "UnknownElement");
EQCLASS_DEFINE_ERROR(missing_table, "MissingTable");
EQCLASS_DEFINE_ERROR(nontrivial_angle, "NonTrivialAngle");
EQCLASS_DEFINE_ERROR(parse_error, "ParseError");

#undef EQCLASS_DEFINE_ERROR

} // namespace eqclass

#endif
