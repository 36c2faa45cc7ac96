#pragma once

#include <stdexcept>
#include <string>

namespace hopfk {

enum class ErrorKind {
    SignatureMismatch,
    InvalidPermutation,
    DimensionMismatch,
    FieldMismatch,
    NotAField,
    NotInvertible,
    NotAHopfAlgebra,
    SingularAntipode,
    NotAGroup,
    CharacteristicTwo,
    BraceCheckFailed,
    HarrisonCheckFailed,
    LongCheckFailed,
    NotCommutative,
    NotCocommutative,
    CocycleCheckFailed,
    RMatrixCheckFailed,
    Eq31Failed,
    RolesDiffer,
    MatchedCheckFailed,
    ComoduleBialgebraCheckFailed,
    HypothesisFailed,
    Eq41Failed,
    Eq42Failed,
    Eq43Failed,
    CounitMismatch,
    UnknownObject,
    ParseError,
};

const char* error_kind_name(ErrorKind k);

class HopfError : public std::runtime_error {
public:
    HopfError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hopfk
