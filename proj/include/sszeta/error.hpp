#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sszeta {

enum class Errc {
    NotPrime,
    SizeExceeded,
    DivisionByZero,
    ContextMismatch,
    DegreeMismatch,
    ZeroInput,
    NotSeparable,
    ConstantInput,
    WrongCharacteristic,
    UnknownFamily,
    ModelMismatch,
    NotAutomorphism,
    SearchBudgetExceeded,
    WrongModel,
    NoRationalPoints,
    BudgetExceeded,
    InconsistentCounts,
    RowNotFound,
    NonIntegerRank,
    NotSupersingular,
    AmbiguityUnresolved,
    UnknownClass,
    UnclassifiedOrder,
    InvalidOrder,
    NotSimpleOrUncovered,
    VerificationFailed,
    NoParameterFound,
    RowNotApplicable,
    ParseError,
};

std::string_view errc_name(Errc e) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &what) { throw Error(code, what); }

} // namespace sszeta
