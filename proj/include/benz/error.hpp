#pragma once

#include <stdexcept>
#include <string>

namespace benz {

enum class Err {
    NotAPrimePower,
    TooLarge,
    DivisionByZero,
    FieldMismatch,
    DegenerateForm,
    EvenCharacteristic,
    WrongParity,
    NonTrivialPhi,
    NonIntegerEigenvalue,
    BudgetExceeded,
    SchemeFailure,
    Invalid,
};

struct Error : std::runtime_error {
    Err kind;
    Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

} // namespace benz
