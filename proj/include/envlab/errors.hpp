#pragma once

#include <stdexcept>
#include <string>

namespace envlab {

// Base of every exception thrown by the library. The CLI maps InputError and
// its descendants to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class RankMismatch : public InputError {
public:
    using InputError::InputError;
};

class NonGenericChamber : public InputError {
public:
    using InputError::InputError;
};

class UncertifiedSpace : public InputError {
public:
    using InputError::InputError;
};

class SearchCapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace envlab
