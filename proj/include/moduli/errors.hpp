#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "error"; }
};

class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "singular_matrix"; }
};

class InvalidGraphError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "invalid_graph"; }
};

class UnsupportedInputError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "unsupported_input"; }
};

class VerificationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "verification"; }
};

}  // namespace moduli
