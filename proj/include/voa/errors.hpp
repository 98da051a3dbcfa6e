#pragma once

#include <stdexcept>
#include <string>

namespace voa {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Division by a zero rational function. */
struct ZeroDenominatorError : Error {
    ZeroDenominatorError() : Error("zero denominator") {}
};

/* Specialization of a rational function at a zero of its denominator. */
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/* Mixing elements of different Lie algebras. */
struct AlgebraMismatchError : Error {
    explicit AlgebraMismatchError(const std::string& what) : Error(what) {}
};

/* Pairing of states whose weights differ. */
struct WeightMismatchError : Error {
    explicit WeightMismatchError(const std::string& what) : Error(what) {}
};

} // namespace voa
