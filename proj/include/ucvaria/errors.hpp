#pragma once

#include <stdexcept>
#include <string>

namespace ucvaria {

// Base for all recoverable input/data errors (exit code 1 territory).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document. Message carries file/position context.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Well-formed input violating a domain invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// A corpus whose term matrix is all zero (nothing to decompose).
class DegenerateCorpusError : public Error {
public:
    explicit DegenerateCorpusError(const std::string& what) : Error(what) {}
};

// Precondition violation by the caller. Deliberately not an Error:
// this is a bug, not bad input (exit code 2 territory).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ucvaria
