#pragma once

#include <stdexcept>
#include <string>

namespace qhm {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatches: wrong sizes, odd dimensions, incompatible operands.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Mathematical precondition not met by an otherwise well-formed input
// (not a harmonic morphism, not umbilical, unsupported multiplication size, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed textual input (map files, rational literals).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Float eigensolver failed to converge.
class EigenError : public Error {
public:
    explicit EigenError(const std::string& what) : Error(what) {}
};

// A theorem this code relies on appears violated; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace qhm
