#pragma once

#include <stdexcept>
#include <string>

namespace multibetti {

// Malformed input document (bad JSON shape, wrong lengths, unknown field tag).
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a presentation invariant
// (multihomogeneity, minimality, duplicate labels).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition failure on a library call (degree not in the lattice,
// multidegree not generic, ground set over the configured limit).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace multibetti
