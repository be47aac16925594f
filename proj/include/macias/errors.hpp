#pragma once

#include <stdexcept>
#include <string>

namespace macias {

// Violations of the numeric domain: zero, 63-bit overflow, failed
// operation preconditions.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input: bijection spec files, cycle notation, JSON.
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace macias
