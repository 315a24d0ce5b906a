#pragma once

#include <stdexcept>
#include <string>

namespace dsolid {

// Bad user input (malformed sequence, out-of-range index, wrong type).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource bound was exceeded (enumeration growth is exponential in n).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal structural invariant failed. Carries the invariant's name so the
// CLI can report which check broke.
class invariant_violation : public std::logic_error {
public:
    invariant_violation(const std::string& invariant, const std::string& detail)
        : std::logic_error(invariant + ": " + detail), invariant_(invariant) {}
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

}  // namespace dsolid
