#pragma once

#include <stdexcept>
#include <string>

namespace csd {

/// Malformed or inconsistent input: dimension mismatches, bad indices, bad literals.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A geometric object required to be nondegenerate was not.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator could not certify its claimed depth within its retry budget.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, long long achieved)
        : std::runtime_error(what), achieved_(achieved)
    {
    }

    long long achieved() const noexcept { return achieved_; }

private:
    long long achieved_;
};

/// The core sampler found no interior core point. Not a proof of emptiness.
class EmptyCoreEvidenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace csd
