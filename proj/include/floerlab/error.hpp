#pragma once

#include <stdexcept>
#include <string>

namespace floerlab {

/// Input rejected by a precondition (bad parameters, inconsistent descriptor).
class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structural check failed on constructed data. `witness` names the
/// offending generators/entries in a form suitable for reports.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

}  // namespace floerlab
