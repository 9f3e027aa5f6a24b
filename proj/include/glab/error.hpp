#pragma once

#include <stdexcept>
#include <string>

namespace glab {

// precondition or input violations; the CLI maps these to exit code 1
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : DomainError {
    using DomainError::DomainError;
};

// something that the math says cannot happen
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

}  // namespace glab
