#pragma once

#include <stdexcept>

namespace chebykit {

// Input outside an operation's domain (bad parameters, failed preconditions).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A series or iteration that cannot converge for the given input.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A decision procedure ran out of budget without reaching a verdict.
struct Undecided : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chebykit
