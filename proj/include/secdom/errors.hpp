#pragma once

#include <stdexcept>
#include <string>

namespace secdom {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed caller input: bad edge endpoints, self-loops, invalid partitions,
// malformed witnesses, unsatisfiable generator parameters.
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

// A documented operation precondition does not hold (e.g. epn(v, D) with v not in D).
struct precondition_error : error {
    explicit precondition_error(const std::string& what) : error(what) {}
};

// The instance exceeds a hard size cap of an exhaustive routine.
struct size_limit_error : error {
    explicit size_limit_error(const std::string& what) : error(what) {}
};

// The input graph is not in the class an algorithm requires.
struct class_error : error {
    explicit class_error(const std::string& what) : error(what) {}
};

// The input graph must be connected but is not.
struct disconnected_error : class_error {
    explicit disconnected_error(const std::string& what) : class_error(what) {}
};

// A solution-lifting step exceeded the size budget of the equivalence it
// implements, or produced a set its verifier rejects. Tests count these.
struct claim_violation_error : error {
    explicit claim_violation_error(const std::string& what) : error(what) {}
};

// A plugged-in procedure (e.g. an approximator) broke its contract.
struct dependency_error : error {
    explicit dependency_error(const std::string& what) : error(what) {}
};

} // namespace secdom
