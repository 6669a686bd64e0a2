#pragma once

#include <stdexcept>
#include <string>

namespace listec {

// Bad user input: malformed instance, regime bound not met, unknown ids.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A routine was called outside its documented precondition. Indicates a
// caller bug, not bad user data.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// A size guard was exceeded (oracle, isomorphism, path-width search).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Something the lemmas guarantee failed to hold. Always a bug.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ContractError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InvariantError(msg);
}

}  // namespace listec
