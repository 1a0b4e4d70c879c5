#pragma once

#include <stdexcept>
#include <string>

namespace cubeiso {

// Caller passed an argument outside an operation's contract.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request is well-formed but outside what this build can enumerate or store.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cubeiso
