#pragma once

#include <stdexcept>
#include <string>

namespace nvm {

/// Invalid user input: malformed edge list, out-of-range vertex, bad
/// parameters, and the like.  CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Problem size exceeds a hard cap (state-space explosion).  CLI maps this
/// to exit code 3.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nvm
