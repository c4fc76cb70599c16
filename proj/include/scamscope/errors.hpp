#pragma once

#include <stdexcept>
#include <string>

namespace scamscope {

// Bad or inconsistent input data (files, records, CLI arguments). Maps to
// exit code 1 in the CLI, as opposed to internal invariant violations
// (std::logic_error) which map to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace scamscope
