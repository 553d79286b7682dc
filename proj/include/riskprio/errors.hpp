#pragma once

#include <stdexcept>
#include <string>

namespace riskprio {

// Semantically invalid input: cycles, dangling references, bad intervals.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed document. `where` is "line:col" for syntax errors or a JSON
// pointer for a field that has the wrong shape.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

}  // namespace riskprio
