#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace l0t {

// Error taxonomy drives CLI exit codes: input-shaped failures (parse,
// unresolved reference, unsupported norm-kind combination, violated
// precondition, infeasible gauge) exit 2; property failures exit 1.
enum class ErrorKind {
    Parse,
    Reference,
    Unsupported,
    Precondition,
    Infeasible,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace l0t
