#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctl {

enum class ErrorKind {
    InvalidInput,
    Unsupported,
    DegenerateCurve,
    NotSimpleCurve,
    ConvergenceFailure,
    CrossCheckFailure,
    Infeasible,
    NotExactlyReachable,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace ctl
