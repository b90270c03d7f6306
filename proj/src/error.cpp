#include "ctl/error.hpp"

namespace ctl {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::NotSimpleCurve: return "NotSimpleCurve";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotExactlyReachable: return "NotExactlyReachable";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

}  // namespace ctl
