#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace ctl {

/// Shortest decimal that parses back to the same double.
std::string format_real(double v);
double parse_real(std::string_view text);

/// "a+bi" / "a-bi" with shortest round-trip components.
std::string format_complex(std::complex<double> z);
/// Human display: components rounded to 5 decimals, trailing zeros dropped.
std::string format_complex_display(std::complex<double> z);

/// Parses "a+bi" or "a-bi" (both parts required). Throws InvalidInput.
std::complex<double> parse_complex(std::string_view text);

}  // namespace ctl
