#pragma once

#include "ctl/inverse.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctl {

/// Result of one CLI computation, printed as a header line plus one CSV row.
struct RunRecord {
    std::string command;
    std::string scene;
    std::string mode;
    double tol = 0.0;
    std::optional<double> alpha;
    std::optional<double> alpha_lift;
    std::optional<double> alpha_flux;
    std::optional<double> discrepancy;
    std::optional<double> length;
    std::optional<std::complex<double>> tau;
    std::optional<std::complex<double>> tau_reduced;
    std::optional<std::complex<double>> j;
    std::optional<double> elapsed_ms;

    bool operator==(const RunRecord&) const = default;
};

std::string run_record_header(bool with_timing = false);
std::string run_record_row(const RunRecord& rec, bool with_timing = false);
RunRecord parse_run_record(std::string_view header, std::string_view row);

/// `index,<params...>,alpha,length,tau_re,tau_im,red_re,red_im,simple`
std::string coverage_csv(const CoverageReport& report);

/// Parses a coverage CSV back into records (param names are recovered from the
/// header). Failure messages are not part of the CSV and come back empty.
CoverageReport parse_coverage_csv(std::string_view text);

/// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace ctl
