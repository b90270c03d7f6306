#include "ctl/records.hpp"

#include "ctl/complex_format.hpp"
#include "ctl/error.hpp"

#include <cmath>
#include <sstream>

namespace ctl {

namespace {

constexpr const char* run_columns[] = {"command", "scene", "mode", "tol", "alpha", "alpha_lift",
                                       "alpha_flux", "discrepancy", "length", "tau", "tau_reduced", "j"};

std::string opt(const std::optional<double>& v)
{
    return v ? format_real(*v) : std::string();
}

std::string opt(const std::optional<std::complex<double>>& v)
{
    return v ? format_complex(*v) : std::string();
}

std::optional<double> opt_real(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    return parse_real(s);
}

std::optional<std::complex<double>> opt_complex(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    return parse_complex(s);
}

std::string join(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n\r") == std::string::npos) {
            out += f;
            continue;
        }
        out += '"';
        for (char c : f) {
            if (c == '"')
                out += '"';
            out += c;
        }
        out += '"';
    }
    return out;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c != '"')
                out.back() += c;
            else if (i + 1 < line.size() && line[i + 1] == '"')
                out.back() += line[++i];
            else
                quoted = false;
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    if (quoted)
        fail(ErrorKind::InvalidInput, "unterminated quoted CSV field");
    return out;
}

std::string run_record_header(bool with_timing)
{
    std::vector<std::string> cols(std::begin(run_columns), std::end(run_columns));
    if (with_timing)
        cols.emplace_back("elapsed_ms");
    return join(cols);
}

std::string run_record_row(const RunRecord& r, bool with_timing)
{
    std::vector<std::string> f{r.command,          r.scene,          r.mode,
                               format_real(r.tol), opt(r.alpha),     opt(r.alpha_lift),
                               opt(r.alpha_flux),  opt(r.discrepancy), opt(r.length),
                               opt(r.tau),         opt(r.tau_reduced), opt(r.j)};
    if (with_timing)
        f.push_back(opt(r.elapsed_ms));
    return join(f);
}

RunRecord parse_run_record(std::string_view header, std::string_view row)
{
    const auto names = split_csv_line(header);
    const auto values = split_csv_line(row);
    if (names.size() != values.size())
        fail(ErrorKind::InvalidInput, "CSV row does not match its header");
    RunRecord r;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& n = names[i];
        const auto& v = values[i];
        if (n == "command") r.command = v;
        else if (n == "scene") r.scene = v;
        else if (n == "mode") r.mode = v;
        else if (n == "tol") r.tol = parse_real(v);
        else if (n == "alpha") r.alpha = opt_real(v);
        else if (n == "alpha_lift") r.alpha_lift = opt_real(v);
        else if (n == "alpha_flux") r.alpha_flux = opt_real(v);
        else if (n == "discrepancy") r.discrepancy = opt_real(v);
        else if (n == "length") r.length = opt_real(v);
        else if (n == "tau") r.tau = opt_complex(v);
        else if (n == "tau_reduced") r.tau_reduced = opt_complex(v);
        else if (n == "j") r.j = opt_complex(v);
        else if (n == "elapsed_ms") r.elapsed_ms = opt_real(v);
        else fail(ErrorKind::InvalidInput, "unknown run-record column '" + n + "'");
    }
    return r;
}

std::string coverage_csv(const CoverageReport& report)
{
    std::vector<std::string> header{"index"};
    header.insert(header.end(), report.param_names.begin(), report.param_names.end());
    for (const char* c : {"alpha", "length", "tau_re", "tau_im", "red_re", "red_im", "simple"})
        header.emplace_back(c);

    std::ostringstream out;
    out << join(header) << '\n';
    for (const auto& rec : report.records) {
        std::vector<std::string> f{std::to_string(rec.index)};
        for (double p : rec.params)
            f.push_back(format_real(p));
        for (double v : {rec.alpha, rec.length, rec.tau.real(), rec.tau.imag(), rec.tau_reduced.real(),
                         rec.tau_reduced.imag()})
            f.push_back(format_real(v));
        f.emplace_back(rec.simple ? "1" : "0");
        out << join(f) << '\n';
    }
    return out.str();
}

CoverageReport parse_coverage_csv(std::string_view text)
{
    CoverageReport report;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line))
        fail(ErrorKind::InvalidInput, "empty coverage CSV");
    const auto header = split_csv_line(line);
    constexpr std::size_t trailing = 7;
    if (header.size() < trailing + 1 || header.front() != "index" || header.back() != "simple")
        fail(ErrorKind::InvalidInput, "not a coverage CSV header");
    report.param_names.assign(header.begin() + 1, header.end() - trailing);
    const std::size_t np = report.param_names.size();

    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto f = split_csv_line(line);
        if (f.size() != header.size())
            fail(ErrorKind::InvalidInput, "coverage CSV row has the wrong number of fields");
        CoverageRecord rec;
        rec.index = std::stoul(f[0]);
        for (std::size_t i = 0; i < np; ++i)
            rec.params.push_back(parse_real(f[1 + i]));
        std::size_t b = 1 + np;
        rec.alpha = parse_real(f[b]);
        rec.length = parse_real(f[b + 1]);
        rec.tau = {parse_real(f[b + 2]), parse_real(f[b + 3])};
        rec.tau_reduced = {parse_real(f[b + 4]), parse_real(f[b + 5])};
        rec.simple = f[b + 6] == "1";
        if (!rec.simple || std::isnan(rec.alpha))
            ++report.skipped;
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace ctl
