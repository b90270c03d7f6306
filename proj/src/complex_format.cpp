#include "ctl/complex_format.hpp"

#include "ctl/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace ctl {

std::string format_real(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        v = 0.0;  // drop the sign of negative zero
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_real(std::string_view text)
{
    if (text == "nan")
        return std::nan("");
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+')
        ++first;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        fail(ErrorKind::InvalidInput, "cannot parse number '" + std::string(text) + "'");
    return v;
}

std::string format_complex(std::complex<double> z)
{
    std::string im = format_real(z.imag());
    if (im.front() != '-')
        im.insert(im.begin(), '+');
    return format_real(z.real()) + im + "i";
}

namespace {

std::string display_component(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.5f", v);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0')
            s.pop_back();
        if (s.back() == '.')
            s.pop_back();
    }
    if (s == "-0")
        s = "0";
    return s;
}

}  // namespace

std::string format_complex_display(std::complex<double> z)
{
    std::string im = display_component(z.imag());
    if (im.front() != '-')
        im.insert(im.begin(), '+');
    return display_component(z.real()) + im + "i";
}

std::complex<double> parse_complex(std::string_view text)
{
    auto bad = [&] {
        fail(ErrorKind::InvalidInput, "cannot parse complex number '" + std::string(text) +
                                          "' (expected a+bi)");
    };
    if (text.size() < 4 || text.back() != 'i')
        bad();
    // the imaginary part starts at the last sign that is not part of an exponent
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
        char c = text[i];
        char prev = text[i - 1];
        if ((c == '+' || c == '-') && prev != 'e' && prev != 'E')
            split = i;
    }
    if (split == std::string_view::npos)
        bad();
    double re = 0.0, im = 0.0;
    try {
        re = parse_real(text.substr(0, split));
        im = parse_real(text.substr(split, text.size() - split - 1));
    } catch (const Error&) {
        bad();
    }
    if (!std::isfinite(re) || !std::isfinite(im))
        bad();
    return {re, im};
}

}  // namespace ctl
