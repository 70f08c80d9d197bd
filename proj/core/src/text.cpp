#include "mcurve/text.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "mcurve/errors.hpp"

namespace mcurve::text {

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = char(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            return out;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(std::string_view s) {
    const std::string t = trim(s);
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (first != last && *first == '+') ++first;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (t.empty() || ec != std::errc{} || ptr != last) throw ParseError(0, "invalid number '" + t + "'");
    return v;
}

std::string format_general(double v, int precision) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, precision);
    return std::string(buf.data(), ptr);
}

std::string format_fixed(double v, int decimals) {
    std::array<char, 512> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
    std::string out(buf.data(), ptr);
    if (!out.empty() && out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

std::string shift_decimal(std::string_view number, int pow10) {
    const std::string t = trim(number);
    auto fail = [&] { return ParseError(0, "invalid number '" + t + "'"); };
    std::size_t i = 0;
    bool negative = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) negative = t[i++] == '-';
    std::string digits;
    long exponent = 0;
    bool any = false, point = false;
    for (; i < t.size(); ++i) {
        const char c = t[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            any = true;
            if (point) --exponent;
        } else if (c == '.' && !point) {
            point = true;
        } else {
            break;
        }
    }
    if (!any) throw fail();
    if (i < t.size()) {
        if (t[i] != 'e' && t[i] != 'E') throw fail();
        int e = 0;
        const char* first = t.data() + i + 1;
        if (first != t.data() + t.size() && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), e);
        if (ec != std::errc{} || ptr != t.data() + t.size()) throw fail();
        exponent += e;
    }
    exponent += pow10;

    const auto lead = digits.find_first_not_of('0');
    if (lead == std::string::npos) return "0";
    digits.erase(0, lead);
    while (digits.back() == '0') {
        digits.pop_back();
        ++exponent;
    }
    if (exponent > 400 || exponent < -400 - long(digits.size())) throw ParseError(0, "number '" + t + "' out of range");

    std::string out = negative ? "-" : "";
    if (exponent >= 0) return out + digits + std::string(std::size_t(exponent), '0');
    const long point_at = long(digits.size()) + exponent;
    if (point_at > 0) return out + digits.substr(0, std::size_t(point_at)) + "." + digits.substr(std::size_t(point_at));
    return out + "0." + std::string(std::size_t(-point_at), '0') + digits;
}

double parse_scaled(std::string_view s, int pow10) { return parse_double(shift_decimal(s, pow10)); }

std::string format_scaled(double v, int pow10) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return shift_decimal(std::string_view(buf.data(), std::size_t(ptr - buf.data())), pow10);
}

}  // namespace mcurve::text
