#include "complexio.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "error.hpp"

namespace revlab {

namespace {

// Consumes one signed decimal starting at pos; returns value and end position.
// A bare sign followed by 'i' counts as ±1 (handled by the caller).
bool read_number(const std::string& s, size_t& pos, double& out) {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) return false;
    pos += static_cast<size_t>(end - begin);
    out = v;
    return true;
}

} // namespace

cplx parse_complex(const std::string& text) {
    if (text.empty()) fail(Errc::parse_error, "empty complex literal");
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c)))
            fail(Errc::parse_error, "whitespace in complex literal '" + text + "'");

    size_t pos = 0;
    double first = 0.0;
    bool first_is_unit = false; // bare 'i' or sign+'i'
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
        if (pos + 1 < text.size() && text[pos + 1] == 'i') {
            sign = text[pos] == '-' ? -1 : 1;
            first = sign;
            first_is_unit = true;
            pos += 1;
        }
    } else if (text[pos] == 'i') {
        first = 1.0;
        first_is_unit = true;
    }
    if (!first_is_unit && !read_number(text, pos, first))
        fail(Errc::parse_error, "bad complex literal '" + text + "'");

    if (pos < text.size() && text[pos] == 'i') {
        ++pos;
        if (pos != text.size())
            fail(Errc::parse_error, "trailing characters in complex literal '" + text + "'");
        return cplx(0.0, first);
    }
    if (pos == text.size()) return cplx(first, 0.0);

    // imaginary tail: ±<decimal>i or ±i
    if (text[pos] != '+' && text[pos] != '-')
        fail(Errc::parse_error, "bad complex literal '" + text + "'");
    double imag = 0.0;
    if (pos + 1 < text.size() && text[pos + 1] == 'i') {
        imag = text[pos] == '-' ? -1.0 : 1.0;
        pos += 2;
    } else {
        if (!read_number(text, pos, imag))
            fail(Errc::parse_error, "bad complex literal '" + text + "'");
        if (pos >= text.size() || text[pos] != 'i')
            fail(Errc::parse_error, "missing 'i' in complex literal '" + text + "'");
        ++pos;
    }
    if (pos != text.size())
        fail(Errc::parse_error, "trailing characters in complex literal '" + text + "'");
    return cplx(first, imag);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json complex_to_json(cplx z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

cplx complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_object() && j.contains("re"))
        return cplx(j.value("re", 0.0), j.value("im", 0.0));
    fail(Errc::parse_error, "expected complex value (number, string, or {re,im})");
}

} // namespace revlab
