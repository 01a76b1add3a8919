#include "holosg/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "holosg/errors.hpp"

namespace holosg {

std::string format_double(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(std::complex<double> z)
{
    return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

std::vector<double> parse_number_list(std::string_view text, std::size_t offset)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = std::string(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        if (piece.empty()) {
            throw ParseError("expected a number", offset + start);
        }
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(piece.c_str(), &end);
        if (end != piece.c_str() + piece.size() || errno == ERANGE) {
            throw ParseError("malformed number '" + piece + "'", offset + start + (end - piece.c_str()));
        }
        out.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::complex<double> parse_complex_pair(std::string_view text)
{
    const auto v = parse_number_list(text);
    if (v.size() == 1) {
        return {v[0], 0.0};
    }
    if (v.size() != 2) {
        throw ParseError("complex value must be 're,im'", 0);
    }
    return {v[0], v[1]};
}

json to_json(std::complex<double> z)
{
    return json::array({z.real(), z.imag()});
}

namespace {

void dump_into(const json& v, std::string& out)
{
    switch (v.type()) {
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [key, item] : v.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            out += json(key).dump();
            out += ':';
            dump_into(item, out);
        }
        out += '}';
        break;
    }
    case json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& item : v) {
            if (!first) {
                out += ',';
            }
            first = false;
            dump_into(item, out);
        }
        out += ']';
        break;
    }
    case json::value_t::number_float: {
        const double x = v.get<double>();
        // JSON has no inf/nan; those become null.
        out += std::isfinite(x) ? format_double(x) : "null";
        break;
    }
    default:
        out += v.dump();
    }
}

} // namespace

std::string dump_json(const json& value)
{
    std::string out;
    dump_into(value, out);
    return out;
}

} // namespace holosg
