#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace holosg {

using json = nlohmann::ordered_json;

/// Shortest-free, fixed formatting: 17 significant digits ("%.17g").
std::string format_double(double x);
std::string format_complex(std::complex<double> z);

/// Parses "a,b,c" into doubles. `offset` is added to error positions so that
/// diagnostics refer to the caller's full string.
std::vector<double> parse_number_list(std::string_view text, std::size_t offset = 0);

/// Parses a complex number given as "re,im" (a lone "re" is also accepted).
std::complex<double> parse_complex_pair(std::string_view text);

json to_json(std::complex<double> z);

/// Serializes with every double printed at 17 significant digits, keys in
/// insertion order, no whitespace. Output depends only on the value.
std::string dump_json(const json& value);

} // namespace holosg
