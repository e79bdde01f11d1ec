#pragma once

// Number formatting and RFC 4180 CSV helpers shared by the report and table
// writers.

#include <string>
#include <string_view>
#include <vector>

namespace radunc::format {

inline constexpr int kDefaultPrecision = 6;

/// printf "%.*g" with the given significant digits; "nan"/"inf" spelled out.
std::string number(double value, int precision = kDefaultPrecision);

/// Rounds a value to the given significant digits (round trip via text).
double round_to_precision(double value, int precision);

/// Quotes a field when it holds a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

/// Joins escaped fields and terminates the record with CRLF.
std::string csv_record(const std::vector<std::string>& fields);

/// Parses RFC 4180 text (CRLF or LF line ends) into records of fields.
/// Throws std::invalid_argument on an unterminated quoted field.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace radunc::format
