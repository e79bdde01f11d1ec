#pragma once

// Tabular output: single-state records, the regenerated reference tables and
// plot-ready figure series, rendered as aligned text, CSV or JSON.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "radunc/format.hpp"
#include "radunc/observables.hpp"

namespace radunc::tables {

using Cell = std::variant<std::string, long long, double>;

struct Column {
  std::string name;
  std::string unit;  // empty for labels and counts
};

struct Table {
  std::string id;
  std::string title;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Text, Csv, Json };

/// "table", "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// Header cells read "name [unit]" when a unit is present.
std::string render(const Table& table, Format format, int precision = format::kDefaultPrecision);

class UnknownIdError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct OutputRecord {
  System system;
  int n;
  int l;
  int Z;  // 1 for the well and the oscillator
  RadialObservables values;
};

/// Closed-form record for one state; throws InvalidStateError.
OutputRecord state_record(System system, int n, int l, int Z = 1);

/// One row per record: system, n, l, Z and every observable with its unit.
Table records_table(std::span<const OutputRecord> records);

/// Inverse of render(records_table(...), Format::Csv).
std::vector<OutputRecord> parse_records_csv(std::string_view csv);

/// III, IV, VI, VII, VIII, IX, X, XI, XII, XIII.
std::span<const std::string_view> table_ids();
/// Computes the table; throws UnknownIdError.
Table reference_table(std::string_view id);

struct FigureOptions {
  std::optional<int> l;
  std::optional<int> n;
  std::optional<int> max_n;
  int points = 201;
};

/// "<system>-<kind>" with kind in vs-n, vs-ell, per-orbital,
/// ground-state-profile.
std::vector<std::string> figure_families();
/// Throws UnknownIdError for an unknown family and InvalidStateError when
/// the options name no valid state.
Table figure(std::string_view family, const FigureOptions& options);

}  // namespace radunc::tables
