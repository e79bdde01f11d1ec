#pragma once

// Reader for the plain-text reference fixtures under tests/fixtures.
//
// Lines starting with '#' are comments. The first other line names the
// columns; each following line holds one token per column, then optional
// flags of the form @typo:<column> or @disputed:<column>. Numeric tokens are
// arithmetic expressions over decimals, pi, sqrt(), + - * / and parentheses,
// so exact entries can be written as e.g. sqrt(9/2-2704/(225*pi)).

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace radunc::fixtures {

class FixtureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Evaluates one expression token; throws FixtureError on bad syntax.
double evaluate(std::string_view expression);

struct FixtureRow {
  std::vector<std::string> tokens;
  std::set<std::string> typo;      // printed value known to be wrong
  std::set<std::string> disputed;  // printed value disagrees with the oracle

  bool flagged(std::string_view column) const;
};

struct Fixture {
  std::vector<std::string> columns;
  std::vector<FixtureRow> rows;

  std::size_t column(std::string_view name) const;
  const std::string& token(std::size_t row, std::string_view name) const;
  double value(std::size_t row, std::string_view name) const;
  int integer(std::size_t row, std::string_view name) const;
};

Fixture parse(std::string_view text);
Fixture load(const std::filesystem::path& path);

}  // namespace radunc::fixtures
