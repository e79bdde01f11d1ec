#include "radunc/fixtures.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace radunc::fixtures {

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | primary
// primary:= number | 'pi' | 'sqrt' '(' expr ')' | '(' expr ')'
class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  double parse() {
    const double v = expr();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw FixtureError("bad expression '" + std::string(s_) + "': " + why);
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = unary();
    while (true) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }

  double unary() { return eat('-') ? -unary() : primary(); }

  double primary() {
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (eat_word("pi")) return std::numbers::pi;
    if (eat_word("sqrt")) {
      if (!eat('(')) fail("sqrt needs '('");
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return std::sqrt(v);
    }
    if (pos_ >= s_.size() || !(std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      fail("expected a number");
    }
    const char* begin = s_.data() + pos_;
    char* end = nullptr;
    const std::string tail(begin, s_.size() - pos_);
    const double v = std::strtod(tail.c_str(), &end);
    const std::size_t used = static_cast<std::size_t>(end - tail.c_str());
    if (used == 0) fail("expected a number");
    pos_ += used;
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

double evaluate(std::string_view expression) { return Parser(expression).parse(); }

bool FixtureRow::flagged(std::string_view column) const {
  const std::string c(column);
  return typo.count(c) > 0 || disputed.count(c) > 0;
}

std::size_t Fixture::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw FixtureError("no fixture column " + std::string(name));
}

const std::string& Fixture::token(std::size_t row, std::string_view name) const {
  return rows.at(row).tokens.at(column(name));
}

double Fixture::value(std::size_t row, std::string_view name) const {
  return evaluate(token(row, name));
}

int Fixture::integer(std::size_t row, std::string_view name) const {
  const std::string& t = token(row, name);
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size()) throw FixtureError("not an integer: " + t);
  return v;
}

Fixture parse(std::string_view text) {
  Fixture f;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto p = line.find('#'); p != std::string::npos) line.resize(p);
    auto toks = split(line);
    if (toks.empty()) continue;
    if (f.columns.empty()) {
      f.columns = std::move(toks);
      continue;
    }
    FixtureRow row;
    for (auto& t : toks) {
      if (t.rfind("@typo:", 0) == 0) {
        row.typo.insert(t.substr(6));
      } else if (t.rfind("@disputed:", 0) == 0) {
        row.disputed.insert(t.substr(10));
      } else if (!t.empty() && t[0] == '@') {
        throw FixtureError("line " + std::to_string(line_no) + ": unknown flag " + t);
      } else {
        row.tokens.push_back(std::move(t));
      }
    }
    if (row.tokens.size() != f.columns.size()) {
      throw FixtureError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(f.columns.size()) + " tokens, got " +
                         std::to_string(row.tokens.size()));
    }
    for (const auto& c : row.typo) f.column(c);
    for (const auto& c : row.disputed) f.column(c);
    f.rows.push_back(std::move(row));
  }
  if (f.columns.empty()) throw FixtureError("fixture has no column header");
  return f;
}

Fixture load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace radunc::fixtures
