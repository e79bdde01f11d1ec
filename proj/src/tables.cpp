#include "radunc/tables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>

#include <json.hpp>

#include "radunc/hydrogenic.hpp"
#include "radunc/isw.hpp"
#include "radunc/sho.hpp"
#include "radunc/specfun.hpp"

namespace radunc::tables {

namespace {

std::string cell_text(const Cell& c, int precision) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return format::number(std::get<double>(c), precision);
}

std::string header_text(const Column& c) {
  return c.unit.empty() ? c.name : c.name + " [" + c.unit + "]";
}

std::string render_text(const Table& t, int precision) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head;
  for (const auto& c : t.columns) head.push_back(header_text(c));
  grid.push_back(head);
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (const auto& c : row) line.push_back(cell_text(c, precision));
    grid.push_back(line);
  }
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::string out = "# " + t.title + "\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line;
    for (std::size_t i = 0; i < grid[r].size(); ++i) {
      if (i) line += "  ";
      const std::string& s = grid[r][i];
      line += std::string(width[i] - s.size(), ' ') + s;
    }
    out += line + "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w;
      out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
    }
  }
  return out;
}

std::string render_csv(const Table& t, int precision) {
  std::vector<std::string> head;
  for (const auto& c : t.columns) head.push_back(header_text(c));
  std::string out = format::csv_record(head);
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (const auto& c : row) line.push_back(cell_text(c, precision));
    out += format::csv_record(line);
  }
  return out;
}

std::string render_json(const Table& t, int precision) {
  nlohmann::ordered_json units = nlohmann::ordered_json::object();
  for (const auto& c : t.columns) {
    if (!c.unit.empty()) units[c.name] = c.unit;
  }
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      const std::string& key = t.columns[i].name;
      if (const auto* s = std::get_if<std::string>(&c)) {
        rec[key] = *s;
      } else if (const auto* v = std::get_if<long long>(&c)) {
        rec[key] = *v;
      } else {
        rec[key] = format::round_to_precision(std::get<double>(c), precision);
      }
    }
    records.push_back(std::move(rec));
  }
  nlohmann::ordered_json doc = {
      {"id", t.id}, {"title", t.title}, {"units", units}, {"records", records}};
  return doc.dump(2) + "\n";
}

std::string state_label(int n, int l) {
  return "(" + std::to_string(n) + "," + std::to_string(l) + ")";
}

std::string orbital_label(int n, int l) {
  static constexpr std::string_view kLetters = "spdfghiklm";
  return std::to_string(n) + kLetters[static_cast<std::size_t>(l)];
}

// States in reference-table order: n ascending, l ascending.
std::vector<std::pair<int, int>> isw_table_states() {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) out.emplace_back(n, l);
  }
  return out;
}

std::vector<int> sho_ell_ascending(int n) {
  std::vector<int> ls = sho::allowed_ell(n);
  std::reverse(ls.begin(), ls.end());
  return ls;
}

Table hydrogen_dispersion() {
  Table t{"III", "Hydrogen mean radius, radial uncertainty and relative dispersion",
          {{"orbital", ""}, {"mean_r", "a0/Z"}, {"delta_r", "a0/Z"}, {"sigma_r", "1"}}, {}};
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto o = hydrogenic::observables({1, n, l});
      t.rows.push_back({orbital_label(n, l), o.mean_r, o.delta_r, o.sigma_r});
    }
  }
  return t;
}

Table hydrogen_uncertainty() {
  Table t{"IV", "Hydrogen radial uncertainties and their product",
          {{"n", ""}, {"l", ""}, {"orbital", ""}, {"wavefunction", ""}, {"delta_r", "a0/Z"},
           {"delta_pr", "Z*hbar/a0"}, {"product", "hbar"}},
          {}};
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto o = hydrogenic::observables({1, n, l});
      t.rows.push_back({static_cast<long long>(n), static_cast<long long>(l), orbital_label(n, l),
                        "R" + std::to_string(n) + std::to_string(l), o.delta_r, o.delta_pr,
                        o.product});
    }
  }
  return t;
}

Table bessel_zeros() {
  Table t{"VI", "Zeros z_nl of the spherical Bessel functions j_l", {{"l", ""}}, {}};
  for (int n = 1; n <= 5; ++n) t.columns.push_back({"n=" + std::to_string(n), "1"});
  for (int l = 0; l <= 4; ++l) {
    std::vector<Cell> row{static_cast<long long>(l)};
    for (int n = 1; n <= 5; ++n) row.push_back(specfun::spherical_bessel_zero(l, n).value);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table isw_normalization() {
  Table t{"VII", "Well normalization factors C_nl = 1/|j_{l+1}(z_nl)|",
          {{"state", ""}, {"z", "1"}, {"C", "1"}}, {}};
  for (auto [n, l] : isw_table_states()) {
    const isw::IswSpec s(n, l);
    t.rows.push_back({state_label(n, l), isw::zero(s).value, isw::normalization_constant(s)});
  }
  return t;
}

Table isw_position() {
  Table t{"VIII", "Well mean radius, radial uncertainty and relative dispersion",
          {{"state", ""}, {"z", "1"}, {"mean_r", "R"}, {"delta_r", "R"}, {"sigma_r", "1"}}, {}};
  for (auto [n, l] : isw_table_states()) {
    const isw::IswSpec s(n, l);
    const auto o = isw::observables(s);
    t.rows.push_back({state_label(n, l), isw::zero(s).value, o.mean_r, o.delta_r, o.sigma_r});
  }
  return t;
}

Table isw_uncertainty() {
  Table t{"IX", "Well radial uncertainties and their product",
          {{"state", ""}, {"z", "1"}, {"delta_r", "R"}, {"delta_pr", "hbar/R"}, {"product", "hbar"}},
          {}};
  for (auto [n, l] : isw_table_states()) {
    const isw::IswSpec s(n, l);
    const auto o = isw::observables(s);
    t.rows.push_back({state_label(n, l), isw::zero(s).value, o.delta_r, o.delta_pr, o.product});
  }
  return t;
}

Table sho_position() {
  Table t{"X", "Oscillator mean radius, radial uncertainty and relative dispersion",
          {{"state", ""}, {"C", "1"}, {"I1", "1"}, {"mean_r", "sqrt(hbar/m*w)"},
           {"delta_r", "sqrt(hbar/m*w)"}, {"sigma_r", "1"}},
          {}};
  for (int n = 0; n <= 6; ++n) {
    for (int l : sho_ell_ascending(n)) {
      const sho::ShoSpec s(n, l);
      const auto i = sho::sho_integrals(s);
      const auto o = sho::observables(s);
      t.rows.push_back({state_label(n, l), i.C, i.I1, o.mean_r, o.delta_r, o.sigma_r});
    }
  }
  return t;
}

Table sho_momentum_mean() {
  Table t{"XI", "Oscillator <p_r> integrals and their vanishing sum",
          {{"state", ""}, {"I4", "1"}, {"I5", "1"}, {"I6", "1"}, {"sum", "1"}}, {}};
  for (int n = 0; n <= 6; ++n) {
    for (int l : sho_ell_ascending(n)) {
      const auto m = sho::momentum_integrals({n, l});
      t.rows.push_back({state_label(n, l), m.I4, m.I5, m.I6, m.I4 + m.I5 + m.I6});
    }
  }
  return t;
}

Table sho_uncertainty() {
  Table t{"XII", "Oscillator radial uncertainties and their product",
          {{"state", ""}, {"C", "1"}, {"I1", "1"}, {"I7", "1"}, {"delta_r", "sqrt(hbar/m*w)"},
           {"delta_pr", "sqrt(m*hbar*w)"}, {"product", "hbar"}},
          {}};
  for (int n = 0; n <= 6; ++n) {
    for (int l : sho_ell_ascending(n)) {
      const sho::ShoSpec s(n, l);
      const auto i = sho::sho_integrals(s);
      const auto o = sho::observables(s);
      t.rows.push_back({state_label(n, l), i.C, i.I1, i.I7, o.delta_r, o.delta_pr, o.product});
    }
  }
  return t;
}

Table sho_degeneracy() {
  Table t{"XIII", "Oscillator energy, parity and degeneracy in spherical and Cartesian bases",
          {{"n", ""}, {"states", ""}, {"d_s", ""}, {"p_s", ""}, {"E_s", "hbar*w"}, {"d_c", ""},
           {"p_c", ""}, {"E_c", "hbar*w"}},
          {}};
  for (int n = 0; n <= 6; ++n) {
    std::string states;
    for (int l : sho_ell_ascending(n)) {
      states += "(" + std::to_string((n - l) / 2) + std::to_string(l) + ")";
    }
    const auto dp = sho::degeneracy_parity(n);
    const std::string parity = dp.parity > 0 ? "+" : "-";
    const double e = sho::energy({n, n});
    t.rows.push_back({static_cast<long long>(n), states, static_cast<long long>(dp.degeneracy),
                      parity, e, static_cast<long long>(sho::cartesian_degeneracy(n)),
                      parity, e});
  }
  return t;
}

constexpr std::array<std::string_view, 10> kTableIds = {"III",  "IV", "VI", "VII", "VIII",
                                                        "IX",   "X",  "XI", "XII", "XIII"};

constexpr std::array<std::string_view, 4> kFigureKinds = {"vs-n", "vs-ell", "per-orbital",
                                                          "ground-state-profile"};

int default_max_n(System s) {
  switch (s) {
    case System::Hydrogen: return 4;
    case System::Isw: return 5;
    case System::Sho: return 6;
  }
  return 4;
}

// Valid l values for a given n, ascending.
std::vector<int> ells_for(System s, int n) {
  std::vector<int> out;
  if (s == System::Sho) {
    if (n >= 0) out = sho_ell_ascending(n);
    return out;
  }
  for (int l = 0; l < n; ++l) out.push_back(l);
  return out;
}

bool valid_state(System s, int n, int l) {
  const auto ls = ells_for(s, n);
  return std::find(ls.begin(), ls.end(), l) != ls.end();
}

int first_n(System s) { return s == System::Sho ? 0 : 1; }

void add_observable_columns(Table& t, System s) {
  for (auto f : kObservableFields) {
    t.columns.push_back({std::string(f), std::string(unit_label(s, f))});
  }
}

void add_observable_cells(std::vector<Cell>& row, const RadialObservables& o) {
  for (std::size_t i = 0; i < kObservableFields.size(); ++i) row.push_back(field(o, i));
}

Table ground_state_profile(System s, int points) {
  if (points < 2) throw std::invalid_argument("figure: need at least two points");
  Table t;
  double upper = 1.0;
  std::string unit;
  switch (s) {
    case System::Hydrogen: upper = 10.0; unit = "a0"; break;
    case System::Isw: upper = 1.0; unit = "R"; break;
    case System::Sho: upper = 4.0; unit = "sqrt(hbar/m*w)"; break;
  }
  t.columns = {{"r", unit}, {"R", unit + "^-3/2"}, {"P", unit + "^-1"}};
  for (int i = 0; i < points; ++i) {
    const double r = upper * i / (points - 1);
    double R = 0.0;
    switch (s) {
      case System::Hydrogen: R = hydrogenic::radial_wavefunction({1, 1, 0}, r); break;
      case System::Isw: R = isw::radial_wavefunction({1, 0}, r); break;
      case System::Sho: R = sho::radial_wavefunction({0, 0}, r); break;
    }
    t.rows.push_back({r, R, r * r * R * R});
  }
  return t;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string render(const Table& t, Format f, int precision) {
  if (precision < 1 || precision > 17) throw std::invalid_argument("precision must be in 1..17");
  switch (f) {
    case Format::Text: return render_text(t, precision);
    case Format::Csv: return render_csv(t, precision);
    case Format::Json: return render_json(t, precision);
  }
  return {};
}

OutputRecord state_record(System system, int n, int l, int Z) {
  switch (system) {
    case System::Hydrogen:
      if (Z < 1 || Z > 4) throw InvalidStateError("hydrogen: Z must be in 1..4");
      return {system, n, l, Z, hydrogenic::observables({Z, n, l})};
    case System::Isw: return {system, n, l, 1, isw::observables({n, l})};
    case System::Sho: return {system, n, l, 1, sho::observables({n, l})};
  }
  throw std::invalid_argument("state_record: unknown system");
}

Table records_table(std::span<const OutputRecord> records) {
  Table t{"state", "Radial observables", {{"system", ""}, {"n", ""}, {"l", ""}, {"Z", ""}}, {}};
  const System units = records.empty() ? System::Hydrogen : records.front().system;
  add_observable_columns(t, units);
  for (const auto& r : records) {
    if (r.system != units) throw std::invalid_argument("records_table: mixed systems");
    std::vector<Cell> row{std::string(to_string(r.system)), static_cast<long long>(r.n),
                          static_cast<long long>(r.l), static_cast<long long>(r.Z)};
    add_observable_cells(row, r.values);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<OutputRecord> parse_records_csv(std::string_view csv) {
  const auto rows = format::parse_csv(csv);
  if (rows.empty()) throw std::invalid_argument("parse_records_csv: no header");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    std::string name = rows[0][i];
    if (auto p = name.find(" ["); p != std::string::npos) name.resize(p);
    index[name] = i;
  }
  auto col = [&](std::string_view name) {
    auto it = index.find(std::string(name));
    if (it == index.end()) throw std::invalid_argument("parse_records_csv: missing " + std::string(name));
    return it->second;
  };
  std::vector<OutputRecord> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != rows[0].size()) throw std::invalid_argument("parse_records_csv: ragged row");
    OutputRecord rec{parse_system(row[col("system")]), std::stoi(row[col("n")]),
                     std::stoi(row[col("l")]), std::stoi(row[col("Z")]), {}};
    for (std::size_t i = 0; i < kObservableFields.size(); ++i) {
      field(rec.values, i) = std::strtod(row[col(kObservableFields[i])].c_str(), nullptr);
    }
    out.push_back(rec);
  }
  return out;
}

std::span<const std::string_view> table_ids() { return kTableIds; }

Table reference_table(std::string_view id) {
  if (id == "III") return hydrogen_dispersion();
  if (id == "IV") return hydrogen_uncertainty();
  if (id == "VI") return bessel_zeros();
  if (id == "VII") return isw_normalization();
  if (id == "VIII") return isw_position();
  if (id == "IX") return isw_uncertainty();
  if (id == "X") return sho_position();
  if (id == "XI") return sho_momentum_mean();
  if (id == "XII") return sho_uncertainty();
  if (id == "XIII") return sho_degeneracy();
  throw UnknownIdError("unknown table id: " + std::string(id));
}

std::vector<std::string> figure_families() {
  std::vector<std::string> out;
  for (System s : {System::Hydrogen, System::Isw, System::Sho}) {
    for (auto k : kFigureKinds) out.push_back(std::string(to_string(s)) + "-" + std::string(k));
  }
  return out;
}

Table figure(std::string_view family, const FigureOptions& opt) {
  const auto dash = family.find('-');
  if (dash == std::string_view::npos) throw UnknownIdError("unknown figure family: " + std::string(family));
  System s;
  try {
    s = parse_system(family.substr(0, dash));
  } catch (const std::invalid_argument&) {
    throw UnknownIdError("unknown figure family: " + std::string(family));
  }
  const std::string_view kind = family.substr(dash + 1);
  const int max_n = opt.max_n.value_or(default_max_n(s));

  Table t;
  t.id = std::string(family);
  if (kind == "vs-n") {
    const int l = opt.l.value_or(0);
    t.title = std::string(to_string(s)) + " observables vs n at l=" + std::to_string(l);
    t.columns = {{"n", ""}, {"l", ""}};
    add_observable_columns(t, s);
    for (int n = first_n(s); n <= max_n; ++n) {
      if (!valid_state(s, n, l)) continue;
      std::vector<Cell> row{static_cast<long long>(n), static_cast<long long>(l)};
      add_observable_cells(row, state_record(s, n, l).values);
      t.rows.push_back(std::move(row));
    }
  } else if (kind == "vs-ell") {
    const int n = opt.n.value_or(max_n);
    t.title = std::string(to_string(s)) + " observables vs l at n=" + std::to_string(n);
    t.columns = {{"n", ""}, {"l", ""}};
    add_observable_columns(t, s);
    for (int l : ells_for(s, n)) {
      std::vector<Cell> row{static_cast<long long>(n), static_cast<long long>(l)};
      add_observable_cells(row, state_record(s, n, l).values);
      t.rows.push_back(std::move(row));
    }
  } else if (kind == "per-orbital") {
    t.title = std::string(to_string(s)) + " observables per state up to n=" + std::to_string(max_n);
    t.columns = {{"state", ""}, {"n", ""}, {"l", ""}};
    add_observable_columns(t, s);
    for (int n = first_n(s); n <= max_n; ++n) {
      for (int l : ells_for(s, n)) {
        std::vector<Cell> row{s == System::Hydrogen ? orbital_label(n, l) : state_label(n, l),
                              static_cast<long long>(n), static_cast<long long>(l)};
        add_observable_cells(row, state_record(s, n, l).values);
        t.rows.push_back(std::move(row));
      }
    }
  } else if (kind == "ground-state-profile") {
    Table p = ground_state_profile(s, opt.points);
    p.id = t.id;
    p.title = std::string(to_string(s)) + " ground-state radial function and probability density";
    return p;
  } else {
    throw UnknownIdError("unknown figure family: " + std::string(family));
  }
  if (t.rows.empty()) throw InvalidStateError("figure: no valid states for the given options");
  return t;
}

}  // namespace radunc::tables
