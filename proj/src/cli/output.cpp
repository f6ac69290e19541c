#include "spinpoly/output.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace spinpoly {

nlohmann::json cell_to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>)
          return nullptr;
        else
          return v;
      },
      c);
}

nlohmann::json rows_to_json(const Table& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_to_json(row[i]);
    out.push_back(std::move(obj));
  }
  return out;
}

namespace {

std::string csv_field(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>)
          return "";
        else if constexpr (std::is_same_v<V, bool>)
          return v ? "true" : "false";
        else if constexpr (std::is_same_v<V, std::int64_t>)
          return std::to_string(v);
        else if (v.find_first_of(",\"\n") == std::string::npos)
          return v;
        else {
          std::string q = "\"";
          for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          return q + "\"";
        }
      },
      c);
}

}  // namespace

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
  return os.str();
}

Table invariants_table(const std::vector<ClosedFormReport>& reports) {
  Table t{{"p", "q", "n", "sum_m", "a", "b", "closed_form_a", "closed_form_b", "a_match", "b_match", "c"}, {}};
  for (const auto& r : reports) {
    const auto& c = r.computed;
    t.rows.push_back({c.params.p(), c.params.q(), c.n, c.sum_m, c.a, c.b, r.expected_a, r.expected_b,
                      r.delta_a() == 0, r.delta_b() == 0,
                      c.c_known ? Cell(*c.c_known) : Cell(std::monostate{})});
  }
  return t;
}

nlohmann::json ledger_to_json(const std::vector<ErrataLedgerEntry>& ledger) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : ledger) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : e.witnesses)
      w.push_back({{"parameters", x.parameters}, {"printed", x.printed_value}, {"working", x.working_value}});
    out.push_back({{"id", e.id},
                   {"location", e.location},
                   {"printed_form", e.printed_form},
                   {"working_form", e.working_form},
                   {"witnesses", w}});
  }
  return out;
}

Table walls_table(const std::vector<Wall>& walls, const LatticeClass& c1, const LatticeClass& K_S) {
  Table t{{"zeta", "zeta_square", "M", "effective"}, {}};
  for (const auto& w : walls) {
    Cell m = std::monostate{}, eff = std::monostate{};
    if (w.reduction) {
      m = w.reduction->to_string();
      eff = wall_effective(*w.reduction, c1, K_S);
    }
    t.rows.push_back({w.zeta.to_string(), w.square, m, eff});
  }
  return t;
}

namespace {

// Hold / fail counts per (identity, reading) across all surfaces and n.
std::map<std::pair<std::string, std::string>, std::pair<int, int>> diagnostic_tally(
    const std::vector<IdentityDiagnostic>& diags) {
  std::map<std::pair<std::string, std::string>, std::pair<int, int>> tally;
  for (const auto& d : diags) {
    auto& [hold, fail] = tally[{d.identity, to_string(d.reading)}];
    (d.holds() ? hold : fail)++;
  }
  return tally;
}

}  // namespace

nlohmann::json verify_to_json(const VerifyReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : report.checks)
    rows.push_back({{"kind", "check"}, {"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
  for (const auto& d : report.diagnostics)
    rows.push_back({{"kind", "diagnostic"},
                    {"name", d.identity},
                    {"reading", to_string(d.reading)},
                    {"p", d.p},
                    {"q", d.q},
                    {"n", d.n},
                    {"lhs", to_string(d.lhs)},
                    {"rhs", to_string(d.rhs)},
                    {"holds", d.holds()}});
  nlohmann::json meta = {{"depth", report.config.depth == VerifyDepth::Fast ? "fast" : "full"},
                         {"p", nullptr},
                         {"q", nullptr},
                         {"max_pq", report.config.max_pq()},
                         {"n_max", report.config.n_max()},
                         {"seed", report.config.seed},
                         {"all_passed", report.all_passed()}};
  return {{"meta", meta}, {"rows", rows}, {"ledger", ledger_to_json(report.ledger)}};
}

std::string verify_to_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "verify depth=" << (report.config.depth == VerifyDepth::Fast ? "fast" : "full")
     << " max_pq=" << report.config.max_pq() << " n_max=" << report.config.n_max() << " seed=" << report.config.seed
     << '\n';
  for (const auto& c : report.checks)
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.cases << " cases): " << c.detail << '\n';
  for (const auto& [key, counts] : diagnostic_tally(report.diagnostics))
    os << "[DIAG] " << key.first << " reading=" << key.second << ": holds " << counts.first << ", differs "
       << counts.second << '\n';
  os << "ledger: " << report.ledger.size() << " entries\n";
  for (const auto& e : report.ledger) {
    os << "  " << e.id << " -- " << e.location << '\n'
       << "    printed: " << e.printed_form << '\n'
       << "    working: " << e.working_form << '\n';
    for (const auto& w : e.witnesses)
      os << "    witness " << w.parameters << ": printed " << w.printed_value << ", working " << w.working_value
         << '\n';
  }
  return os.str();
}

}  // namespace spinpoly
