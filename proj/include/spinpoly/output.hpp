#pragma once

// Exact table output. Integers stay integers, rationals are "p/q" strings,
// and the CSV and JSON forms of one table carry the same cells.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "spinpoly/errata.hpp"
#include "spinpoly/invariants.hpp"
#include "spinpoly/verify.hpp"
#include "spinpoly/walls.hpp"

namespace spinpoly {

using Cell = std::variant<std::monostate, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

nlohmann::json cell_to_json(const Cell& c);
/// Rows as JSON objects keyed by column name.
nlohmann::json rows_to_json(const Table& t);
/// Header line plus one line per row; empty field for a missing value.
std::string to_csv(const Table& t);

/// Row of the invariants table for one (p, q, n).
Table invariants_table(const std::vector<ClosedFormReport>& reports);
nlohmann::json ledger_to_json(const std::vector<ErrataLedgerEntry>& ledger);

Table walls_table(const std::vector<Wall>& walls, const LatticeClass& c1, const LatticeClass& K_S);

nlohmann::json verify_to_json(const VerifyReport& report);
/// One "[PASS]"/"[FAIL]" line per hard check, "[DIAG]" lines per identity and
/// reading, then the ledger.
std::string verify_to_text(const VerifyReport& report);

}  // namespace spinpoly
