#pragma once

// Catalogue of printed formulas that disagree with the working forms used by
// the library. Each entry is found by searching for the smallest parameters
// on which the two forms differ, so a witness is always a live evaluation.

#include <cstdint>
#include <string>
#include <vector>

namespace spinpoly {

struct ErrataWitness {
  std::string parameters;  // e.g. "(p,q,sigma,tau)=(1,1,0,0)"
  std::string printed_value;
  std::string working_value;
};

struct ErrataLedgerEntry {
  std::string id;
  std::string location;
  std::string printed_form;
  std::string working_form;
  /// The smallest witness comes first; further entries are canonical examples.
  std::vector<ErrataWitness> witnesses;
};

/// Builds the ledger, searching coprime (p,q) up to max_pq.
std::vector<ErrataLedgerEntry> build_errata_ledger(std::int64_t max_pq = 15);

const ErrataLedgerEntry* find_entry(const std::vector<ErrataLedgerEntry>& ledger, const std::string& id);

}  // namespace spinpoly
