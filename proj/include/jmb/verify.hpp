#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jmb/catalog.hpp"
#include "jmb/expr.hpp"

namespace jmb {

enum class Status { Pass, Fail, Discrepancy };

std::string_view to_string(Status s);

struct ReportItem {
  std::string id;
  Status status = Status::Pass;
  std::string lhs_sci;
  std::string rhs_sci;
  std::string note;
};

struct Report {
  std::string suite;
  std::vector<ReportItem> items;

  std::size_t count(Status s) const;
  /// True when no item failed; discrepancies do not count.
  bool ok() const { return count(Status::Fail) == 0; }
  const ReportItem* find(std::string_view id) const;
};

/// One registered inequality. When the chain mentions `l` it is checked for
/// every probe prime matching `chars`; otherwise it is evaluated once.
struct Claim {
  std::string id;
  std::string chain;
  std::string anchor;
  CharCondition chars;
  /// A disputed reading of a printed value: failure reports `discrepancy`.
  bool disputed = false;
};

/// Primes used to test claims quantified over the characteristic.
const std::vector<unsigned>& probe_primes();

/// All claims, static and generated, in registry order. Ids are unique.
const std::vector<Claim>& registry_claims();

Report evaluate_claims(const std::vector<Claim>& claims, const Catalog& catalog);
Report run_registry(const Catalog& catalog = Catalog::paper());

/// Each primitive-bound row against the best component / extraspecial
/// normaliser of the same degree, for every probe prime matching the row.
Report verify_prop8(const Catalog& catalog = Catalog::paper());

struct WeisfeilerRow {
  unsigned n = 0;
  unsigned l = 0;
  Nat f;
  Nat bound;  // n^4 (n+2)! below 64, (n+2)! from 64 on
  double alpha = 0.0;
  bool dominates = true;
};

/// Rows for 1 <= n <= n_to and each characteristic, n-major.
std::vector<WeisfeilerRow> weisfeiler(unsigned n_to, const std::vector<unsigned>& chars,
                                      const Catalog& catalog = Catalog::paper());

/// Row with the largest alpha among n in [2, 63].
const WeisfeilerRow* worst_alpha(const std::vector<WeisfeilerRow>& rows);

struct Discrepancy {
  std::string id;
  std::string printed;
  std::string alternative;
  std::string anchor;
  std::string note;
};

/// Static ledger of printed values that conflict with their own derivation.
const std::vector<Discrepancy>& discrepancies();
bool is_known_discrepancy(std::string_view id);

/// Small-degree tables for characteristics 2, 3, 5 and >= 7.
Report golden_tables(const Catalog& catalog = Catalog::paper());

/// Ledger id for a table row known to disagree with the printed table, or ""
/// (e.g. "ThmE-57" for n = 57, l = 3).
std::string golden_discrepancy_id(unsigned n, unsigned l);

}  // namespace jmb
