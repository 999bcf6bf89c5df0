#pragma once

#include "counting.hpp"

namespace skb {

// ---------------------------------------------------------------------------
// Catalog of the groups of order n*p, one per isomorphism class, built from
// the structure theorem: N = Z_p x| E over orbit representatives of the
// Aut(E)-action on Hom(E, Z_p^*).
// ---------------------------------------------------------------------------
struct NpCatalogEntry {
  StructureLabel label;
  FiniteGroup G;
};

struct GroupCatalog {
  int n = 0, p = 0, order = 0;
  std::vector<std::unique_ptr<NpCatalogEntry>> members;
};

GroupCatalog np_group_catalog(int n, int p);

// ---------------------------------------------------------------------------
// Independent enumeration: for each N in the catalog, count conjugacy
// classes of regular subgroups of Hol(N) by the isomorphism class of the
// subgroup, producing a report comparable with count_np cell-for-cell.
// ---------------------------------------------------------------------------
struct OracleOptions {
  bool pruned = false;       // restrict extensions to the Sylow anchor's normalizer
  double budget_seconds = 0; // 0 = unlimited
  int threads = 0;           // 0 = SKB_THREADS env var, else 1
};

struct OracleResult {
  CountReport report;
  bool complete = true;
  std::string note; // names any skipped members
};

OracleResult enumerate_braces_bruteforce(int order, const GroupCatalog& catalog,
                                         const OracleOptions& opts = {});

struct CellDiff {
  StructureLabel add, mul;
  long long a = 0, b = 0;
};

// empty iff the two reports agree cell-for-cell
std::vector<CellDiff> compare_reports(const CountReport& a, const CountReport& b);

} // namespace skb
