#include "oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>

namespace skb {

GroupCatalog np_group_catalog(int n, int p) {
  if (!is_prime(p) || n % p == 0) throw std::invalid_argument("np_group_catalog: bad (n, p)");
  GroupCatalog cat;
  cat.n = n;
  cat.p = p;
  cat.order = n * p;
  std::vector<FiniteGroup> groups = small_group_catalog(n);
  for (int gi = 0; gi < (int)groups.size(); ++gi) {
    const FiniteGroup& E = groups[gi];
    AutomorphismGroup autE = automorphism_group(E);
    CharacterSpace S = homs_to_cyclic(E, (int)gcd_ll(E.exponent(), p - 1));
    LabelScheme scheme = make_label_scheme(E, autE, S);
    for (int oi = 0; oi < scheme.orbits.orbit_count(); ++oi) {
      int rep = scheme.orbits.orbits[oi][0];
      auto entry = std::make_unique<NpCatalogEntry>();
      entry->label = label_structures(gi, E.name, E.order, scheme, rep);
      entry->G = semidirect_by_character(p, S.characters[rep], E, entry->label.str());
      cat.members.push_back(std::move(entry));
    }
  }
  // the structure theorem promises these are pairwise non-isomorphic
  for (size_t i = 0; i < cat.members.size(); ++i)
    for (size_t j = i + 1; j < cat.members.size(); ++j)
      if (are_isomorphic(cat.members[i]->G, cat.members[j]->G))
        throw std::logic_error("np_group_catalog: duplicate isomorphism class");
  return cat;
}

namespace {

struct MemberCount {
  std::map<int, long long> by_class; // catalog member index of the subgroup -> classes
  bool complete = true;
};

MemberCount enumerate_member(const GroupCatalog& catalog, int mi, const OracleOptions& opts,
                             std::chrono::steady_clock::time_point deadline) {
  const NpCatalogEntry& member = *catalog.members[mi];
  MemberCount out;
  try {
    AutomorphismGroup autN = automorphism_group(member.G);
    HolGroup hol = holomorph(member.G, autN);
    RegularSearchOptions ropts;
    ropts.anchor_prime = catalog.p;
    ropts.normalizer_mode = opts.pruned;
    ropts.deadline = deadline;
    for (const RegularSubgroup& rep : find_regular_classes(hol, ropts)) {
      FiniteGroup G = rep.as_group();
      int label = -1;
      for (int j = 0; j < (int)catalog.members.size(); ++j)
        if (are_isomorphic(G, catalog.members[j]->G)) {
          label = j;
          break;
        }
      if (label < 0)
        throw std::logic_error("oracle: regular subgroup matches no catalog member");
      out.by_class[label]++;
    }
  } catch (const BudgetExceeded&) {
    out.complete = false;
    out.by_class.clear();
  }
  return out;
}

} // namespace

OracleResult enumerate_braces_bruteforce(int order, const GroupCatalog& catalog,
                                         const OracleOptions& opts) {
  if (order != catalog.order)
    throw std::invalid_argument("enumerate_braces_bruteforce: order does not match catalog");
  int threads = opts.threads;
  if (threads <= 0) {
    const char* env = std::getenv("SKB_THREADS");
    threads = env ? std::max(1, atoi(env)) : 1;
  }
  auto deadline = std::chrono::steady_clock::time_point{};
  if (opts.budget_seconds > 0)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::milliseconds((long long)(opts.budget_seconds * 1000));

  int m = (int)catalog.members.size();
  std::vector<MemberCount> counts(m);
  if (threads <= 1) {
    for (int i = 0; i < m; ++i) counts[i] = enumerate_member(catalog, i, opts, deadline);
  } else {
    std::vector<std::future<MemberCount>> futs;
    futs.reserve(m);
    for (int i = 0; i < m; ++i)
      futs.push_back(std::async(std::launch::async, [&, i] {
        return enumerate_member(catalog, i, opts, deadline);
      }));
    for (int i = 0; i < m; ++i) counts[i] = futs[i].get();
  }

  OracleResult res;
  res.report.n = catalog.n;
  res.report.prime = PrimeSpec::prime(catalog.p);
  for (int i = 0; i < m; ++i) {
    if (!counts[i].complete) {
      res.complete = false;
      if (!res.note.empty()) res.note += ", ";
      res.note += catalog.members[i]->label.str();
      continue;
    }
    for (auto& [cls, cnt] : counts[i].by_class) {
      res.report.cells.push_back(
          CountCell{catalog.members[i]->label, catalog.members[cls]->label, cnt});
      res.report.total += cnt;
    }
  }
  if (!res.note.empty()) res.note = "budget exhausted on: " + res.note;
  std::sort(res.report.cells.begin(), res.report.cells.end(), [](const auto& a, const auto& b) {
    if (!(a.add == b.add)) return a.add < b.add;
    return a.mul < b.mul;
  });
  return res;
}

std::vector<CellDiff> compare_reports(const CountReport& a, const CountReport& b) {
  if (a.n != b.n) throw std::invalid_argument("compare_reports: different n");
  std::map<std::pair<StructureLabel, StructureLabel>, std::pair<long long, long long>> merged;
  for (const auto& c : a.cells) merged[{c.add, c.mul}].first += c.count;
  for (const auto& c : b.cells) merged[{c.add, c.mul}].second += c.count;
  std::vector<CellDiff> diffs;
  for (auto& [key, val] : merged)
    if (val.first != val.second)
      diffs.push_back(CellDiff{key.first, key.second, val.first, val.second});
  return diffs;
}

} // namespace skb
