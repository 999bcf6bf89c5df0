#include "counting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace skb {

// ---------------------------------------------------------------------------
// PrimeSpec
// ---------------------------------------------------------------------------
PrimeSpec PrimeSpec::residue(int r) {
  if (r != 1 && r != 5 && r != 7 && r != 11)
    throw std::invalid_argument("PrimeSpec: residue class must be one of 1, 5, 7, 11 (mod 12)");
  return PrimeSpec{PrimeMode::Residue, r};
}

PrimeSpec PrimeSpec::prime(int p) {
  if (!is_prime(p) || p < 5)
    throw std::invalid_argument("PrimeSpec: need a concrete prime p >= 5");
  return PrimeSpec{PrimeMode::Concrete, p};
}

int PrimeSpec::unit_group_capacity() const {
  if (mode == PrimeMode::Concrete) return (int)gcd_ll(12, value - 1);
  switch (value) {
    case 1: return 12;
    case 5: return 4;
    case 7: return 6;
    default: return 2; // 11
  }
}

int PrimeSpec::modulus_for(int group_exponent) const {
  if (mode == PrimeMode::Concrete) return (int)gcd_ll(group_exponent, value - 1);
  if (12 % group_exponent != 0)
    throw std::invalid_argument("residue-class mode covers exponents dividing 12 only");
  return (int)gcd_ll(group_exponent, unit_group_capacity());
}

std::string PrimeSpec::str() const {
  return mode == PrimeMode::Concrete ? "p=" + std::to_string(value)
                                     : "p=" + std::to_string(value) + " (mod 12)";
}

HypothesisResult hypothesis_check(int n, int p) {
  if (!is_prime(p)) throw std::invalid_argument("hypothesis_check: p must be prime");
  if (n % p == 0) throw std::invalid_argument("hypothesis_check: p divides n");
  for (int d : divisors(n))
    if (d != 1 && d % p == 1) return HypothesisResult::unknown;
  return HypothesisResult::holds_by_sylow;
}

// ---------------------------------------------------------------------------
// labels
// ---------------------------------------------------------------------------
std::string StructureLabel::str() const {
  if (is_direct()) return "Zp x " + group;
  std::string s = "Zp:" + std::to_string(kernel);
  if (tag) s += tag;
  return s + " " + group;
}

std::pair<int, char> LabelScheme::label_of_char(int char_index) const {
  int orbit = orbits.orbit_of(char_index);
  if (orbit < 0) throw std::invalid_argument("label_of_char: character outside the space");
  return orbit_labels[orbit];
}

LabelScheme make_label_scheme(const FiniteGroup& G, const AutomorphismGroup& autG,
                              const CharacterSpace& S) {
  LabelScheme scheme;
  scheme.orbits = orbits_and_stabilizers(S, autG);
  int n_orbits = scheme.orbits.orbit_count();
  scheme.orbit_labels.assign(n_orbits, {0, 0});
  std::map<int, std::vector<int>> by_kernel; // kernel size -> orbit ids
  for (int i = 0; i < n_orbits; ++i) {
    int k = S.characters[scheme.orbits.orbits[i][0]].kernel_size();
    scheme.orbit_labels[i].first = k;
    by_kernel[k].push_back(i);
  }
  for (auto& [k, ids] : by_kernel) {
    if (ids.size() == 1) continue;
    // disambiguate by the isomorphism class of the kernel, cyclic class first
    std::vector<FiniteGroup> kernels;
    for (int id : ids) {
      Subgroup K{&G, S.characters[scheme.orbits.orbits[id][0]].kernel_elements()};
      kernels.push_back(subgroup_as_group(K));
    }
    for (size_t a = 0; a < ids.size(); ++a)
      for (size_t b = a + 1; b < ids.size(); ++b)
        if (are_isomorphic(kernels[a], kernels[b]))
          throw std::logic_error("label scheme: two orbits share kernel size and class");
    std::vector<size_t> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      bool ca = are_isomorphic(kernels[a], cyclic_group(k)).has_value();
      bool cb = are_isomorphic(kernels[b], cyclic_group(k)).has_value();
      if (ca != cb) return ca; // cyclic kernel gets 'c'
      return ids[a] < ids[b];
    });
    char tag = 'c';
    for (size_t pos : order) scheme.orbit_labels[ids[pos]].second = tag++;
  }
  return scheme;
}

StructureLabel label_structures(int group_index, const std::string& group_name, int base_order,
                                const LabelScheme& scheme, int char_index) {
  auto [k, tag] = scheme.label_of_char(char_index);
  return StructureLabel{group_index, group_name, base_order, k, tag};
}

// ---------------------------------------------------------------------------
// brace catalog
// ---------------------------------------------------------------------------
int BraceCatalog::total_braces() const {
  int t = 0;
  for (const auto& e : entries) t += (int)e->classes.size();
  return t;
}

std::vector<std::vector<int>> BraceCatalog::type_matrix() const {
  std::vector<std::vector<int>> m(group_names.size(), std::vector<int>(group_names.size(), 0));
  for (const auto& e : entries)
    for (const auto& cls : e->classes) m[e->add_index][cls.mul_index]++;
  return m;
}

BraceCatalog build_brace_catalog(int n) {
  BraceCatalog cat;
  cat.n = n;
  std::vector<FiniteGroup> groups = small_group_catalog(n);
  for (const auto& G : groups) cat.group_names.push_back(G.name);
  for (int gi = 0; gi < (int)groups.size(); ++gi) {
    auto entry = std::make_unique<BraceEntry>();
    entry->add_index = gi;
    entry->E = groups[gi];
    entry->autE = automorphism_group(entry->E);
    entry->hol = HolGroup{&entry->E, &entry->autE};
    for (RegularSubgroup& rep : find_regular_classes(entry->hol)) {
      BraceEntry::ClassInfo info;
      info.elements = std::move(rep.elements);
      RegularSubgroup F{&entry->hol, info.elements};
      int label = iso_label_index(F.as_group(), groups);
      if (label < 0) throw std::logic_error("brace catalog: unrecognized multiplicative group");
      info.mul_index = label;
      entry->classes.push_back(std::move(info));
    }
    cat.entries.push_back(std::move(entry));
  }
  return cat;
}

// ---------------------------------------------------------------------------
// the counting pipeline
// ---------------------------------------------------------------------------
namespace {

void hypothesis_gate(int n, const PrimeSpec& prime, bool override_hypothesis) {
  if (prime.mode == PrimeMode::Residue) {
    if (12 % n != 0)
      throw std::invalid_argument("residue-class mode is defined for n dividing 12");
    // classwide: every group of order np with n | 12 and p >= 7 has a normal
    // subgroup of order p (Sylow forces it except for 132 = 12*11, where the
    // absence of a degree-12 Frobenius complement of order 11 does)
    return;
  }
  int p = prime.value;
  if (n % p == 0) throw std::invalid_argument("count_np: p divides n");
  if (hypothesis_check(n, p) == HypothesisResult::unknown && !override_hypothesis)
    throw std::invalid_argument("count_np: unique-Sylow hypothesis not established for n=" +
                                std::to_string(n) + ", p=" + std::to_string(p) +
                                "; pass the override to proceed");
}

// Steps 1-4 data for one brace of the catalog.
struct BracePipeline {
  const BraceEntry& entry;
  RegularSubgroup F;
  SkewBrace B;
  CharacterSpace SE;
  LabelScheme add_scheme;
  std::vector<int> homB;   // step 1: sigma candidates (sorted char indices)
  Subgroup autB;           // step 2
  ActionOrbits sigma_orbits; // step 3, points are positions in homB
  FiniteGroup Fg;
  AutomorphismGroup autFg;
  CharacterSpace SF;
  LabelScheme mul_scheme;

  BracePipeline(const BraceEntry& e, int cls, const PrimeSpec& prime)
      : entry(e), F(e.realization(cls)), B(brace_from_regular(e.E, F)) {
    SE = homs_to_cyclic(e.E, prime.modulus_for(e.E.exponent()));
    add_scheme = make_label_scheme(e.E, e.autE, SE);
    homB = brace_characters(B, F, SE);
    autB = brace_automorphisms(e.autE, F);
    sigma_orbits = orbits_under_action((int)homB.size(), autB.elements, [&](int g, int pos) {
      int img = precompose_index(SE, homB[pos], e.autE.maps[g]);
      auto it = std::lower_bound(homB.begin(), homB.end(), img);
      if (it == homB.end() || *it != img)
        throw std::logic_error("Aut(B) action left Hom(B, Zp*)");
      return (int)(it - homB.begin());
    });
    Fg = F.as_group(e.E.name + ".F");
    autFg = automorphism_group(Fg);
    SF = homs_to_cyclic(Fg, prime.modulus_for(Fg.exponent()));
    mul_scheme = make_label_scheme(Fg, autFg, SF);
  }

  // permutation of F positions induced by Phi_g (g must preserve F)
  Perm phi_perm(int g) const {
    const HolGroup& hol = entry.hol;
    Perm perm(F.elements.size());
    for (size_t i = 0; i < F.elements.size(); ++i) {
      int img = hol.phi(g, F.elements[i]);
      auto it = std::lower_bound(F.elements.begin(), F.elements.end(), img);
      if (it == F.elements.end() || *it != img)
        throw std::logic_error("phi_perm: automorphism does not preserve F");
      perm[i] = (int)(it - F.elements.begin());
    }
    return perm;
  }

  std::vector<int> a_sigma(int sigma_char) const {
    std::vector<int> stab =
        character_stabilizer(SE, sigma_char, entry.autE, all_indices(entry.autE));
    return intersect_sorted(autB.elements, stab);
  }

  ActionOrbits tau_orbits(const std::vector<int>& acting) const {
    std::vector<Perm> perms;
    std::map<int, int> perm_of; // acting index -> position in perms
    for (int g : acting) {
      perm_of[g] = (int)perms.size();
      perms.push_back(phi_perm(g));
    }
    return orbits_under_action(SF.size(), acting, [&](int g, int t) {
      return precompose_index(SF, t, perms[perm_of[g]]);
    });
  }
};

} // namespace

long long CountReport::cell(const StructureLabel& add, const StructureLabel& mul) const {
  for (const auto& c : cells)
    if (c.add == add && c.mul == mul) return c.count;
  return 0;
}

std::vector<std::vector<long long>> CountReport::group_matrix(int n_groups) const {
  std::vector<std::vector<long long>> m(n_groups, std::vector<long long>(n_groups, 0));
  for (const auto& c : cells) m[c.add.group_index][c.mul.group_index] += c.count;
  return m;
}

CountReport count_np(const BraceCatalog& catalog, const PrimeSpec& prime,
                     bool override_hypothesis) {
  hypothesis_gate(catalog.n, prime, override_hypothesis);
  CountReport report;
  report.n = catalog.n;
  report.prime = prime;
  std::map<std::pair<StructureLabel, StructureLabel>, long long> cells;

  for (const auto& entry : catalog.entries) {
    for (int ci = 0; ci < (int)entry->classes.size(); ++ci) {
      BracePipeline pipe(*entry, ci, prime);
      PerBraceReport pb;
      pb.add_index = entry->add_index;
      pb.mul_index = entry->classes[ci].mul_index;
      pb.class_index = ci;
      pb.aut_b_order = pipe.autB.order();
      const std::string& add_name = catalog.group_names[entry->add_index];
      const std::string& mul_name = catalog.group_names[pb.mul_index];

      for (int oi = 0; oi < pipe.sigma_orbits.orbit_count(); ++oi) {
        int rep_char = pipe.homB[pipe.sigma_orbits.orbits[oi][0]];
        bool trivial = pipe.SE.characters[rep_char].is_trivial();
        StructureLabel add_label = label_structures(entry->add_index, add_name,
                                                    entry->E.order, pipe.add_scheme, rep_char);
        std::vector<int> As = pipe.a_sigma(rep_char);
        ActionOrbits tos = pipe.tau_orbits(As);

        SigmaOrbitLine line;
        line.add_label = {add_label.kernel, add_label.tag};
        line.orbit_size = (int)pipe.sigma_orbits.orbits[oi].size();
        line.a_sigma_order = (int)As.size();
        line.trivial_sigma = trivial;
        std::map<std::pair<int, char>, int> tau_counts;
        for (int ti = 0; ti < tos.orbit_count(); ++ti) {
          int tau_rep = tos.orbits[ti][0];
          StructureLabel mul_label = label_structures(pb.mul_index, mul_name, pipe.Fg.order,
                                                      pipe.mul_scheme, tau_rep);
          cells[{add_label, mul_label}] += trivial ? 1 : 2;
          tau_counts[{mul_label.kernel, mul_label.tag}]++;
        }
        line.tau_orbit_counts.assign(tau_counts.begin(), tau_counts.end());
        pb.lines.push_back(std::move(line));
      }
      report.per_brace.push_back(std::move(pb));
    }
  }

  for (auto& [key, count] : cells) {
    report.cells.push_back(CountCell{key.first, key.second, count});
    report.total += count;
  }
  return report;
}

std::pair<long long, long long> burnside_totals(const BraceCatalog& catalog,
                                                const PrimeSpec& prime,
                                                bool override_hypothesis) {
  hypothesis_gate(catalog.n, prime, override_hypothesis);
  long long additive_stab = 0, additive_fix = 0;
  long long total_stab = 0, total_fix = 0;

  for (const auto& entry : catalog.entries) {
    for (int ci = 0; ci < (int)entry->classes.size(); ++ci) {
      BracePipeline pipe(*entry, ci, prime);
      long long nAutB = pipe.autB.order();

      // number of additive structures: orbits of Aut(B) on Hom(B, Zp*)
      long long stab_sum = 0;
      for (int pos = 0; pos < (int)pipe.homB.size(); ++pos) {
        for (int g : pipe.autB.elements)
          if (precompose_index(pipe.SE, pipe.homB[pos], pipe.entry.autE.maps[g]) ==
              pipe.homB[pos])
            ++stab_sum;
      }
      long long fix_sum = 0;
      for (int g : pipe.autB.elements)
        for (int pos = 0; pos < (int)pipe.homB.size(); ++pos)
          if (precompose_index(pipe.SE, pipe.homB[pos], pipe.entry.autE.maps[g]) ==
              pipe.homB[pos])
            ++fix_sum;
      if (stab_sum % nAutB || fix_sum % nAutB)
        throw std::logic_error("burnside_totals: additive sum not divisible by |Aut(B)|");
      additive_stab += stab_sum / nAutB;
      additive_fix += fix_sum / nAutB;

      // total braces: tau orbits under A_sigma, doubled away from sigma = 1
      auto tau_sums = [&](const std::vector<int>& As) {
        std::vector<Perm> perms;
        for (int g : As) perms.push_back(pipe.phi_perm(g));
        long long s_stab = 0, s_fix = 0;
        for (int t = 0; t < pipe.SF.size(); ++t)
          for (const Perm& pm : perms)
            if (precompose_index(pipe.SF, t, pm) == t) ++s_stab;
        for (const Perm& pm : perms)
          for (int t = 0; t < pipe.SF.size(); ++t)
            if (precompose_index(pipe.SF, t, pm) == t) ++s_fix;
        if (s_stab % (long long)As.size() || s_fix % (long long)As.size())
          throw std::logic_error("burnside_totals: tau sum not divisible by |A_sigma|");
        return std::pair<long long, long long>{s_stab / (long long)As.size(),
                                               s_fix / (long long)As.size()};
      };

      for (int oi = 0; oi < pipe.sigma_orbits.orbit_count(); ++oi) {
        int rep_char = pipe.homB[pipe.sigma_orbits.orbits[oi][0]];
        bool trivial = pipe.SE.characters[rep_char].is_trivial();
        auto [s_stab, s_fix] = tau_sums(pipe.a_sigma(rep_char));
        total_stab += (trivial ? 1 : 2) * s_stab;
        total_fix += (trivial ? 1 : 2) * s_fix;
      }
    }
  }

  if (additive_stab != additive_fix || total_stab != total_fix)
    throw std::logic_error("burnside_totals: stabilizer-sum and fixed-point forms disagree");
  CountReport direct = count_np(catalog, prime, override_hypothesis);
  if (direct.total != total_stab)
    throw std::logic_error("burnside_totals: closed form disagrees with direct enumeration");
  long long direct_additive = 0;
  for (const auto& pb : direct.per_brace) direct_additive += (long long)pb.lines.size();
  if (direct_additive != additive_stab)
    throw std::logic_error("burnside_totals: additive closed form disagrees with enumeration");
  return {additive_stab, total_stab};
}

} // namespace skb
