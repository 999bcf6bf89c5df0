#pragma once

#include <memory>

#include "holomorph.hpp"

namespace skb {

// ---------------------------------------------------------------------------
// Prime specification: a concrete prime, or a residue class mod 12 (the
// counts for size-12n braces only depend on p through gcd(12, p-1)).
// ---------------------------------------------------------------------------
enum class PrimeMode { Residue, Concrete };

struct PrimeSpec {
  PrimeMode mode = PrimeMode::Residue;
  int value = 1; // residue r in {1,5,7,11}, or the prime p

  static PrimeSpec residue(int r);
  static PrimeSpec prime(int p);

  int unit_group_capacity() const;            // gcd(12, p-1)
  int modulus_for(int group_exponent) const;  // gcd(exp, p-1)
  std::string str() const;
};

enum class HypothesisResult { holds_by_sylow, unknown };

// holds_by_sylow when 1 is the only divisor of n congruent to 1 mod p, which
// forces a normal Sylow p-subgroup in every group of order np.  The
// condition is sufficient, not necessary, so the other answer is "unknown".
HypothesisResult hypothesis_check(int n, int p);

// ---------------------------------------------------------------------------
// Structure labels: Z_p x E (direct) or Z_p x|_k E, with a kernel-class tag
// when two character orbits share a kernel size.
// ---------------------------------------------------------------------------
struct StructureLabel {
  int group_index = 0;
  std::string group;
  int base_order = 0;
  int kernel = 0;
  char tag = 0;

  bool is_direct() const { return kernel == base_order; }
  std::string str() const;
  bool operator==(const StructureLabel& o) const {
    return group_index == o.group_index && kernel == o.kernel && tag == o.tag;
  }
  bool operator<(const StructureLabel& o) const {
    if (group_index != o.group_index) return group_index < o.group_index;
    if (kernel != o.kernel) return kernel > o.kernel; // descending kernel size
    return tag < o.tag;
  }
};

// Kernel-size/tag assignment for the orbits of Aut(G) on a character space.
struct LabelScheme {
  ActionOrbits orbits;                             // full Aut-orbits
  std::vector<std::pair<int, char>> orbit_labels;  // per orbit: (kernel, tag)

  std::pair<int, char> label_of_char(int char_index) const;
};

LabelScheme make_label_scheme(const FiniteGroup& G, const AutomorphismGroup& autG,
                              const CharacterSpace& S);

StructureLabel label_structures(int group_index, const std::string& group_name, int base_order,
                                const LabelScheme& scheme, int char_index);

// ---------------------------------------------------------------------------
// Step 0: the brace catalog of size n (one entry per additive group,
// one class per conjugacy class of regular subgroups of its holomorph).
// ---------------------------------------------------------------------------
struct BraceEntry {
  int add_index = 0;
  FiniteGroup E;
  AutomorphismGroup autE;
  HolGroup hol; // points at E and autE above; BraceEntry is heap-pinned
  struct ClassInfo {
    std::vector<int> elements;
    int mul_index = 0;
  };
  std::vector<ClassInfo> classes;

  RegularSubgroup realization(int cls) const { return {&hol, classes[cls].elements}; }
};

struct BraceCatalog {
  int n = 0;
  std::vector<std::string> group_names;
  std::vector<std::unique_ptr<BraceEntry>> entries;

  int total_braces() const;
  // class counts as a |groups| x |groups| matrix (add x mul)
  std::vector<std::vector<int>> type_matrix() const;
};

BraceCatalog build_brace_catalog(int n);

// ---------------------------------------------------------------------------
// Counting report
// ---------------------------------------------------------------------------
struct CountCell {
  StructureLabel add, mul;
  long long count = 0;
};

struct SigmaOrbitLine {
  std::pair<int, char> add_label;           // (|Ker sigma|, tag)
  int orbit_size = 0;
  int a_sigma_order = 0;                    // |Aut(B) meet Stab(sigma)|
  bool trivial_sigma = false;
  std::vector<std::pair<std::pair<int, char>, int>> tau_orbit_counts; // (mul label) -> #orbits
};

struct PerBraceReport {
  int add_index = 0, mul_index = 0;
  int class_index = 0; // position within the entry's class list
  int aut_b_order = 0;
  std::vector<SigmaOrbitLine> lines;
};

struct CountReport {
  int n = 0;
  PrimeSpec prime;
  std::vector<CountCell> cells; // sorted by (add, mul), zero cells omitted
  std::vector<PerBraceReport> per_brace;
  long long total = 0;

  long long cell(const StructureLabel& add, const StructureLabel& mul) const;
  // aggregated per (add group, mul group) matrix
  std::vector<std::vector<long long>> group_matrix(int n_groups) const;
};

// Steps 1-4 for every brace in the catalog.  Throws unless the unique-Sylow
// hypothesis is established (Sylow criterion for concrete primes; classes
// mod 12 with p >= 7 are accepted as such) or overridden by the caller.
CountReport count_np(const BraceCatalog& catalog, const PrimeSpec& prime,
                     bool override_hypothesis = false);

// Closed Burnside forms for (number of additive structures, total braces);
// both the stabilizer-sum and fixed-point forms are evaluated, must agree,
// and must match count_np's direct enumeration.
std::pair<long long, long long> burnside_totals(const BraceCatalog& catalog,
                                                const PrimeSpec& prime,
                                                bool override_hypothesis = false);

} // namespace skb
