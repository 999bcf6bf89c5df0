#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skb {

using Elt = int;
using Perm = std::vector<Elt>; // dense map 0..n-1 -> 0..n-1

// ---------------------------------------------------------------------------
// small number-theory helpers
// ---------------------------------------------------------------------------
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
bool is_prime(int n);
int mod_pow(long long base, long long exp, int mod);
int mod_inv(int a, int mod);       // mod prime
int primitive_root(int p);         // smallest primitive root mod prime p
std::vector<int> divisors(int n);  // ascending

// ---------------------------------------------------------------------------
// FiniteGroup: a group on elements 0..order-1 with a materialized Cayley
// table (row * column, row-major).  Groups at this scale (order <= ~1024)
// are always materialized; larger objects such as holomorphs are handled
// by HolGroup with pair arithmetic instead.
// ---------------------------------------------------------------------------
struct FiniteGroup {
  int order = 0;
  std::vector<Elt> table; // order*order entries, table[a*order+b] = a*b
  Elt identity = 0;
  std::vector<Elt> inverses;
  std::string name;
  std::vector<std::pair<std::string, Elt>> generator_hints;

  Elt mul(Elt a, Elt b) const { return table[(size_t)a * order + b]; }
  Elt inv(Elt a) const { return inverses[a]; }
  Elt pow(Elt a, long long k) const;
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); } // g x g^-1

  int element_order(Elt a) const;
  int exponent() const;
  bool is_abelian() const;
  int center_size() const;
  std::map<int, int> order_census() const; // element order -> count

  Elt hint(const std::string& gen_name) const; // throws if not present

  // Exhaustive identity/inverse/associativity check; throws on failure.
  void check() const;
};

// Builds a group from a table, filling identity/inverses and validating.
FiniteGroup group_from_table(int order, std::vector<Elt> table, std::string name);

// ---------------------------------------------------------------------------
// Presets and constructions
// ---------------------------------------------------------------------------
FiniteGroup cyclic_group(int n);                                  // hint "c" (n >= 2)
FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&); // idx = i*|H| + j
FiniteGroup c6xc2();              // hints a (order 6), b (order 2)
FiniteGroup symmetric_group(int n); // n <= 6; permutations in lex order
FiniteGroup alternating4();       // hints rho = (0 1 2), mu = (0 1)(2 3)
FiniteGroup dihedral_group(int m); // order 2m, hints r, s
FiniteGroup dicyclic12();         // hints x (order 3), y (order 4)

// Semidirect product K x| Q.  action[q] is an automorphism of K; the family
// must satisfy action[q1 q2] = action[q1] . action[q2].  Elements are pairs
// (k, q) with idx = k*|Q| + q and (k,q)(k',q') = (k . action[q](k'), q q').
FiniteGroup semidirect_product(const FiniteGroup& kernel, const FiniteGroup& quotient,
                               const std::vector<Perm>& action, std::string name = "");

// Textual group spec: C<n>, Cn(<n>), C<a>xC<b>, A4, D12, Dic12, S3,
// sd(C<p>, <spec>, sigma=<d>:<e1>[:<e2>...]) where the e_i are the
// zeta_d-exponents of sigma on the quoted group's generator hints.
struct GroupSpec {
  std::string text;
};
FiniteGroup make_group(const GroupSpec& spec);
FiniteGroup make_group(const std::string& spec);

// The five groups of order 12, in display order C12, C6xC2, A4, D12, Dic12;
// for other n dividing 12, the full list of groups of that order.
std::vector<FiniteGroup> small_group_catalog(int n);

// ---------------------------------------------------------------------------
// Subgroups and morphisms
// ---------------------------------------------------------------------------
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elt> elements; // sorted, contains identity

  int order() const { return (int)elements.size(); }
  bool contains(Elt x) const;
  bool contains_all(const std::vector<Elt>& xs) const;
};

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<Elt>& gens);
std::vector<Elt> closure(const FiniteGroup& G, std::vector<Elt> gens); // sorted
bool is_subgroup(const FiniteGroup& G, const std::vector<Elt>& sorted_elems);
bool is_normal(const FiniteGroup& G, const Subgroup& H);

// Extracts a Subgroup as a standalone FiniteGroup; new element i corresponds
// to sub.elements[i].
FiniteGroup subgroup_as_group(const Subgroup& sub, std::string name = "");

// Quotient G/K for normal K; proj maps parent elements to coset indices.
struct QuotientResult {
  FiniteGroup quotient;
  std::vector<Elt> proj;
};
QuotientResult quotient_group(const FiniteGroup& G, const Subgroup& K);

std::vector<Elt> derived_subgroup(const FiniteGroup& G); // sorted commutator closure

struct GroupMorphism {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<Elt> map;

  Elt operator()(Elt x) const { return map[x]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
};

// Builds the homomorphism determined by generator images, if one exists.
// images = {(source elt, target elt)}; the sources must generate G.
std::optional<std::vector<Elt>> hom_from_gen_images(
    const FiniteGroup& G, const FiniteGroup& H,
    const std::vector<std::pair<Elt, Elt>>& images);

// Small generating set, greedy over descending element order.
std::vector<Elt> minimal_generating_set(const FiniteGroup& G);

// Backtracking isomorphism search with order/abelian/census/center
// fast-rejects. Returns an isomorphism if one exists.
std::optional<GroupMorphism> are_isomorphic(const FiniteGroup& G, const FiniteGroup& H);

// All isomorphisms G -> H as maps (empty if none). all_automorphisms(G) is
// the |Aut(G)|-element special case.
std::vector<Perm> all_isomorphisms(const FiniteGroup& G, const FiniteGroup& H);
std::vector<Perm> all_automorphisms(const FiniteGroup& G);

// Index of G in a catalog of pairwise non-isomorphic groups, or -1.
int iso_label_index(const FiniteGroup& G, const std::vector<FiniteGroup>& catalog);

} // namespace skb
