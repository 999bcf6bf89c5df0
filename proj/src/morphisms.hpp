#pragma once

#include <functional>

#include "group.hpp"

namespace skb {

// ---------------------------------------------------------------------------
// AutomorphismGroup: the full (or a closed sub-) collection of automorphisms
// of a base group, with its own composition table over automorphism indices.
// maps[0] is always the identity; structure.mul(i,j) indexes maps[i] o maps[j]
// with (f o g)(x) = f(g(x)).
// ---------------------------------------------------------------------------
struct AutomorphismGroup {
  int base_order = 0;
  std::vector<Perm> maps;
  FiniteGroup structure;

  int size() const { return (int)maps.size(); }
  int compose(int i, int j) const { return structure.mul(i, j); }
  int invert(int i) const { return structure.inv(i); }
  int index_of(const Perm& p) const; // -1 if absent
  Elt apply(int i, Elt x) const { return maps[i][x]; }
};

// Brute-force full automorphism group via generator-image backtracking.
AutomorphismGroup automorphism_group(const FiniteGroup& G);

// Wraps an explicitly given closed family of automorphisms (validated).
AutomorphismGroup automorphism_group_from_maps(const FiniteGroup& G, std::vector<Perm> maps);

// Index of the automorphism sending gen -> img for each listed pair
// (the pairs must pin down a unique automorphism); throws if absent.
int aut_index_by_images(const AutomorphismGroup& aut, const FiniteGroup& G,
                        const std::vector<std::pair<Elt, Elt>>& images);

// ---------------------------------------------------------------------------
// Characters: homomorphisms G -> C_m, stored as zeta_m-exponents per element.
// ---------------------------------------------------------------------------
struct Character {
  int source_order = 0;
  int modulus = 1;            // order m of the cyclic target
  std::vector<int> exponents; // exponents[x] in [0, m)

  bool is_trivial() const;
  int order() const; // order of the character in Hom(G, C_m)
  int kernel_size() const;
  std::vector<Elt> kernel_elements() const;

  bool operator==(const Character& o) const {
    return modulus == o.modulus && exponents == o.exponents;
  }
};

struct CharacterSpace {
  const FiniteGroup* source = nullptr;
  int modulus = 1;
  std::vector<Character> characters; // all of Hom(G, C_m), sorted lex by exponents

  int size() const { return (int)characters.size(); }
  int index_of(const std::vector<int>& exponents) const; // -1 if absent
  int trivial_index() const { return 0; }                // all-zero map sorts first
};

CharacterSpace homs_to_cyclic(const FiniteGroup& G, int m);

// sigma o f for an automorphism map f of the source.
Character precompose(const Character& sigma, const Perm& f);
int precompose_index(const CharacterSpace& space, int sigma, const Perm& f);

// Values of a character in Z_p^* via the smallest primitive root:
// x -> zeta_m^{exponents[x]} mod p.  Needs modulus | p-1.
std::vector<int> character_units(const Character& ch, int p);

// Z_p x| E acting through a character; pairs (m, a) with idx = m*|E| + a.
FiniteGroup semidirect_by_character(int p, const Character& sigma, const FiniteGroup& E,
                                    std::string name = "");

// ---------------------------------------------------------------------------
// Orbits under a right action of a finite acting set that forms a group.
// ---------------------------------------------------------------------------
struct ActionOrbits {
  std::vector<std::vector<int>> orbits;      // point indices, each sorted, ordered by min
  std::vector<std::vector<int>> stabilizers; // acting-element ids per orbit representative
  long long burnside_fix_sum = 0;            // sum over acting elements of #fixed points

  int orbit_count() const { return (int)orbits.size(); }
  int orbit_of(int point) const; // index into orbits
};

// Generic engine: points 0..n_points-1, acting elements listed by id, and
// apply(g, x) giving the action.  Verifies orbit-stabilizer and Burnside
// internally and throws on disagreement.
ActionOrbits orbits_under_action(int n_points, const std::vector<int>& acting_elems,
                                 const std::function<int(int, int)>& apply);

// Aut (or a subgroup of it, given by indices) acting on characters by
// precomposition.
ActionOrbits orbits_and_stabilizers(const CharacterSpace& points, const AutomorphismGroup& aut,
                                    const std::vector<int>& acting_indices);
ActionOrbits orbits_and_stabilizers(const CharacterSpace& points, const AutomorphismGroup& aut);

// Stabilizer of one character under the listed automorphisms.
std::vector<int> character_stabilizer(const CharacterSpace& points, int sigma,
                                      const AutomorphismGroup& aut,
                                      const std::vector<int>& acting_indices);

// All-automorphism index list 0..|aut|-1.
std::vector<int> all_indices(const AutomorphismGroup& aut);

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b);

} // namespace skb
