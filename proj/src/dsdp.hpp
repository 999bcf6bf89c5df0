#pragma once

#include <memory>

#include "holomorph.hpp"

namespace skb {

// ---------------------------------------------------------------------------
// Automorphisms of a skew brace (preserve both operations).
// ---------------------------------------------------------------------------
struct BraceAutGroup {
  std::vector<Perm> maps;
  FiniteGroup structure; // composition group over map indices
  int size() const { return (int)maps.size(); }
};

BraceAutGroup brace_aut_group(const SkewBrace& A);

// ---------------------------------------------------------------------------
// Aut(Z_p x| E) in structured form.  Every automorphism acts as
//   (m, a) -> (k*m + gamma_i(a), lam(a)),  gamma_i(a) = i - sigma(a)*i,
// with k a unit mod p, i mod p indexing the coboundary, and lam an
// automorphism of E fixing sigma under precomposition.  For trivial sigma
// the coboundaries vanish and the group is Aut(Z_p) x Aut(E).
// ---------------------------------------------------------------------------
struct SemidirectAutGroup {
  struct Entry {
    int k = 1, i = 0, lam = 0;
  };
  int p = 0;
  Character sigma;
  std::vector<int> sigma_stab;           // autE indices lam with sigma.lam = sigma
  AutomorphismGroup aut;                 // over N = Z_p x| E
  std::vector<Entry> by_index;           // entry behind aut.maps[idx]

  int index_of(int k, int i, int lam) const; // -1 if absent
};

// Just the automorphism maps (and matching entries), cheap enough for
// brute-force comparison at every size we use.
struct SemidirectAutMaps {
  std::vector<Perm> maps;
  std::vector<SemidirectAutGroup::Entry> entries;
};
SemidirectAutMaps semidirect_aut_maps(int p, const Character& sigma, const FiniteGroup& E,
                                      const AutomorphismGroup& autE);

SemidirectAutGroup aut_of_semidirect(int p, const Character& sigma, const FiniteGroup& E,
                                     const AutomorphismGroup& autE);

// ---------------------------------------------------------------------------
// Double semidirect product of braces A and B along
//   sigma : (B, .) -> Aut(A),   tau : (B, o) -> Aut(A).
// ---------------------------------------------------------------------------
struct DsdpSpec {
  const SkewBrace* A = nullptr;
  const SkewBrace* B = nullptr;
  const BraceAutGroup* autA = nullptr;
  std::vector<int> sigma; // b -> autA index, homomorphism from (B, .)
  std::vector<int> tau;   // b -> autA index, homomorphism from (B, o)

  void validate() const; // checks both maps are homomorphisms
};

struct DsdpCheck {
  bool ok = true;
  int a = -1, b1 = -1, b2 = -1; // lexicographically first failing triple
};

// sigma(b1 o b2 . b1^-1) . lambda_a  =  lambda_a . tau(b1) sigma(b2) tau(b1bar)
// for every a in A and b1, b2 in B.
DsdpCheck check_dsdp_condition(const DsdpSpec& spec);

// Brace on A x B with (a,b).(a',b') = (a . sigma(b)(a'), b . b') and
// (a,b) o (a',b') = (a o tau(b)(a'), b o b'); idx = a*|B| + b.
SkewBrace double_semidirect(const DsdpSpec& spec);

// Character on the carrier of B (for either operation) as a morphism into
// the automorphisms of the trivial brace Z_p.
std::vector<int> character_as_zp_action(const Character& ch, int p, const BraceAutGroup& autZp);

// ---------------------------------------------------------------------------
// The regular-subgroup pair G(sigma, tau), G(sigma, tau)' in Hol(Z_p x| E).
// ---------------------------------------------------------------------------
struct GPairContext {
  int p = 0;
  FiniteGroup E;
  AutomorphismGroup autE;
  Character sigma;      // on E
  std::vector<int> sigma_units; // sigma evaluated in Z_p^*
  FiniteGroup N;        // Z_p x| E
  SemidirectAutGroup autN;
  HolGroup hol;         // over N and autN.aut
};

std::unique_ptr<GPairContext> make_gpair_context(int p, const FiniteGroup& E,
                                                 const Character& sigma);

struct GPair {
  RegularSubgroup G, Gprime;
};

// F is a regular subgroup of Hol(E) realizing the multiplicative structure;
// tau is a character on F.as_group() (elements in sorted hol-id order).
// Requires pi2(F) inside the stabilizer of sigma.
GPair build_G_pair(const GPairContext& ctx, const RegularSubgroup& F, const Character& tau);

} // namespace skb
