#pragma once

#include <chrono>
#include <optional>

#include "morphisms.hpp"

namespace skb {

// ---------------------------------------------------------------------------
// Hol(N) = N x| Aut(N), kept lazy: elements are pairs (n, f) encoded as
// n * |Aut| + f and products are computed on demand.  Only N's table and the
// automorphism composition table are materialized, so |Hol| can reach ~10^5.
// ---------------------------------------------------------------------------
struct HolGroup {
  const FiniteGroup* N = nullptr;
  const AutomorphismGroup* aut = nullptr;

  int order() const { return N->order * aut->size(); }
  int make(Elt n, int f) const { return n * aut->size() + f; }
  Elt proj1(int h) const { return h / aut->size(); }
  int proj2(int h) const { return h % aut->size(); }
  int identity() const { return make(N->identity, 0); }

  // [u, Mu][v, Mv] = [u . Mu(v), Mu Mv]
  int mul(int x, int y) const {
    int fx = x % aut->size(), fy = y % aut->size();
    Elt u = x / aut->size(), v = y / aut->size();
    return make(N->mul(u, aut->maps[fx][v]), aut->compose(fx, fy));
  }
  int inv(int x) const {
    int f = x % aut->size(), fi = aut->invert(f);
    Elt u = x / aut->size();
    return make(aut->maps[fi][N->inv(u)], fi);
  }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1
  int element_order(int x) const;

  bool in_point_stabilizer(int h) const { return proj1(h) == N->identity; }

  // Phi_g(n, f) = (g(n), g f g^-1) for an automorphism index g.
  int phi(int g, int h) const {
    int f = proj2(h);
    return make(aut->maps[g][proj1(h)], aut->compose(aut->compose(g, f), aut->invert(g)));
  }

  std::vector<int> generators() const;
};

HolGroup holomorph(const FiniteGroup& N, const AutomorphismGroup& autN);

// closure of {gens} under the hol product (sorted)
std::vector<int> hol_closure(const HolGroup& hol, const std::vector<int>& gens);

int hol_conjugate(const HolGroup& hol, int g, int x); // g x g^-1
std::vector<int> hol_conjugate_set(const HolGroup& hol, int g, const std::vector<int>& xs);

// ---------------------------------------------------------------------------
// Regular subgroups: order |N| and first projection bijective onto N.
// ---------------------------------------------------------------------------
struct RegularSubgroup {
  const HolGroup* hol = nullptr;
  std::vector<int> elements; // sorted hol ids

  int order() const { return (int)elements.size(); }
  bool contains(int h) const;
  bool is_regular() const;
  std::vector<int> pi2_subgroup() const;      // sorted aut indices (the image of pi2)
  std::vector<int> pi1_to_aut() const;        // n -> aut index f with (n, f) in the subgroup
  FiniteGroup as_group(std::string name = "") const;
};

// Exhaustive conjugacy test; returns a conjugating hol element if one exists.
std::optional<int> conjugating_element(const HolGroup& hol, const RegularSubgroup& A,
                                       const RegularSubgroup& B);

// ---------------------------------------------------------------------------
// Regular subgroup search.  The search anchors on cyclic subgroups of prime
// order q (every regular subgroup contains one, by Cauchy) and grows
// stab-free subgroups whose order divides |N|; found subgroups are
// deduplicated by walking their full conjugation orbit under Hol(N).
// In normalizer mode (valid when the unique-Sylow hypothesis holds for
// |N| = n*q) extensions stay inside the normalizer of the anchor.
// ---------------------------------------------------------------------------
struct RegularSearchOptions {
  int anchor_prime = 0;        // 0 = largest prime divisor of |N|
  bool normalizer_mode = false;
  std::chrono::steady_clock::time_point deadline{}; // zero = none
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<RegularSubgroup> find_regular_classes(const HolGroup& hol,
                                                  const RegularSearchOptions& opts = {});

// One representative per conjugacy class, labeled against a catalog of
// pairwise non-isomorphic groups of order |N|.
struct RegularClass {
  RegularSubgroup rep;
  int catalog_index = -1;
  std::string label;
};
std::vector<RegularClass> regular_subgroup_classes(const FiniteGroup& N,
                                                   const AutomorphismGroup& autN,
                                                   const HolGroup& hol,
                                                   const std::vector<FiniteGroup>& catalog);

// ---------------------------------------------------------------------------
// Skew braces
// ---------------------------------------------------------------------------
struct SkewBrace {
  FiniteGroup add;
  FiniteGroup mul;
  std::vector<Perm> lambda; // lambda[a](b) = a^-1 . (a o b)

  int size() const { return add.order; }
};

SkewBrace trivial_brace(const FiniteGroup& G);
SkewBrace brace_from_regular(const FiniteGroup& N, const RegularSubgroup& G);

struct BraceCheck {
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};
  std::string what;
};
BraceCheck verify_brace(const SkewBrace& B);

// {(a, lambda_a)} as a regular subgroup of Hol(add); the GV image of B.
RegularSubgroup lambda_graph(const SkewBrace& B, const HolGroup& hol_add);

// Automorphisms of E preserving the realization F setwise under Phi.
Subgroup brace_automorphisms(const AutomorphismGroup& autE, const RegularSubgroup& F);

// Indices of the sigma in space with pi2(F) inside the stabilizer of sigma;
// cross-checked against "sigma is a homomorphism for the circle operation
// of B as well" (the two characterizations must agree).
std::vector<int> brace_characters(const SkewBrace& B, const RegularSubgroup& F,
                                  const CharacterSpace& space);

// Lexicographically minimal relabeled circle table over Aut(add); a stable
// identity key for braces sharing an additive group.
std::vector<Elt> brace_canonical_key(const SkewBrace& B, const AutomorphismGroup& autAdd);

} // namespace skb
