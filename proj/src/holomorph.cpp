#include "holomorph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace skb {

// ---------------------------------------------------------------------------
// HolGroup
// ---------------------------------------------------------------------------
int HolGroup::element_order(int x) const {
  int k = 1, y = x;
  while (y != identity()) {
    y = mul(y, x);
    ++k;
    if (k > order()) throw std::logic_error("hol element order runaway");
  }
  return k;
}

std::vector<int> HolGroup::generators() const {
  std::vector<int> gens;
  for (Elt g : minimal_generating_set(*N)) gens.push_back(make(g, 0));
  for (Elt f : minimal_generating_set(aut->structure)) gens.push_back(make(N->identity, f));
  return gens;
}

HolGroup holomorph(const FiniteGroup& N, const AutomorphismGroup& autN) {
  if (autN.base_order != N.order)
    throw std::invalid_argument("holomorph: automorphism group does not match N");
  return HolGroup{&N, &autN};
}

std::vector<int> hol_closure(const HolGroup& hol, const std::vector<int>& gens) {
  std::unordered_set<int> in;
  std::vector<int> elems;
  auto add = [&](int x) {
    if (in.insert(x).second) elems.push_back(x);
  };
  add(hol.identity());
  for (int g : gens) add(g);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      add(hol.mul(elems[i], elems[j]));
      add(hol.mul(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

int hol_conjugate(const HolGroup& hol, int g, int x) { return hol.conj(g, x); }

std::vector<int> hol_conjugate_set(const HolGroup& hol, int g, const std::vector<int>& xs) {
  std::vector<int> out;
  out.reserve(xs.size());
  int gi = hol.inv(g);
  for (int x : xs) out.push_back(hol.mul(hol.mul(g, x), gi));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// RegularSubgroup
// ---------------------------------------------------------------------------
bool RegularSubgroup::contains(int h) const {
  return std::binary_search(elements.begin(), elements.end(), h);
}

bool RegularSubgroup::is_regular() const {
  if ((int)elements.size() != hol->N->order) return false;
  std::vector<char> hit(hol->N->order, 0);
  for (int h : elements) {
    Elt n = hol->proj1(h);
    if (hit[n]) return false;
    hit[n] = 1;
  }
  return true;
}

std::vector<int> RegularSubgroup::pi2_subgroup() const {
  std::vector<int> out;
  for (int h : elements) out.push_back(hol->proj2(h));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> RegularSubgroup::pi1_to_aut() const {
  std::vector<int> f(hol->N->order, -1);
  for (int h : elements) {
    Elt n = hol->proj1(h);
    if (f[n] >= 0) throw std::invalid_argument("subgroup is not regular: pi1 not injective");
    f[n] = hol->proj2(h);
  }
  for (int v : f)
    if (v < 0) throw std::invalid_argument("subgroup is not regular: pi1 not onto");
  return f;
}

FiniteGroup RegularSubgroup::as_group(std::string name) const {
  int n = (int)elements.size();
  std::unordered_map<int, int> pos;
  pos.reserve(n * 2);
  for (int i = 0; i < n; ++i) pos[elements[i]] = i;
  std::vector<Elt> t((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = pos.find(hol->mul(elements[i], elements[j]));
      if (it == pos.end()) throw std::invalid_argument("as_group: element set is not closed");
      t[(size_t)i * n + j] = it->second;
    }
  if (name.empty()) name = "reg" + std::to_string(n);
  return group_from_table(n, std::move(t), std::move(name));
}

std::optional<int> conjugating_element(const HolGroup& hol, const RegularSubgroup& A,
                                       const RegularSubgroup& B) {
  if (A.elements.size() != B.elements.size()) return std::nullopt;
  std::unordered_set<int> bset(B.elements.begin(), B.elements.end());
  // conjugating generators into B suffices: |gAg^-1| = |B| forces equality
  std::vector<int> gens;
  {
    std::vector<int> cur = {hol.identity()};
    std::unordered_set<int> in(cur.begin(), cur.end());
    for (int h : A.elements) {
      if (in.count(h)) continue;
      gens.push_back(h);
      // closure
      std::vector<int> elems(in.begin(), in.end());
      elems.push_back(h);
      in.insert(h);
      for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j)
          for (int p : {hol.mul(elems[i], elems[j]), hol.mul(elems[j], elems[i])})
            if (in.insert(p).second) elems.push_back(p);
      if (elems.size() == A.elements.size()) break;
    }
  }
  for (int g = 0; g < hol.order(); ++g) {
    int gi = hol.inv(g);
    bool ok = true;
    for (int h : gens)
      if (!bset.count(hol.mul(hol.mul(g, h), gi))) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------
namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using SetKey = std::pair<uint64_t, uint64_t>;

struct SetKeyHash {
  size_t operator()(const SetKey& k) const { return k.first ^ (k.second * 0x9e3779b97f4a7c15ULL); }
};

SetKey hash_sorted_set(const std::vector<int>& v) {
  uint64_t h1 = 0x243f6a8885a308d3ULL, h2 = 0x13198a2e03707344ULL;
  for (int x : v) {
    h1 = splitmix64(h1 ^ (uint64_t)(x + 1));
    h2 = splitmix64(h2 + 0x0123456789abcdefULL + (uint64_t)x);
  }
  return {h1, h2};
}

struct SearchContext {
  const HolGroup& hol;
  int target;                  // |N|
  std::vector<char> forbidden; // nontrivial point-stabilizer elements
  std::vector<char> eligible;  // order divides |N| and <g> avoids the stabilizer
  std::vector<int> mark;       // closure scratch
  int epoch = 0;
  std::vector<long long> coset_mark; // per-extend redundancy marks
  long long coset_id = 0;
  std::unordered_set<SetKey, SetKeyHash> visited;       // intermediate subgroups
  std::unordered_set<SetKey, SetKeyHash> class_members; // conjugates of found regulars
  std::vector<std::vector<int>> reps;
  std::vector<int> hol_gens;
  std::chrono::steady_clock::time_point deadline{};
  long long step_counter = 0;

  explicit SearchContext(const HolGroup& h) : hol(h), target(h.N->order) {
    forbidden.assign(h.order(), 0);
    for (int f = 1; f < h.aut->size(); ++f) forbidden[h.make(h.N->identity, f)] = 1;
    mark.assign(h.order(), 0);
    coset_mark.assign(h.order(), -1);
    hol_gens = h.generators();
    // an element of a regular subgroup has order dividing |N| and generates
    // a stab-free cyclic group
    eligible.assign(h.order(), 0);
    for (int x = 0; x < h.order(); ++x) {
      if (forbidden[x]) continue;
      bool ok = true;
      int k = 1, y = x;
      while (y != h.identity()) {
        if (forbidden[y]) {
          ok = false;
          break;
        }
        y = h.mul(y, x);
        ++k;
      }
      eligible[x] = ok && target % k == 0;
    }
  }

  void tick() {
    if (deadline.time_since_epoch().count() != 0 && (++step_counter & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > deadline)
      throw BudgetExceeded("regular subgroup search exceeded its time budget");
  }

  // closure of a single seed set (used for anchors)
  std::vector<int> bounded_closure(const std::vector<int>& seeds) {
    ++epoch;
    std::vector<int> elems;
    auto add = [&](int x) -> bool {
      if (mark[x] == epoch) return true;
      if (forbidden[x] || (int)elems.size() >= target) return false;
      mark[x] = epoch;
      elems.push_back(x);
      return true;
    };
    add(hol.identity());
    for (int s : seeds)
      if (!add(s)) return {};
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = 0; j <= i; ++j) {
        tick();
        if (!add(hol.mul(elems[i], elems[j]))) return {};
        if (!add(hol.mul(elems[j], elems[i]))) return {};
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  // closure of S (already closed) extended by g; only products touching new
  // elements need processing
  std::vector<int> extend_closure(const std::vector<int>& S, int g) {
    ++epoch;
    std::vector<int> elems = S;
    for (int x : S) mark[x] = epoch;
    auto add = [&](int x) -> bool {
      if (mark[x] == epoch) return true;
      if (forbidden[x] || (int)elems.size() >= target) return false;
      mark[x] = epoch;
      elems.push_back(x);
      return true;
    };
    size_t base = elems.size();
    if (!add(g)) return {};
    for (size_t i = base; i < elems.size(); ++i)
      for (size_t j = 0; j < elems.size(); ++j) {
        tick();
        if (!add(hol.mul(elems[i], elems[j]))) return {};
        if (!add(hol.mul(elems[j], elems[i]))) return {};
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  void record_regular(const std::vector<int>& H) {
    SetKey key = hash_sorted_set(H);
    if (class_members.count(key)) return;
    // new conjugacy class: walk the whole conjugation orbit
    reps.push_back(H);
    std::deque<std::vector<int>> queue;
    queue.push_back(H);
    class_members.insert(key);
    while (!queue.empty()) {
      std::vector<int> cur = std::move(queue.front());
      queue.pop_front();
      for (int g : hol_gens) {
        tick();
        std::vector<int> img = hol_conjugate_set(hol, g, cur);
        SetKey k2 = hash_sorted_set(img);
        if (class_members.insert(k2).second) queue.push_back(std::move(img));
      }
    }
  }

  void extend(const std::vector<int>& S, const std::vector<int>& pool) {
    long long my_id = ++coset_id;
    for (int g : pool) {
      if (coset_mark[g] == my_id) continue;
      if (mark_contains(S, g)) continue;
      // <S, s g> = <S, g s> = <S, g^-1 s> = ... = <S, g>: skip the variants
      int gi = hol.inv(g);
      for (int s : S) {
        coset_mark[hol.mul(s, g)] = my_id;
        coset_mark[hol.mul(g, s)] = my_id;
        coset_mark[hol.mul(s, gi)] = my_id;
        coset_mark[hol.mul(gi, s)] = my_id;
      }
      std::vector<int> H = extend_closure(S, g);
      if (H.empty()) continue;
      if (target % (int)H.size() != 0) continue;
      if ((int)H.size() == target) {
        record_regular(H);
        continue;
      }
      if (visited.insert(hash_sorted_set(H)).second) extend(H, pool);
    }
  }

  static bool mark_contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  }
};

} // namespace

std::vector<RegularSubgroup> find_regular_classes(const HolGroup& hol,
                                                  const RegularSearchOptions& opts) {
  int n = hol.N->order;
  SearchContext ctx(hol);
  ctx.deadline = opts.deadline;

  int q = opts.anchor_prime;
  if (q == 0)
    for (int d = 2; d <= n; ++d)
      if (n % d == 0 && is_prime(d)) q = d;
  if (n == 1) {
    RegularSubgroup whole{&hol, {hol.identity()}};
    return {whole};
  }
  if (q <= 1 || n % q != 0)
    throw std::invalid_argument("find_regular_classes: bad anchor prime");

  // Anchor cyclic subgroups of order q.  Every regular subgroup contains an
  // order-q element (Cauchy) and hence one of these as a subgroup.
  std::vector<std::vector<int>> anchors;
  std::unordered_set<SetKey, SetKeyHash> seen_anchor;
  for (int h = 0; h < hol.order(); ++h) {
    if (!ctx.eligible[h] || h == hol.identity()) continue;
    if (hol.element_order(h) != q) continue;
    std::vector<int> P = ctx.bounded_closure({h});
    if (P.empty()) continue;
    if (seen_anchor.insert(hash_sorted_set(P)).second) anchors.push_back(std::move(P));
  }

  std::vector<int> full_pool;
  if (!opts.normalizer_mode) {
    for (int h = 0; h < hol.order(); ++h)
      if (ctx.eligible[h]) full_pool.push_back(h);
  }

  for (const auto& P : anchors) {
    if ((int)P.size() == n) {
      ctx.record_regular(P);
      continue;
    }
    if (ctx.visited.count(hash_sorted_set(P))) continue;
    ctx.visited.insert(hash_sorted_set(P));
    if (opts.normalizer_mode) {
      // P is the unique Sylow of any regular subgroup containing it, so the
      // rest of that subgroup normalizes P
      std::vector<int> pool;
      std::unordered_set<int> pset(P.begin(), P.end());
      for (int g = 0; g < hol.order(); ++g) {
        if (!ctx.eligible[g]) continue;
        ctx.tick();
        int gi = hol.inv(g);
        bool ok = true;
        for (int h : P)
          if (h != hol.identity() && !pset.count(hol.mul(hol.mul(g, h), gi))) {
            ok = false;
            break;
          }
        if (ok) pool.push_back(g);
      }
      ctx.extend(P, pool);
    } else {
      ctx.extend(P, full_pool);
    }
  }

  std::sort(ctx.reps.begin(), ctx.reps.end());
  std::vector<RegularSubgroup> out;
  for (auto& r : ctx.reps) out.push_back(RegularSubgroup{&hol, std::move(r)});
  return out;
}

std::vector<RegularClass> regular_subgroup_classes(const FiniteGroup& N,
                                                   const AutomorphismGroup& autN,
                                                   const HolGroup& hol,
                                                   const std::vector<FiniteGroup>& catalog) {
  std::vector<RegularClass> out;
  for (RegularSubgroup& rep : find_regular_classes(hol)) {
    RegularClass cls;
    cls.rep = std::move(rep);
    FiniteGroup G = cls.rep.as_group();
    cls.catalog_index = iso_label_index(G, catalog);
    if (cls.catalog_index < 0)
      throw std::logic_error("regular subgroup of Hol(" + N.name +
                             ") matches nothing in the given catalog");
    cls.label = catalog[cls.catalog_index].name;
    out.push_back(std::move(cls));
  }
  return out;
}

// ---------------------------------------------------------------------------
// braces
// ---------------------------------------------------------------------------
SkewBrace trivial_brace(const FiniteGroup& G) {
  SkewBrace B;
  B.add = G;
  B.mul = G;
  Perm id(G.order);
  std::iota(id.begin(), id.end(), 0);
  B.lambda.assign(G.order, id);
  return B;
}

SkewBrace brace_from_regular(const FiniteGroup& N, const RegularSubgroup& G) {
  if (G.hol->N->order != N.order) throw std::invalid_argument("brace_from_regular: group mismatch");
  if (!G.is_regular()) throw std::invalid_argument("brace_from_regular: subgroup is not regular");
  std::vector<int> f = G.pi1_to_aut();
  const AutomorphismGroup& aut = *G.hol->aut;
  SkewBrace B;
  B.add = N;
  std::vector<Elt> t((size_t)N.order * N.order);
  B.lambda.resize(N.order);
  for (Elt a = 0; a < N.order; ++a) {
    const Perm& la = aut.maps[f[a]];
    B.lambda[a] = la;
    for (Elt b = 0; b < N.order; ++b) t[(size_t)a * N.order + b] = N.mul(a, la[b]);
  }
  B.mul = group_from_table(N.order, std::move(t), N.name + ".circle");
  return B;
}

BraceCheck verify_brace(const SkewBrace& B) {
  BraceCheck r;
  int n = B.size();
  auto fail = [&](std::string what, int a, int b, int c) {
    r.ok = false;
    r.what = std::move(what);
    r.witness = {a, b, c};
    return r;
  };
  if (B.mul.order != n || (int)B.lambda.size() != n) return fail("shape mismatch", -1, -1, -1);
  // both tables must be groups
  for (const FiniteGroup* G : {&B.add, &B.mul}) {
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b)
        for (Elt c = 0; c < n; ++c)
          if (G->mul(G->mul(a, b), c) != G->mul(a, G->mul(b, c)))
            return fail(G == &B.add ? "additive associativity" : "multiplicative associativity",
                        a, b, c);
    for (Elt a = 0; a < n; ++a)
      if (G->mul(G->identity, a) != a || G->mul(a, G->identity) != a ||
          G->mul(a, G->inv(a)) != G->identity)
        return fail("identity/inverse axiom", a, -1, -1);
  }
  // brace relation a o (b . c) = (a o b) . a^-1 . (a o c)
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      for (Elt c = 0; c < n; ++c) {
        Elt lhs = B.mul.mul(a, B.add.mul(b, c));
        Elt rhs = B.add.mul(B.add.mul(B.mul.mul(a, b), B.add.inv(a)), B.mul.mul(a, c));
        if (lhs != rhs) return fail("brace relation", a, b, c);
      }
  // lambda consistency: a o b = a . lambda_a(b), and each lambda_a in Aut(add)
  for (Elt a = 0; a < n; ++a) {
    for (Elt b = 0; b < n; ++b) {
      if (B.mul.mul(a, b) != B.add.mul(a, B.lambda[a][b])) return fail("lambda mismatch", a, b, -1);
      for (Elt c = 0; c < n; ++c)
        if (B.lambda[a][B.add.mul(b, c)] != B.add.mul(B.lambda[a][b], B.lambda[a][c]))
          return fail("lambda not additive automorphism", a, b, c);
    }
  }
  return r;
}

RegularSubgroup lambda_graph(const SkewBrace& B, const HolGroup& hol_add) {
  RegularSubgroup G;
  G.hol = &hol_add;
  for (Elt a = 0; a < B.size(); ++a) {
    int f = hol_add.aut->index_of(B.lambda[a]);
    if (f < 0) throw std::logic_error("lambda_graph: lambda map missing from Aut(add)");
    G.elements.push_back(hol_add.make(a, f));
  }
  std::sort(G.elements.begin(), G.elements.end());
  return G;
}

Subgroup brace_automorphisms(const AutomorphismGroup& autE, const RegularSubgroup& F) {
  const HolGroup& hol = *F.hol;
  if (hol.aut != &autE)
    throw std::invalid_argument("brace_automorphisms: F does not live in Hol over this Aut");
  Subgroup out{&autE.structure, {}};
  for (int g = 0; g < autE.size(); ++g) {
    bool keeps = true;
    for (int h : F.elements)
      if (!F.contains(hol.phi(g, h))) {
        keeps = false;
        break;
      }
    if (keeps) out.elements.push_back(g);
  }
  return out;
}

std::vector<int> brace_characters(const SkewBrace& B, const RegularSubgroup& F,
                                  const CharacterSpace& space) {
  const HolGroup& hol = *F.hol;
  std::vector<int> pi2 = F.pi2_subgroup();
  std::vector<int> by_stabilizer;
  for (int s = 0; s < space.size(); ++s) {
    bool ok = true;
    for (int f : pi2)
      if (precompose_index(space, s, hol.aut->maps[f]) != s) {
        ok = false;
        break;
      }
    if (ok) by_stabilizer.push_back(s);
  }
  // independent route: sigma must be a homomorphism for the circle operation too
  std::vector<int> by_circle;
  int m = space.modulus;
  for (int s = 0; s < space.size(); ++s) {
    const Character& ch = space.characters[s];
    bool ok = true;
    for (Elt a = 0; a < B.size() && ok; ++a)
      for (Elt b = 0; b < B.size() && ok; ++b)
        if (ch.exponents[B.mul.mul(a, b)] != (ch.exponents[a] + ch.exponents[b]) % m) ok = false;
    if (ok) by_circle.push_back(s);
  }
  if (by_stabilizer != by_circle)
    throw std::logic_error("brace character criteria disagree (stabilizer vs circle)");
  return by_stabilizer;
}

std::vector<Elt> brace_canonical_key(const SkewBrace& B, const AutomorphismGroup& autAdd) {
  int n = B.size();
  std::vector<Elt> best;
  for (const Perm& g : autAdd.maps) {
    Perm gi(n);
    for (Elt x = 0; x < n; ++x) gi[g[x]] = x;
    std::vector<Elt> t((size_t)n * n);
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b) t[(size_t)g[a] * n + g[b]] = g[B.mul.mul(a, b)];
    if (best.empty() || t < best) best = std::move(t);
  }
  return best;
}

} // namespace skb
