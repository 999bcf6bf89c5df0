#include "group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

namespace skb {

// ---------------------------------------------------------------------------
// number theory
// ---------------------------------------------------------------------------
long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_ll(a, b) * b;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; (long long)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int mod_pow(long long base, long long exp, int mod) {
  base %= mod;
  if (base < 0) base += mod;
  long long r = 1 % mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return (int)r;
}

int mod_inv(int a, int mod) { return mod_pow(a, mod - 2, mod); }

int primitive_root(int p) {
  if (!is_prime(p)) throw std::invalid_argument("primitive_root: not a prime");
  if (p == 2) return 1;
  std::vector<int> prime_factors;
  int m = p - 1;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : prime_factors)
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: search failed");
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------
// FiniteGroup basics
// ---------------------------------------------------------------------------
Elt FiniteGroup::pow(Elt a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elt r = identity;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(Elt a) const {
  int k = 1;
  Elt x = a;
  while (x != identity) {
    x = mul(x, a);
    ++k;
    if (k > order) throw std::logic_error("element_order: table is not a group");
  }
  return k;
}

int FiniteGroup::exponent() const {
  long long e = 1;
  for (Elt a = 0; a < order; ++a) e = lcm_ll(e, element_order(a));
  return (int)e;
}

bool FiniteGroup::is_abelian() const {
  for (Elt a = 0; a < order; ++a)
    for (Elt b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::center_size() const {
  int c = 0;
  for (Elt a = 0; a < order; ++a) {
    bool central = true;
    for (Elt b = 0; b < order && central; ++b)
      if (mul(a, b) != mul(b, a)) central = false;
    if (central) ++c;
  }
  return c;
}

std::map<int, int> FiniteGroup::order_census() const {
  std::map<int, int> census;
  for (Elt a = 0; a < order; ++a) census[element_order(a)]++;
  return census;
}

Elt FiniteGroup::hint(const std::string& gen_name) const {
  for (auto& [n, e] : generator_hints)
    if (n == gen_name) return e;
  throw std::invalid_argument("group " + name + " has no generator hint '" + gen_name + "'");
}

void FiniteGroup::check() const {
  if (order <= 0 || (int)table.size() != order * order)
    throw std::logic_error("group table has wrong shape");
  for (Elt x = 0; x < order; ++x)
    if (mul(identity, x) != x || mul(x, identity) != x)
      throw std::logic_error("identity axiom fails in " + name);
  for (Elt x = 0; x < order; ++x)
    if (mul(x, inverses[x]) != identity || mul(inverses[x], x) != identity)
      throw std::logic_error("inverse axiom fails in " + name);
  for (Elt a = 0; a < order; ++a)
    for (Elt b = 0; b < order; ++b)
      for (Elt c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::logic_error("associativity fails in " + name);
}

FiniteGroup group_from_table(int order, std::vector<Elt> table, std::string name) {
  FiniteGroup G;
  G.order = order;
  G.table = std::move(table);
  G.name = std::move(name);
  if ((int)G.table.size() != order * order)
    throw std::invalid_argument("group_from_table: bad table size for " + G.name);
  // locate identity
  int id = -1;
  for (Elt e = 0; e < order; ++e) {
    bool ok = true;
    for (Elt x = 0; x < order && ok; ++x)
      if (G.table[(size_t)e * order + x] != x || G.table[(size_t)x * order + e] != x) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw std::invalid_argument("group_from_table: no identity in " + G.name);
  G.identity = id;
  G.inverses.assign(order, -1);
  for (Elt x = 0; x < order; ++x) {
    for (Elt y = 0; y < order; ++y)
      if (G.mul(x, y) == id && G.mul(y, x) == id) {
        G.inverses[x] = y;
        break;
      }
    if (G.inverses[x] < 0)
      throw std::invalid_argument("group_from_table: missing inverse in " + G.name);
  }
  if (order <= 256) G.check();
  return G;
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------
FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<Elt> t((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[(size_t)a * n + b] = (a + b) % n;
  FiniteGroup G = group_from_table(n, std::move(t), "C" + std::to_string(n));
  if (n >= 2) G.generator_hints = {{"c", 1}};
  return G;
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  int n = A.order * B.order;
  std::vector<Elt> t((size_t)n * n);
  auto idx = [&](Elt a, Elt b) { return a * B.order + b; };
  for (Elt a1 = 0; a1 < A.order; ++a1)
    for (Elt b1 = 0; b1 < B.order; ++b1)
      for (Elt a2 = 0; a2 < A.order; ++a2)
        for (Elt b2 = 0; b2 < B.order; ++b2)
          t[(size_t)idx(a1, b1) * n + idx(a2, b2)] = idx(A.mul(a1, a2), B.mul(b1, b2));
  return group_from_table(n, std::move(t), A.name + "x" + B.name);
}

FiniteGroup c6xc2() {
  FiniteGroup G = direct_product(cyclic_group(6), cyclic_group(2));
  G.name = "C6xC2";
  G.generator_hints = {{"a", 2 /* (1,0) */}, {"b", 1 /* (0,1) */}};
  return G;
}

namespace {

std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool perm_is_even(const Perm& p) {
  int inv_count = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv_count;
  return inv_count % 2 == 0;
}

FiniteGroup group_from_perms(std::vector<Perm> perms, std::string name) {
  int n = (int)perms.size();
  std::map<Perm, int> idx;
  for (int i = 0; i < n; ++i) idx[perms[i]] = i;
  std::vector<Elt> t((size_t)n * n);
  int deg = (int)perms[0].size();
  Perm prod(deg);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < deg; ++x) prod[x] = perms[a][perms[b][x]];
      t[(size_t)a * n + b] = idx.at(prod);
    }
  FiniteGroup G = group_from_table(n, std::move(t), std::move(name));
  return G;
}

} // namespace

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric_group: 1 <= n <= 6");
  return group_from_perms(all_perms(n), "S" + std::to_string(n));
}

FiniteGroup alternating4() {
  std::vector<Perm> perms;
  for (auto& p : all_perms(4))
    if (perm_is_even(p)) perms.push_back(p);
  FiniteGroup G = group_from_perms(std::move(perms), "A4");
  // rho = (0 1 2), mu = (0 1)(2 3) in cycle notation on points 0..3
  Perm rho = {1, 2, 0, 3}, mu = {1, 0, 3, 2};
  std::vector<Perm> even;
  for (auto& p : all_perms(4))
    if (perm_is_even(p)) even.push_back(p);
  auto find = [&](const Perm& p) {
    for (int i = 0; i < (int)even.size(); ++i)
      if (even[i] == p) return i;
    throw std::logic_error("alternating4: generator not found");
  };
  G.generator_hints = {{"rho", find(rho)}, {"mu", find(mu)}};
  return G;
}

FiniteGroup dihedral_group(int m) {
  if (m < 1) throw std::invalid_argument("dihedral_group: m >= 1");
  int n = 2 * m;
  auto idx = [&](int i, int j) { return i * 2 + j; }; // r^i s^j
  std::vector<Elt> t((size_t)n * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii = ((j == 0 ? i + k : i - k) % m + m) % m;
          t[(size_t)idx(i, j) * n + idx(k, l)] = idx(ii, (j + l) % 2);
        }
  FiniteGroup G = group_from_table(n, std::move(t), "D" + std::to_string(n));
  G.generator_hints = {{"r", idx(1, 0)}, {"s", idx(0, 1)}};
  return G;
}

FiniteGroup dicyclic12() {
  // <x,y | x^3 = 1, y^4 = 1, y x y^-1 = x^2>, elements x^i y^j, idx = i*4 + j
  int n = 12;
  auto idx = [&](int i, int j) { return i * 4 + j; };
  int pow2[4] = {1, 2, 1, 2}; // 2^j mod 3
  std::vector<Elt> t((size_t)n * n);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 4; ++l)
          t[(size_t)idx(i, j) * n + idx(k, l)] = idx((i + k * pow2[j]) % 3, (j + l) % 4);
  FiniteGroup G = group_from_table(n, std::move(t), "Dic12");
  G.generator_hints = {{"x", idx(1, 0)}, {"y", idx(0, 1)}};
  return G;
}

FiniteGroup semidirect_product(const FiniteGroup& K, const FiniteGroup& Q,
                               const std::vector<Perm>& action, std::string name) {
  if ((int)action.size() != Q.order)
    throw std::invalid_argument("semidirect_product: need one automorphism per quotient element");
  for (const Perm& f : action) {
    if ((int)f.size() != K.order)
      throw std::invalid_argument("semidirect_product: action degree mismatch");
    for (Elt a = 0; a < K.order; ++a)
      for (Elt b = 0; b < K.order; ++b)
        if (f[K.mul(a, b)] != K.mul(f[a], f[b]))
          throw std::invalid_argument("semidirect_product: action value is not an automorphism");
  }
  for (Elt q1 = 0; q1 < Q.order; ++q1)
    for (Elt q2 = 0; q2 < Q.order; ++q2) {
      const Perm &f1 = action[q1], &f2 = action[q2], &f12 = action[Q.mul(q1, q2)];
      for (Elt a = 0; a < K.order; ++a)
        if (f12[a] != f1[f2[a]])
          throw std::invalid_argument("semidirect_product: action is not a homomorphism");
    }
  int n = K.order * Q.order;
  auto idx = [&](Elt k, Elt q) { return k * Q.order + q; };
  std::vector<Elt> t((size_t)n * n);
  for (Elt k1 = 0; k1 < K.order; ++k1)
    for (Elt q1 = 0; q1 < Q.order; ++q1)
      for (Elt k2 = 0; k2 < K.order; ++k2)
        for (Elt q2 = 0; q2 < Q.order; ++q2)
          t[(size_t)idx(k1, q1) * n + idx(k2, q2)] =
              idx(K.mul(k1, action[q1][k2]), Q.mul(q1, q2));
  if (name.empty()) name = K.name + ":" + Q.name;
  return group_from_table(n, std::move(t), std::move(name));
}

// ---------------------------------------------------------------------------
// subgroups
// ---------------------------------------------------------------------------
bool Subgroup::contains(Elt x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool Subgroup::contains_all(const std::vector<Elt>& xs) const {
  for (Elt x : xs)
    if (!contains(x)) return false;
  return true;
}

std::vector<Elt> closure(const FiniteGroup& G, std::vector<Elt> gens) {
  std::vector<char> in(G.order, 0);
  std::vector<Elt> elems;
  auto add = [&](Elt x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(G.identity);
  for (Elt g : gens) {
    if (g < 0 || g >= G.order) throw std::out_of_range("closure: element index out of range");
    add(g);
  }
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      add(G.mul(elems[i], elems[j]));
      add(G.mul(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<Elt>& gens) {
  return Subgroup{&G, closure(G, gens)};
}

bool is_subgroup(const FiniteGroup& G, const std::vector<Elt>& sorted_elems) {
  if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), G.identity)) return false;
  for (Elt a : sorted_elems)
    for (Elt b : sorted_elems)
      if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), G.mul(a, b)))
        return false;
  return true;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (Elt g = 0; g < G.order; ++g)
    for (Elt h : H.elements)
      if (!H.contains(G.conj(g, h))) return false;
  return true;
}

FiniteGroup subgroup_as_group(const Subgroup& sub, std::string name) {
  const FiniteGroup& G = *sub.parent;
  int n = sub.order();
  std::vector<int> pos(G.order, -1);
  for (int i = 0; i < n; ++i) pos[sub.elements[i]] = i;
  std::vector<Elt> t((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt p = G.mul(sub.elements[i], sub.elements[j]);
      if (pos[p] < 0) throw std::invalid_argument("subgroup_as_group: set is not closed");
      t[(size_t)i * n + j] = pos[p];
    }
  if (name.empty()) name = "sub" + std::to_string(n) + "(" + G.name + ")";
  return group_from_table(n, std::move(t), std::move(name));
}

QuotientResult quotient_group(const FiniteGroup& G, const Subgroup& K) {
  if (!is_normal(G, K)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  std::vector<Elt> coset_min(G.order, -1);
  for (Elt x = 0; x < G.order; ++x) {
    Elt m = x;
    for (Elt k : K.elements) m = std::min(m, G.mul(x, k));
    coset_min[x] = m;
  }
  std::vector<Elt> reps;
  std::vector<int> idx(G.order, -1);
  for (Elt x = 0; x < G.order; ++x)
    if (coset_min[x] == x) {
      idx[x] = (int)reps.size();
      reps.push_back(x);
    }
  int n = (int)reps.size();
  std::vector<Elt> t((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[(size_t)i * n + j] = idx[coset_min[G.mul(reps[i], reps[j])]];
  QuotientResult out{group_from_table(n, std::move(t), G.name + "/K"), {}};
  out.proj.resize(G.order);
  for (Elt x = 0; x < G.order; ++x) out.proj[x] = idx[coset_min[x]];
  return out;
}

std::vector<Elt> derived_subgroup(const FiniteGroup& G) {
  std::vector<Elt> comms;
  for (Elt a = 0; a < G.order; ++a)
    for (Elt b = 0; b < G.order; ++b)
      comms.push_back(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure(G, comms);
}

// ---------------------------------------------------------------------------
// morphisms
// ---------------------------------------------------------------------------
bool GroupMorphism::is_homomorphism() const {
  if ((int)map.size() != source->order) return false;
  for (Elt x : map)
    if (x < 0 || x >= target->order) return false;
  for (Elt a = 0; a < source->order; ++a)
    for (Elt b = 0; b < source->order; ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) return false;
  return map[source->identity] == target->identity;
}

bool GroupMorphism::is_bijective() const {
  std::vector<char> seen(target->order, 0);
  for (Elt x : map) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return source->order == target->order;
}

namespace {

// Extends a partial map (img[x] = -1 when unknown) to the subgroup generated
// by its defined elements; returns false on any conflict with the group laws.
bool close_partial_hom(const FiniteGroup& G, const FiniteGroup& H, std::vector<Elt>& img) {
  std::vector<Elt> defined;
  for (Elt x = 0; x < G.order; ++x)
    if (img[x] >= 0) defined.push_back(x);
  size_t head = 0;
  // process pairs (new, old) and (old, new) so each product is seen once
  std::vector<Elt> work = defined;
  while (head < work.size()) {
    Elt q = work[head++];
    size_t snapshot = 0;
    for (snapshot = 0; snapshot < work.size(); ++snapshot) {
      Elt d = work[snapshot];
      for (auto [a, b] : {std::pair<Elt, Elt>{q, d}, std::pair<Elt, Elt>{d, q}}) {
        Elt c = G.mul(a, b);
        Elt ic = H.mul(img[a], img[b]);
        if (img[c] < 0) {
          img[c] = ic;
          work.push_back(c);
        } else if (img[c] != ic) {
          return false;
        }
      }
    }
  }
  return true;
}

struct IsoSearch {
  const FiniteGroup& G;
  const FiniteGroup& H;
  std::vector<Elt> gens;                       // generating sequence of G
  std::vector<std::vector<Elt>> candidates;    // per generator, same-order elements of H
  std::vector<Perm> results;
  bool stop_at_first = false;
  bool found = false;

  void run(size_t depth, std::vector<Elt> img) {
    if (found && stop_at_first) return;
    if (depth == gens.size()) {
      // generators exhausted: img is total iff gens generate G (they do)
      for (Elt x : img)
        if (x < 0) return;
      std::vector<char> seen(H.order, 0);
      for (Elt x : img) {
        if (seen[x]) return;
        seen[x] = 1;
      }
      results.push_back(img);
      found = true;
      return;
    }
    Elt g = gens[depth];
    if (img[g] >= 0) { // already forced by closure
      run(depth + 1, std::move(img));
      return;
    }
    for (Elt h : candidates[depth]) {
      std::vector<Elt> next = img;
      next[g] = h;
      if (close_partial_hom(G, H, next)) run(depth + 1, std::move(next));
      if (found && stop_at_first) return;
    }
  }
};

std::vector<Perm> isomorphisms_impl(const FiniteGroup& G, const FiniteGroup& H,
                                    bool stop_at_first) {
  if (G.order != H.order) return {};
  IsoSearch s{G, H, minimal_generating_set(G), {}, {}, stop_at_first, false};
  for (Elt g : s.gens) {
    int og = G.element_order(g);
    std::vector<Elt> cand;
    for (Elt h = 0; h < H.order; ++h)
      if (H.element_order(h) == og) cand.push_back(h);
    if (cand.empty()) return {};
    s.candidates.push_back(std::move(cand));
  }
  std::vector<Elt> img(G.order, -1);
  img[G.identity] = H.identity;
  s.run(0, std::move(img));
  return std::move(s.results);
}

} // namespace

std::optional<std::vector<Elt>> hom_from_gen_images(
    const FiniteGroup& G, const FiniteGroup& H,
    const std::vector<std::pair<Elt, Elt>>& images) {
  std::vector<Elt> img(G.order, -1);
  img[G.identity] = H.identity;
  std::vector<Elt> gens;
  for (auto [g, h] : images) {
    if (img[g] >= 0 && img[g] != h) return std::nullopt;
    img[g] = h;
    gens.push_back(g);
  }
  if (!close_partial_hom(G, H, img)) return std::nullopt;
  if (closure(G, gens).size() != (size_t)G.order) return std::nullopt; // not generating
  return img;
}

std::vector<Elt> minimal_generating_set(const FiniteGroup& G) {
  std::vector<Elt> by_order(G.order);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elt a, Elt b) {
    return G.element_order(a) > G.element_order(b);
  });
  std::vector<Elt> gens;
  std::vector<Elt> cur = {G.identity};
  for (Elt c : by_order) {
    if (std::binary_search(cur.begin(), cur.end(), c)) continue;
    gens.push_back(c);
    cur = closure(G, gens);
    if ((int)cur.size() == G.order) break;
  }
  return gens;
}

std::optional<GroupMorphism> are_isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.order != H.order) return std::nullopt;
  if (G.is_abelian() != H.is_abelian()) return std::nullopt;
  if (G.order_census() != H.order_census()) return std::nullopt;
  if (G.center_size() != H.center_size()) return std::nullopt;
  auto found = isomorphisms_impl(G, H, true);
  if (found.empty()) return std::nullopt;
  return GroupMorphism{&G, &H, std::move(found.front())};
}

std::vector<Perm> all_isomorphisms(const FiniteGroup& G, const FiniteGroup& H) {
  return isomorphisms_impl(G, H, false);
}

std::vector<Perm> all_automorphisms(const FiniteGroup& G) {
  return isomorphisms_impl(G, G, false);
}

int iso_label_index(const FiniteGroup& G, const std::vector<FiniteGroup>& catalog) {
  for (int i = 0; i < (int)catalog.size(); ++i)
    if (are_isomorphic(G, catalog[i])) return i;
  return -1;
}

// ---------------------------------------------------------------------------
// spec parsing
// ---------------------------------------------------------------------------
namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

// splits "a,b,c" at top level (ignoring commas inside parentheses)
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!strip(cur).empty()) out.push_back(strip(cur));
  return out;
}

FiniteGroup parse_sd(const std::string& body);

FiniteGroup parse_spec(const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty()) throw std::invalid_argument("empty group spec");
  if (s == "A4") return alternating4();
  if (s == "D12") return dihedral_group(6);
  if (s == "S3" || s == "D6") {
    FiniteGroup G = dihedral_group(3);
    G.name = "S3";
    return G;
  }
  if (s == "Dic12") return dicyclic12();
  if (s == "C6xC2") return c6xc2();
  if (s.rfind("sd(", 0) == 0 && s.back() == ')') return parse_sd(s.substr(3, s.size() - 4));
  if (s.rfind("Cn(", 0) == 0 && s.back() == ')')
    return cyclic_group(std::stoi(s.substr(3, s.size() - 4)));
  // C<a>xC<b>
  auto xpos = s.find("xC");
  if (s[0] == 'C' && xpos != std::string::npos) {
    int a = std::stoi(s.substr(1, xpos - 1));
    int b = std::stoi(s.substr(xpos + 2));
    FiniteGroup G = direct_product(cyclic_group(a), cyclic_group(b));
    G.generator_hints = {{"a", 1 * cyclic_group(b).order /* (1,0) */}, {"b", 1}};
    return G;
  }
  if (s[0] == 'C') return cyclic_group(std::stoi(s.substr(1)));
  throw std::invalid_argument("unrecognized group spec: " + raw);
}

// sd(C<p>, <E spec>, sigma=<d>:<e1>[:<e2>...]) -- Z_p x| E with the action of
// E on Z_p by the order-d character with the given exponents on E's hints.
FiniteGroup parse_sd(const std::string& body) {
  auto args = split_args(body);
  if (args.size() != 3 || args[0].empty() || args[0][0] != 'C' ||
      args[2].rfind("sigma=", 0) != 0)
    throw std::invalid_argument("sd() wants sd(Cp, E, sigma=d:e1[:e2...])");
  int p = std::stoi(args[0].substr(1));
  if (!is_prime(p)) throw std::invalid_argument("sd(): kernel order must be prime");
  FiniteGroup E = parse_spec(args[1]);
  std::string sig = args[2].substr(6);
  std::vector<int> parts;
  std::stringstream ss(sig);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(std::stoi(tok));
  if (parts.empty()) throw std::invalid_argument("sd(): empty sigma");
  int d = parts[0];
  if (d < 1 || (p - 1) % d != 0)
    throw std::invalid_argument("sd(): character order must divide p-1");
  if (parts.size() - 1 != E.generator_hints.size())
    throw std::invalid_argument("sd(): need one exponent per generator hint of " + E.name);
  // build the multiplicative character values zeta_d^{e} as exponents mod d
  FiniteGroup Cd = cyclic_group(std::max(d, 1));
  std::vector<std::pair<Elt, Elt>> images;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    int e = ((parts[i + 1] % d) + d) % d;
    images.push_back({E.generator_hints[i].second, d == 1 ? 0 : e});
  }
  auto expo = hom_from_gen_images(E, Cd, images);
  if (!expo) throw std::invalid_argument("sd(): sigma exponents do not define a character");
  int zeta_d = mod_pow(primitive_root(p), (p - 1) / d, p);
  FiniteGroup K = cyclic_group(p);
  std::vector<Perm> action(E.order, Perm(p));
  for (Elt a = 0; a < E.order; ++a) {
    int scale = mod_pow(zeta_d, (*expo)[a], p);
    for (int m = 0; m < p; ++m) action[a][m] = (int)((long long)scale * m % p);
  }
  return semidirect_product(K, E, action, "Z" + std::to_string(p) + ":" + sig + ":" + E.name);
}

} // namespace

FiniteGroup make_group(const GroupSpec& spec) { return parse_spec(spec.text); }
FiniteGroup make_group(const std::string& spec) { return parse_spec(spec); }

std::vector<FiniteGroup> small_group_catalog(int n) {
  switch (n) {
    case 1:
      return {cyclic_group(1)};
    case 2:
      return {cyclic_group(2)};
    case 3:
      return {cyclic_group(3)};
    case 4: {
      FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
      v4.name = "C2xC2";
      v4.generator_hints = {{"a", 2}, {"b", 1}};
      return {cyclic_group(4), std::move(v4)};
    }
    case 6: {
      FiniteGroup s3 = dihedral_group(3);
      s3.name = "S3";
      return {cyclic_group(6), std::move(s3)};
    }
    case 12:
      return {cyclic_group(12), c6xc2(), alternating4(), dihedral_group(6), dicyclic12()};
    default:
      throw std::invalid_argument("small_group_catalog: only orders 1,2,3,4,6,12");
  }
}

} // namespace skb
