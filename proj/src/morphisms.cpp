#include "morphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace skb {

// ---------------------------------------------------------------------------
// AutomorphismGroup
// ---------------------------------------------------------------------------
int AutomorphismGroup::index_of(const Perm& p) const {
  // maps are sorted lexicographically at construction
  auto it = std::lower_bound(maps.begin(), maps.end(), p);
  if (it != maps.end() && *it == p) return (int)(it - maps.begin());
  return -1;
}

namespace {

AutomorphismGroup build_aut(const FiniteGroup& G, std::vector<Perm> maps, bool validate) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  AutomorphismGroup A;
  A.base_order = G.order;
  A.maps = std::move(maps);
  int n = (int)A.maps.size();
  if (validate) {
    for (const Perm& f : A.maps) {
      GroupMorphism m{&G, &G, f};
      if (!m.is_homomorphism() || !m.is_bijective())
        throw std::invalid_argument("automorphism family contains a non-automorphism");
    }
  }
  std::map<Perm, int> idx;
  for (int i = 0; i < n; ++i) idx[A.maps[i]] = i;
  std::vector<Elt> t((size_t)n * n);
  Perm comp(G.order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (Elt x = 0; x < G.order; ++x) comp[x] = A.maps[i][A.maps[j][x]];
      auto it = idx.find(comp);
      if (it == idx.end())
        throw std::invalid_argument("automorphism family is not closed under composition");
      t[(size_t)i * n + j] = it->second;
    }
  A.structure = group_from_table(n, std::move(t), "Aut(" + G.name + ")");
  return A;
}

} // namespace

AutomorphismGroup automorphism_group(const FiniteGroup& G) {
  return build_aut(G, all_automorphisms(G), false);
}

AutomorphismGroup automorphism_group_from_maps(const FiniteGroup& G, std::vector<Perm> maps) {
  return build_aut(G, std::move(maps), true);
}

int aut_index_by_images(const AutomorphismGroup& aut, const FiniteGroup& G,
                        const std::vector<std::pair<Elt, Elt>>& images) {
  int found = -1;
  for (int i = 0; i < aut.size(); ++i) {
    bool ok = true;
    for (auto [g, h] : images)
      if (aut.maps[i][g] != h) {
        ok = false;
        break;
      }
    if (ok) {
      if (found >= 0) throw std::invalid_argument("aut_index_by_images: images are ambiguous");
      found = i;
    }
  }
  if (found < 0)
    throw std::invalid_argument("aut_index_by_images: no automorphism of " + G.name +
                                " has these images");
  return found;
}

// ---------------------------------------------------------------------------
// characters
// ---------------------------------------------------------------------------
bool Character::is_trivial() const {
  for (int e : exponents)
    if (e != 0) return false;
  return true;
}

int Character::order() const {
  long long d = 1;
  for (int e : exponents) d = lcm_ll(d, modulus / gcd_ll(modulus, e));
  return (int)d;
}

int Character::kernel_size() const {
  int k = 0;
  for (int e : exponents)
    if (e == 0) ++k;
  return k;
}

std::vector<Elt> Character::kernel_elements() const {
  std::vector<Elt> out;
  for (Elt x = 0; x < source_order; ++x)
    if (exponents[x] == 0) out.push_back(x);
  return out;
}

int CharacterSpace::index_of(const std::vector<int>& exponents) const {
  int lo = 0, hi = size();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (characters[mid].exponents < exponents)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && characters[lo].exponents == exponents) return lo;
  return -1;
}

namespace {

// Closure of a partial exponent assignment under the product law
// e(xy) = e(x) + e(y) (mod m); false on conflict.
bool close_exponents(const FiniteGroup& G, int m, std::vector<int>& e) {
  std::vector<Elt> work;
  for (Elt x = 0; x < G.order; ++x)
    if (e[x] >= 0) work.push_back(x);
  size_t head = 0;
  while (head < work.size()) {
    Elt q = work[head++];
    for (size_t i = 0; i < work.size(); ++i) {
      Elt d = work[i];
      for (auto [a, b] : {std::pair<Elt, Elt>{q, d}, std::pair<Elt, Elt>{d, q}}) {
        Elt c = G.mul(a, b);
        int v = (e[a] + e[b]) % m;
        if (e[c] < 0) {
          e[c] = v;
          work.push_back(c);
        } else if (e[c] != v) {
          return false;
        }
      }
    }
  }
  return true;
}

void enum_chars(const FiniteGroup& G, int m, const std::vector<Elt>& gens, size_t depth,
                std::vector<int> e, std::vector<Character>& out) {
  if (depth == gens.size()) {
    for (int v : e)
      if (v < 0) throw std::logic_error("homs_to_cyclic: generators do not generate");
    out.push_back(Character{G.order, m, std::move(e)});
    return;
  }
  Elt g = gens[depth];
  if (e[g] >= 0) {
    enum_chars(G, m, gens, depth + 1, std::move(e), out);
    return;
  }
  int og = G.element_order(g);
  for (int v = 0; v < m; ++v) {
    if ((long long)og * v % m != 0) continue; // image order must divide ord(g)
    std::vector<int> next = e;
    next[g] = v;
    if (close_exponents(G, m, next)) enum_chars(G, m, gens, depth + 1, std::move(next), out);
  }
}

} // namespace

CharacterSpace homs_to_cyclic(const FiniteGroup& G, int m) {
  if (m < 1) throw std::invalid_argument("homs_to_cyclic: modulus must be >= 1");
  CharacterSpace S;
  S.source = &G;
  S.modulus = m;
  std::vector<int> e(G.order, -1);
  e[G.identity] = 0;
  enum_chars(G, m, minimal_generating_set(G), 0, std::move(e), S.characters);
  std::sort(S.characters.begin(), S.characters.end(),
            [](const Character& a, const Character& b) { return a.exponents < b.exponents; });
  return S;
}

Character precompose(const Character& sigma, const Perm& f) {
  Character out = sigma;
  for (size_t x = 0; x < f.size(); ++x) out.exponents[x] = sigma.exponents[f[x]];
  return out;
}

int precompose_index(const CharacterSpace& space, int sigma, const Perm& f) {
  std::vector<int> e(space.characters[sigma].exponents.size());
  for (size_t x = 0; x < f.size(); ++x) e[x] = space.characters[sigma].exponents[f[x]];
  int idx = space.index_of(e);
  if (idx < 0) throw std::logic_error("precompose_index: action left the character space");
  return idx;
}

std::vector<int> character_units(const Character& ch, int p) {
  if (!is_prime(p) || (p - 1) % ch.modulus != 0)
    throw std::invalid_argument("character_units: modulus must divide p-1");
  int zeta_m = mod_pow(primitive_root(p), (p - 1) / ch.modulus, p);
  std::vector<int> units(ch.source_order);
  for (int x = 0; x < ch.source_order; ++x) units[x] = mod_pow(zeta_m, ch.exponents[x], p);
  return units;
}

FiniteGroup semidirect_by_character(int p, const Character& sigma, const FiniteGroup& E,
                                    std::string name) {
  if (sigma.source_order != E.order)
    throw std::invalid_argument("semidirect_by_character: character lives on another group");
  std::vector<int> units = character_units(sigma, p);
  std::vector<Perm> action(E.order, Perm(p));
  for (Elt a = 0; a < E.order; ++a)
    for (int m = 0; m < p; ++m) action[a][m] = (int)((long long)units[a] * m % p);
  if (name.empty())
    name = "Z" + std::to_string(p) + (sigma.is_trivial() ? "x" : ":") + E.name;
  return semidirect_product(cyclic_group(p), E, action, std::move(name));
}

// ---------------------------------------------------------------------------
// orbits
// ---------------------------------------------------------------------------
int ActionOrbits::orbit_of(int point) const {
  for (int i = 0; i < (int)orbits.size(); ++i)
    if (std::binary_search(orbits[i].begin(), orbits[i].end(), point)) return i;
  return -1;
}

ActionOrbits orbits_under_action(int n_points, const std::vector<int>& acting_elems,
                                 const std::function<int(int, int)>& apply) {
  ActionOrbits out;
  std::vector<char> claimed(n_points, 0);
  for (int pt = 0; pt < n_points; ++pt) {
    if (claimed[pt]) continue;
    std::vector<int> orbit, stab;
    for (int g : acting_elems) {
      int q = apply(g, pt);
      if (q < 0 || q >= n_points)
        throw std::invalid_argument("orbits_under_action: action leaves the point set");
      orbit.push_back(q);
      if (q == pt) stab.push_back(g);
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (int q : orbit) claimed[q] = 1;
    if (orbit.size() * stab.size() != acting_elems.size())
      throw std::logic_error("orbit-stabilizer identity fails");
    out.orbits.push_back(std::move(orbit));
    out.stabilizers.push_back(std::move(stab));
  }
  long long fix_sum = 0;
  for (int g : acting_elems)
    for (int pt = 0; pt < n_points; ++pt)
      if (apply(g, pt) == pt) ++fix_sum;
  out.burnside_fix_sum = fix_sum;
  if (!acting_elems.empty() &&
      fix_sum != (long long)acting_elems.size() * (long long)out.orbits.size())
    throw std::logic_error("Burnside count disagrees with direct orbit count");
  return out;
}

ActionOrbits orbits_and_stabilizers(const CharacterSpace& points, const AutomorphismGroup& aut,
                                    const std::vector<int>& acting_indices) {
  return orbits_under_action(points.size(), acting_indices, [&](int g, int pt) {
    return precompose_index(points, pt, aut.maps[g]);
  });
}

ActionOrbits orbits_and_stabilizers(const CharacterSpace& points, const AutomorphismGroup& aut) {
  return orbits_and_stabilizers(points, aut, all_indices(aut));
}

std::vector<int> character_stabilizer(const CharacterSpace& points, int sigma,
                                      const AutomorphismGroup& aut,
                                      const std::vector<int>& acting_indices) {
  std::vector<int> stab;
  for (int g : acting_indices)
    if (precompose_index(points, sigma, aut.maps[g]) == sigma) stab.push_back(g);
  return stab;
}

std::vector<int> all_indices(const AutomorphismGroup& aut) {
  std::vector<int> v(aut.size());
  for (int i = 0; i < aut.size(); ++i) v[i] = i;
  return v;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace skb
