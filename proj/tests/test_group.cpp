#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "group.hpp"

using namespace skb;

namespace {

// order of x computed straight off the table, independent of the library path
int raw_order(const FiniteGroup& G, Elt x) {
  int k = 1;
  Elt y = x;
  while (y != G.identity) {
    y = G.table[(size_t)y * G.order + x];
    ++k;
  }
  return k;
}

std::map<int, int> raw_census(const FiniteGroup& G) {
  std::map<int, int> c;
  for (Elt x = 0; x < G.order; ++x) c[raw_order(G, x)]++;
  return c;
}

int raw_center(const FiniteGroup& G) {
  int c = 0;
  for (Elt a = 0; a < G.order; ++a) {
    bool z = true;
    for (Elt b = 0; b < G.order && z; ++b) z = G.mul(a, b) == G.mul(b, a);
    c += z;
  }
  return c;
}

std::vector<Perm> mult_action(int p, int unit, int q_order) {
  std::vector<Perm> action(q_order, Perm(p));
  long long u = 1;
  for (int j = 0; j < q_order; ++j) {
    for (int m = 0; m < p; ++m) action[j][m] = (int)(u * m % p);
    u = u * unit % p;
  }
  return action;
}

} // namespace

TEST_CASE("presets satisfy the group axioms") {
  for (const auto& G : small_group_catalog(12)) CHECK_NOTHROW(G.check());
  CHECK_NOTHROW(symmetric_group(4).check());
}

TEST_CASE("A4 preset: order 12, census {1:1, 2:3, 3:8}") {
  FiniteGroup G = alternating4();
  CHECK(G.order == 12);
  std::map<int, int> expect{{1, 1}, {2, 3}, {3, 8}};
  CHECK(raw_census(G) == expect);
  CHECK(raw_order(G, G.hint("rho")) == 3);
  CHECK(raw_order(G, G.hint("mu")) == 2);
}

TEST_CASE("trivial preset") {
  FiniteGroup G = make_group("C1");
  CHECK(G.order == 1);
  CHECK(G.identity == 0);
}

TEST_CASE("Dic12 preset has exactly one involution") {
  FiniteGroup G = dicyclic12();
  CHECK(G.order == 12);
  CHECK(raw_census(G)[2] == 1);
  CHECK(raw_order(G, G.hint("x")) == 3);
  CHECK(raw_order(G, G.hint("y")) == 4);
  // y x y^-1 = x^2
  Elt x = G.hint("x"), y = G.hint("y");
  CHECK(G.conj(y, x) == G.mul(x, x));
}

TEST_CASE("D12 preset relations") {
  FiniteGroup G = dihedral_group(6);
  Elt r = G.hint("r"), s = G.hint("s");
  CHECK(raw_order(G, r) == 6);
  CHECK(raw_order(G, s) == 2);
  CHECK(G.mul(G.mul(s, r), s) == G.pow(r, 5));
  CHECK(raw_census(G)[2] == 7);
}

TEST_CASE("semidirect product Z5 x| C4 with faithful action") {
  FiniteGroup C4 = cyclic_group(4);
  FiniteGroup G = semidirect_product(cyclic_group(5), C4, mult_action(5, 2, 4));
  CHECK(G.order == 20);
  CHECK(raw_center(G) == 1);
  CHECK_FALSE(G.is_abelian());
}

TEST_CASE("semidirect with trivial action is the direct product") {
  FiniteGroup C12 = cyclic_group(12);
  std::vector<Perm> trivial(12);
  Perm id(7);
  std::iota(id.begin(), id.end(), 0);
  for (auto& f : trivial) f = id;
  FiniteGroup G = semidirect_product(cyclic_group(7), C12, trivial);
  CHECK(G.order == 84);
  CHECK(G.is_abelian());
  CHECK(G.exponent() == 84);
  FiniteGroup D = direct_product(cyclic_group(7), cyclic_group(12));
  CHECK(are_isomorphic(G, D).has_value());
}

TEST_CASE("semidirect Z13 x| C12 with order-12 action") {
  // 2 is a primitive root mod 13
  FiniteGroup G = semidirect_product(cyclic_group(13), cyclic_group(12), mult_action(13, 2, 12));
  CHECK(G.order == 156);
  CHECK(raw_center(G) == 1);
}

TEST_CASE("semidirect rejects a non-homomorphic action") {
  // "action" sending both generators of C2 x C2 to the same involution twist
  FiniteGroup V4 = small_group_catalog(4)[1];
  std::vector<Perm> bad(4, Perm{0, 1, 2});
  for (auto& f : bad) f = Perm{0, 2, 1};
  bad[0] = Perm{0, 1, 2};
  CHECK_THROWS(semidirect_product(cyclic_group(3), V4, bad));
}

TEST_CASE("subgroup_generated") {
  FiniteGroup A4 = alternating4();
  CHECK(subgroup_generated(A4, {A4.hint("rho")}).order() == 3);
  CHECK(subgroup_generated(A4, {}).order() == 1);
  CHECK(subgroup_generated(A4, {A4.hint("rho"), A4.hint("mu")}).order() == 12);
}

TEST_CASE("are_isomorphic fast rejects and finds relabelings") {
  auto cat = small_group_catalog(12);
  CHECK_FALSE(are_isomorphic(cat[0], cat[1]).has_value()); // C12 vs C6xC2
  CHECK_FALSE(are_isomorphic(cat[3], cat[4]).has_value()); // D12 vs Dic12
  // random relabeling of Z13 x| C12
  FiniteGroup G = semidirect_product(cyclic_group(13), cyclic_group(12), mult_action(13, 2, 12));
  std::mt19937 rng(42);
  Perm relab(G.order);
  std::iota(relab.begin(), relab.end(), 0);
  std::shuffle(relab.begin(), relab.end(), rng);
  Perm inv(G.order);
  for (int i = 0; i < G.order; ++i) inv[relab[i]] = i;
  std::vector<Elt> t((size_t)G.order * G.order);
  for (Elt a = 0; a < G.order; ++a)
    for (Elt b = 0; b < G.order; ++b)
      t[(size_t)relab[a] * G.order + relab[b]] = relab[G.mul(a, b)];
  FiniteGroup H = group_from_table(G.order, std::move(t), "relabeled");
  auto iso = are_isomorphic(G, H);
  REQUIRE(iso.has_value());
  CHECK(iso->is_homomorphism());
  CHECK(iso->is_bijective());
}

TEST_CASE("are_isomorphic is an equivalence on the order-12 presets") {
  auto cat = small_group_catalog(12);
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = 0; j < cat.size(); ++j) {
      bool ij = are_isomorphic(cat[i], cat[j]).has_value();
      CHECK(ij == (i == j));
    }
}

TEST_CASE("order-12 preset censuses match the standard ones") {
  auto cat = small_group_catalog(12);
  std::map<int, int> c12{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}};
  std::map<int, int> c6c2{{1, 1}, {2, 3}, {3, 2}, {6, 6}};
  std::map<int, int> a4{{1, 1}, {2, 3}, {3, 8}};
  std::map<int, int> d12{{1, 1}, {2, 7}, {3, 2}, {6, 2}};
  std::map<int, int> dic{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}};
  CHECK(raw_census(cat[0]) == c12);
  CHECK(raw_census(cat[1]) == c6c2);
  CHECK(raw_census(cat[2]) == a4);
  CHECK(raw_census(cat[3]) == d12);
  CHECK(raw_census(cat[4]) == dic);
}

TEST_CASE("group spec text forms") {
  CHECK(make_group("C12").order == 12);
  CHECK(make_group("Cn(9)").order == 9);
  CHECK(make_group("C6xC2").order == 12);
  CHECK(make_group("S3").order == 6);
  FiniteGroup G = make_group("sd(C5, Cn(4), sigma=4:1)");
  CHECK(G.order == 20);
  CHECK_FALSE(G.is_abelian());
  CHECK(raw_center(G) == 1);
  CHECK_THROWS(make_group("Q8"));
  CHECK_THROWS(make_group("sd(C6, C2, sigma=2:1)"));  // kernel not prime
  CHECK_THROWS(make_group("sd(C5, C4, sigma=3:1)"));  // 3 does not divide 4
}

TEST_CASE("quotient and derived subgroup") {
  FiniteGroup A4 = alternating4();
  auto D = derived_subgroup(A4);
  CHECK(D.size() == 4); // V4
  auto Q = quotient_group(A4, Subgroup{&A4, D});
  CHECK(Q.quotient.order == 3);
  FiniteGroup S3 = make_group("S3");
  CHECK(derived_subgroup(S3).size() == 3);
}

TEST_CASE("hom_from_gen_images") {
  FiniteGroup C12 = cyclic_group(12);
  FiniteGroup C4 = cyclic_group(4);
  auto h = hom_from_gen_images(C12, C4, {{C12.hint("c"), 1}});
  REQUIRE(h.has_value());
  CHECK((*h)[C12.pow(C12.hint("c"), 3)] == 3);
  // c -> element of order 4 requires 12 * 1 = 0 mod 4: ok; c -> order-3 image in C4 impossible
  CHECK_FALSE(hom_from_gen_images(C12, cyclic_group(8), {{C12.hint("c"), 1}}).has_value());
}

TEST_CASE("number theory helpers") {
  CHECK(primitive_root(13) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(mod_pow(2, 12, 13) == 1);
  CHECK(mod_inv(5, 13) == 8);
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(12));
}
