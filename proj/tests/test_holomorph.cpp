#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "holomorph.hpp"

using namespace skb;

namespace {

struct HolFixture {
  FiniteGroup E;
  AutomorphismGroup aut;
  HolGroup hol;
  explicit HolFixture(FiniteGroup g) : E(std::move(g)), aut(automorphism_group(E)), hol{&E, &aut} {}
};

RegularSubgroup span(const HolGroup& hol, std::vector<int> gens) {
  return RegularSubgroup{&hol, hol_closure(hol, gens)};
}

} // namespace

TEST_CASE("holomorph orders") {
  CHECK(HolFixture(cyclic_group(12)).hol.order() == 48);
  CHECK(HolFixture(alternating4()).hol.order() == 288);
  CHECK(HolFixture(cyclic_group(2)).hol.order() == 2);
}

TEST_CASE("holomorph embeds N and Aut(N) as subgroups") {
  HolFixture H(dihedral_group(6));
  std::vector<int> ncopy, acopy;
  for (Elt n = 0; n < H.E.order; ++n) ncopy.push_back(H.hol.make(n, 0));
  for (int f = 0; f < H.aut.size(); ++f) acopy.push_back(H.hol.make(H.E.identity, f));
  std::sort(ncopy.begin(), ncopy.end());
  std::sort(acopy.begin(), acopy.end());
  CHECK(hol_closure(H.hol, ncopy) == ncopy);
  CHECK(hol_closure(H.hol, acopy) == acopy);
  RegularSubgroup Ncopy{&H.hol, ncopy};
  CHECK(Ncopy.is_regular());
  CHECK(are_isomorphic(Ncopy.as_group(), H.E).has_value());
  RegularSubgroup Acopy{&H.hol, acopy};
  CHECK(are_isomorphic(Acopy.as_group(), H.aut.structure).has_value());
}

TEST_CASE("regular subgroup classes: order-12 table") {
  auto cat = small_group_catalog(12);
  // rows: additive group, columns: class of the regular subgroup
  int expect[5][5] = {{1, 1, 0, 2, 1},
                      {1, 1, 1, 1, 1},
                      {0, 2, 4, 0, 2},
                      {2, 2, 0, 4, 2},
                      {2, 2, 0, 4, 2}};
  int total = 0;
  for (int i = 0; i < 5; ++i) {
    HolFixture H(cat[i]);
    auto classes = regular_subgroup_classes(H.E, H.aut, H.hol, cat);
    int got[5] = {};
    for (auto& cls : classes) got[cls.catalog_index]++;
    for (int j = 0; j < 5; ++j) CHECK(got[j] == expect[i][j]);
    total += (int)classes.size();
  }
  CHECK(total == 38);
}

TEST_CASE("regular subgroup classes: C2 and tiny orders") {
  HolFixture H(cyclic_group(2));
  auto classes = regular_subgroup_classes(H.E, H.aut, H.hol, small_group_catalog(2));
  CHECK(classes.size() == 1);
  for (int n : {1, 2, 3}) {
    HolFixture T(cyclic_group(n));
    CHECK(find_regular_classes(T.hol).size() == 1);
  }
}

TEST_CASE("brace_from_regular: trivial and paper representatives over C12") {
  HolFixture H(cyclic_group(12));
  Elt c = H.E.hint("c");
  int g5 = aut_index_by_images(H.aut, H.E, {{c, H.E.pow(c, 5)}});
  int g7 = aut_index_by_images(H.aut, H.E, {{c, H.E.pow(c, 7)}});

  // normal copy of N gives the trivial brace
  std::vector<int> ncopy;
  for (Elt n = 0; n < 12; ++n) ncopy.push_back(H.hol.make(n, 0));
  std::sort(ncopy.begin(), ncopy.end());
  SkewBrace triv = brace_from_regular(H.E, RegularSubgroup{&H.hol, ncopy});
  CHECK(triv.mul.table == triv.add.table);
  CHECK(verify_brace(triv).ok);

  // <(c^4, Id), (c^3, g5)> has circle group Dic12
  RegularSubgroup Fdic = span(H.hol, {H.hol.make(H.E.pow(c, 4), 0), H.hol.make(H.E.pow(c, 3), g5)});
  REQUIRE(Fdic.is_regular());
  SkewBrace Bdic = brace_from_regular(H.E, Fdic);
  CHECK(verify_brace(Bdic).ok);
  CHECK(are_isomorphic(Bdic.mul, dicyclic12()).has_value());

  // <(c, g7), (c^6, Id)> has circle group C6 x C2
  RegularSubgroup Fc62 = span(H.hol, {H.hol.make(c, g7), H.hol.make(H.E.pow(c, 6), 0)});
  REQUIRE(Fc62.is_regular());
  SkewBrace B62 = brace_from_regular(H.E, Fc62);
  CHECK(verify_brace(B62).ok);
  CHECK(are_isomorphic(B62.mul, c6xc2()).has_value());
}

TEST_CASE("verify_brace flags a perturbed table with a witness") {
  SkewBrace B = trivial_brace(cyclic_group(12));
  std::swap(B.mul.table[1 * 12 + 2], B.mul.table[1 * 12 + 3]);
  BraceCheck r = verify_brace(B);
  CHECK_FALSE(r.ok);
  CHECK(r.witness[0] >= 0);
  CHECK_FALSE(r.what.empty());
}

TEST_CASE("GV round-trip on every order-12 class") {
  auto cat = small_group_catalog(12);
  for (const auto& E : cat) {
    HolFixture H(E);
    for (auto& cls : regular_subgroup_classes(H.E, H.aut, H.hol, cat)) {
      SkewBrace B = brace_from_regular(H.E, cls.rep);
      CHECK(verify_brace(B).ok);
      RegularSubgroup back = lambda_graph(B, H.hol);
      CHECK(back.elements == cls.rep.elements);
      CHECK(are_isomorphic(B.mul, cat[cls.catalog_index]).has_value());
      // lambda is multiplicative: lambda_{a o b} = lambda_a . lambda_b
      for (Elt a = 0; a < B.size(); ++a)
        for (Elt b = 0; b < B.size(); ++b) {
          Perm comp(B.size());
          for (Elt t = 0; t < B.size(); ++t) comp[t] = B.lambda[a][B.lambda[b][t]];
          CHECK(B.lambda[B.mul.mul(a, b)] == comp);
        }
    }
  }
}

TEST_CASE("brace_automorphisms examples") {
  {
    HolFixture H(cyclic_group(12));
    Elt c = H.E.hint("c");
    RegularSubgroup F = span(H.hol, {H.hol.make(c, 0)});
    CHECK(brace_automorphisms(H.aut, F).order() == 4); // all of Aut(E)
  }
  {
    HolFixture H(dicyclic12());
    Elt x = H.E.hint("x"), y = H.E.hint("y");
    int g1 = aut_index_by_images(H.aut, H.E, {{x, H.E.pow(x, 2)}, {y, H.E.pow(y, 3)}});
    int g2 = aut_index_by_images(H.aut, H.E, {{x, x}, {y, H.E.mul(x, H.E.pow(y, 3))}});
    RegularSubgroup F = span(H.hol, {H.hol.make(y, H.aut.compose(g2, g1))});
    REQUIRE(F.is_regular());
    CHECK(are_isomorphic(F.as_group(), cyclic_group(12)).has_value());
    Subgroup ab = brace_automorphisms(H.aut, F);
    int g2cubed = H.aut.structure.pow(g2, 3);
    CHECK(ab.elements == closure(H.aut.structure, {g2cubed, H.aut.compose(g2, g1)}));
    FiniteGroup abG = subgroup_as_group(ab);
    CHECK(abG.order == 4);
    CHECK(abG.exponent() == 2); // Klein group
  }
  {
    HolFixture H(cyclic_group(2));
    RegularSubgroup F = span(H.hol, {H.hol.make(1, 0)});
    CHECK(brace_automorphisms(H.aut, F).order() == 1);
  }
}

TEST_CASE("brace_characters examples") {
  {
    HolFixture H(cyclic_group(12));
    RegularSubgroup F = span(H.hol, {H.hol.make(H.E.hint("c"), 0)});
    SkewBrace B = brace_from_regular(H.E, F);
    CHECK(brace_characters(B, F, homs_to_cyclic(H.E, 12)).size() == 12);
    CHECK(brace_characters(B, F, homs_to_cyclic(H.E, 1)).size() == 1);
  }
  {
    HolFixture H(c6xc2());
    Elt a = H.E.hint("a"), b = H.E.hint("b");
    int g1 = aut_index_by_images(H.aut, H.E, {{a, H.E.mul(a, b)}, {b, b}});
    RegularSubgroup F = span(H.hol, {H.hol.make(a, g1)}); // cyclic of order 12
    REQUIRE(F.is_regular());
    CHECK(are_isomorphic(F.as_group(), cyclic_group(12)).has_value());
    SkewBrace B = brace_from_regular(H.E, F);
    CharacterSpace S = homs_to_cyclic(H.E, 6);
    auto chars = brace_characters(B, F, S);
    CHECK(chars.size() == 6);
    for (int idx : chars) CHECK(S.characters[idx].exponents[b] == 0); // sigma(b) = 1
  }
}

TEST_CASE("pi2-stabilizer and circle-homomorphism criteria agree on all classes") {
  auto cat = small_group_catalog(12);
  for (const auto& E : cat) {
    HolFixture H(E);
    CharacterSpace S = homs_to_cyclic(H.E, 12);
    for (auto& cls : regular_subgroup_classes(H.E, H.aut, H.hol, cat)) {
      SkewBrace B = brace_from_regular(H.E, cls.rep);
      CHECK_NOTHROW(brace_characters(B, cls.rep, S)); // throws if the criteria disagree
    }
  }
}

TEST_CASE("canonical keys separate the classes over one additive group") {
  auto cat = small_group_catalog(12);
  HolFixture H(cat[3]); // D12, eight classes in total
  auto classes = regular_subgroup_classes(H.E, H.aut, H.hol, cat);
  std::vector<std::vector<Elt>> keys;
  for (auto& cls : classes) keys.push_back(brace_canonical_key(brace_from_regular(H.E, cls.rep), H.aut));
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("conjugating_element finds witnesses inside one class") {
  HolFixture H(alternating4());
  auto classes = find_regular_classes(H.hol);
  REQUIRE(classes.size() == 8);
  // conjugate a representative by a few elements; the search must find a witness back
  for (auto& cls : classes) {
    int g = H.hol.make(2, 3 % H.aut.size());
    RegularSubgroup moved{&H.hol, hol_conjugate_set(H.hol, g, cls.elements)};
    auto w = conjugating_element(H.hol, cls, moved);
    REQUIRE(w.has_value());
    CHECK(hol_conjugate_set(H.hol, *w, cls.elements) == moved.elements);
  }
  // distinct classes are not conjugate
  auto w = conjugating_element(H.hol, classes[0], classes[1]);
  CHECK_FALSE(w.has_value());
}
