#include <algorithm>

#include "doctest.h"
#include "dsdp.hpp"

using namespace skb;

namespace {

int find_char_of_order(const CharacterSpace& S, int d) {
  for (int i = 0; i < S.size(); ++i)
    if (S.characters[i].order() == d) return i;
  return -1;
}

// character on F.as_group() pulled back to the carrier of E through pi1
std::vector<int> tau_on_carrier(const Character& tau, const RegularSubgroup& F, int p,
                                const BraceAutGroup& autZp) {
  std::vector<int> on_F = character_as_zp_action(tau, p, autZp);
  std::vector<int> out(F.hol->N->order);
  for (int i = 0; i < (int)F.elements.size(); ++i) out[F.hol->proj1(F.elements[i])] = on_F[i];
  return out;
}

} // namespace

TEST_CASE("aut_of_semidirect orders") {
  {
    FiniteGroup E = cyclic_group(12);
    AutomorphismGroup autE = automorphism_group(E);
    CharacterSpace S = homs_to_cyclic(E, 12);
    SemidirectAutGroup a1 = aut_of_semidirect(13, S.characters[S.trivial_index()], E, autE);
    CHECK(a1.aut.size() == 48); // (p-1) |Aut(E)|
    int s12 = find_char_of_order(S, 12);
    REQUIRE(s12 >= 0);
    SemidirectAutGroup a2 = aut_of_semidirect(13, S.characters[s12], E, autE);
    CHECK(a2.aut.size() == 13 * 12 * 1);
    int s2 = find_char_of_order(S, 2);
    SemidirectAutGroup a3 = aut_of_semidirect(13, S.characters[s2], E, autE);
    CHECK(a3.aut.size() == 13 * 12 * 4); // every automorphism fixes the order-2 character
  }
  {
    FiniteGroup E = alternating4();
    AutomorphismGroup autE = automorphism_group(E);
    CharacterSpace S = homs_to_cyclic(E, 3);
    int s3 = find_char_of_order(S, 3);
    REQUIRE(s3 >= 0);
    SemidirectAutGroup a = aut_of_semidirect(7, S.characters[s3], E, autE);
    CHECK(a.aut.size() == 7 * 6 * 12); // stabilizer of sigma is A4
  }
}

TEST_CASE("aut_of_semidirect rejects p dividing |E| and bad moduli") {
  FiniteGroup E = cyclic_group(12);
  AutomorphismGroup autE = automorphism_group(E);
  CharacterSpace S = homs_to_cyclic(E, 12);
  CHECK_THROWS(aut_of_semidirect(3, S.characters[0], E, autE));
  CHECK_THROWS(aut_of_semidirect(5, S.characters[find_char_of_order(S, 12)], E, autE));
}

TEST_CASE("structured maps equal brute-force automorphisms on sample cases") {
  struct Case {
    int p;
    FiniteGroup E;
    int d; // character order to use
  };
  std::vector<Case> cases;
  cases.push_back({5, cyclic_group(4), 4});
  cases.push_back({5, small_group_catalog(4)[1], 2}); // C2xC2
  cases.push_back({7, make_group("S3"), 2});
  cases.push_back({7, cyclic_group(6), 6});
  cases.push_back({13, cyclic_group(12), 12});
  cases.push_back({5, cyclic_group(1), 1});
  for (auto& c : cases) {
    AutomorphismGroup autE = automorphism_group(c.E);
    CharacterSpace S = homs_to_cyclic(c.E, gcd_ll(c.E.order == 1 ? 1 : c.E.exponent(), c.p - 1));
    int si = find_char_of_order(S, c.d);
    REQUIRE(si >= 0);
    const Character& sigma = S.characters[si];
    SemidirectAutMaps structured = semidirect_aut_maps(c.p, sigma, c.E, autE);
    FiniteGroup N = semidirect_by_character(c.p, sigma, c.E);
    std::vector<Perm> brute = all_automorphisms(N);
    std::sort(structured.maps.begin(), structured.maps.end());
    std::sort(brute.begin(), brute.end());
    CHECK(structured.maps == brute);
  }
}

TEST_CASE("dsdp condition: trivial sigma always passes") {
  FiniteGroup Z13 = cyclic_group(13);
  SkewBrace A = trivial_brace(Z13);
  BraceAutGroup autA = brace_aut_group(A);
  CHECK(autA.size() == 12);

  FiniteGroup E = cyclic_group(12);
  SkewBrace B = trivial_brace(E);
  CharacterSpace SE = homs_to_cyclic(E, 12);
  std::vector<int> triv = character_as_zp_action(SE.characters[SE.trivial_index()], 13, autA);
  for (int d : {1, 2, 3, 4, 6, 12}) {
    std::vector<int> tau =
        character_as_zp_action(SE.characters[find_char_of_order(SE, d)], 13, autA);
    DsdpSpec spec{&A, &B, &autA, triv, tau};
    CHECK(check_dsdp_condition(spec).ok);
  }
}

TEST_CASE("dsdp condition over the trivial prime brace is the circle-homomorphism test") {
  FiniteGroup Z13 = cyclic_group(13);
  SkewBrace A = trivial_brace(Z13);
  BraceAutGroup autA = brace_aut_group(A);
  auto cat = small_group_catalog(12);
  for (const auto& Ename : {3, 4}) { // D12 and Dic12 carry asymmetric braces
    const FiniteGroup& E = cat[Ename];
    AutomorphismGroup autE = automorphism_group(E);
    HolGroup hol = holomorph(E, autE);
    CharacterSpace SE = homs_to_cyclic(E, 12);
    for (auto& cls : regular_subgroup_classes(E, autE, hol, cat)) {
      SkewBrace B = brace_from_regular(E, cls.rep);
      for (int si = 0; si < SE.size(); ++si) {
        const Character& sig = SE.characters[si];
        if (12 % ((13 - 1) / gcd_ll(12, 13 - 1)) != 0) continue;
        std::vector<int> sigma = character_as_zp_action(sig, 13, autA);
        std::vector<int> tau = character_as_zp_action(SE.characters[0], 13, autA); // trivial
        DsdpSpec spec{&A, &B, &autA, sigma, tau};
        bool circle_hom = true;
        for (Elt b1 = 0; b1 < 12 && circle_hom; ++b1)
          for (Elt b2 = 0; b2 < 12 && circle_hom; ++b2)
            if (sig.exponents[B.mul.mul(b1, b2)] !=
                (sig.exponents[b1] + sig.exponents[b2]) % sig.modulus)
              circle_hom = false;
        CHECK(check_dsdp_condition(spec).ok == circle_hom);
      }
    }
  }
}

TEST_CASE("dsdp condition fails for sigma outside the brace characters of (D12, C12)") {
  FiniteGroup Z13 = cyclic_group(13);
  SkewBrace A = trivial_brace(Z13);
  BraceAutGroup autA = brace_aut_group(A);
  FiniteGroup E = dihedral_group(6);
  AutomorphismGroup autE = automorphism_group(E);
  HolGroup hol = holomorph(E, autE);
  Elt r = E.hint("r"), s = E.hint("s");
  int g2 = aut_index_by_images(autE, E, {{r, r}, {s, E.mul(r, s)}});
  RegularSubgroup F{&hol, hol_closure(hol, {hol.make(s, g2)})}; // the cyclic F with pi2 = <g2>
  REQUIRE(F.is_regular());
  REQUIRE(are_isomorphic(F.as_group(), cyclic_group(12)).has_value());
  SkewBrace B = brace_from_regular(E, F);
  CharacterSpace SE = homs_to_cyclic(E, 2);
  int bad = -1;
  for (int i = 0; i < SE.size(); ++i)
    if (SE.characters[i].exponents[r] == 1 && SE.characters[i].exponents[s] == 1) bad = i;
  REQUIRE(bad >= 0); // sigma = (-1, -1)
  std::vector<int> sigma = character_as_zp_action(SE.characters[bad], 13, autA);
  std::vector<int> tau = character_as_zp_action(homs_to_cyclic(E, 1).characters[0], 13, autA);
  DsdpSpec spec{&A, &B, &autA, sigma, tau};
  DsdpCheck chk = check_dsdp_condition(spec);
  CHECK_FALSE(chk.ok);
  CHECK(chk.b1 >= 0);
  // and overall: dsdp characters = brace characters
  auto chars = brace_characters(B, F, SE);
  for (int i = 0; i < SE.size(); ++i) {
    std::vector<int> sg = character_as_zp_action(SE.characters[i], 13, autA);
    DsdpSpec sp{&A, &B, &autA, sg, tau};
    bool in = std::binary_search(chars.begin(), chars.end(), i);
    CHECK(check_dsdp_condition(sp).ok == in);
  }
}

TEST_CASE("double_semidirect with both maps trivial is the direct product") {
  FiniteGroup Z5 = cyclic_group(5);
  SkewBrace A = trivial_brace(Z5);
  BraceAutGroup autA = brace_aut_group(A);
  SkewBrace B = trivial_brace(alternating4());
  std::vector<int> triv(B.size(), 0);
  SkewBrace P = double_semidirect(DsdpSpec{&A, &B, &autA, triv, triv});
  CHECK(P.size() == 60);
  for (Elt a1 = 0; a1 < 5; ++a1)
    for (Elt b1 = 0; b1 < 12; ++b1)
      for (Elt a2 = 0; a2 < 5; ++a2)
        for (Elt b2 = 0; b2 < 12; ++b2) {
          int x = a1 * 12 + b1, y = a2 * 12 + b2;
          CHECK(P.add.mul(x, y) == A.add.mul(a1, a2) * 12 + B.add.mul(b1, b2));
          CHECK(P.mul.mul(x, y) == P.add.mul(x, y));
        }
}

TEST_CASE("double_semidirect: Z5 with C4 acting on both sides") {
  FiniteGroup Z5 = cyclic_group(5);
  SkewBrace A = trivial_brace(Z5);
  BraceAutGroup autA = brace_aut_group(A);
  SkewBrace B = trivial_brace(cyclic_group(4));
  CharacterSpace S = homs_to_cyclic(B.add, 4);
  int c4 = find_char_of_order(S, 4);
  std::vector<int> act = character_as_zp_action(S.characters[c4], 5, autA);
  SkewBrace P = double_semidirect(DsdpSpec{&A, &B, &autA, act, act});
  CHECK(P.size() == 20);
  FiniteGroup ref = make_group("sd(C5, Cn(4), sigma=4:1)");
  CHECK(are_isomorphic(P.add, ref).has_value());
  CHECK(are_isomorphic(P.mul, ref).has_value());
}

TEST_CASE("double_semidirect: semidirect-only twist on Z13 x C12") {
  FiniteGroup Z13 = cyclic_group(13);
  SkewBrace A = trivial_brace(Z13);
  BraceAutGroup autA = brace_aut_group(A);
  SkewBrace B = trivial_brace(cyclic_group(12));
  CharacterSpace S = homs_to_cyclic(B.add, 12);
  std::vector<int> sig(B.size(), 0);
  std::vector<int> tau = character_as_zp_action(S.characters[find_char_of_order(S, 12)], 13, autA);
  SkewBrace P = double_semidirect(DsdpSpec{&A, &B, &autA, sig, tau});
  CHECK(are_isomorphic(P.add, cyclic_group(156)).has_value());
  FiniteGroup ref = semidirect_by_character(13, S.characters[find_char_of_order(S, 12)],
                                            cyclic_group(12));
  CHECK(are_isomorphic(P.mul, ref).has_value());
}

TEST_CASE("G pair: trivial sigma collapses to a single subgroup") {
  FiniteGroup E = cyclic_group(12);
  CharacterSpace SE = homs_to_cyclic(E, 12);
  auto ctx = make_gpair_context(13, E, SE.characters[SE.trivial_index()]);
  AutomorphismGroup autE = automorphism_group(E);
  HolGroup holE = holomorph(E, autE);
  RegularSubgroup F{&holE, hol_closure(holE, {holE.make(E.hint("c"), 0)})};
  FiniteGroup Fg = F.as_group();
  CharacterSpace SF = homs_to_cyclic(Fg, 12);
  for (int d : {1, 2, 3, 4, 6, 12}) {
    GPair gp = build_G_pair(*ctx, F, SF.characters[find_char_of_order(SF, d)]);
    CHECK(gp.G.elements == gp.Gprime.elements);
  }
}

TEST_CASE("G pair at p=13 over the trivial C12 brace, sigma of order 12") {
  FiniteGroup E = cyclic_group(12);
  CharacterSpace SE = homs_to_cyclic(E, 12);
  int s12 = find_char_of_order(SE, 12);
  auto ctx = make_gpair_context(13, E, SE.characters[s12]);
  CHECK(ctx->hol.order() == 156 * 156);
  AutomorphismGroup autE = automorphism_group(E);
  HolGroup holE = holomorph(E, autE);
  RegularSubgroup F{&holE, hol_closure(holE, {holE.make(E.hint("c"), 0)})};
  FiniteGroup Fg = F.as_group();
  CharacterSpace SF = homs_to_cyclic(Fg, 12);

  SUBCASE("sigma = tau of order 12: distinct, non-conjugate, both Z13 x| C12") {
    GPair gp = build_G_pair(*ctx, F, SF.characters[find_char_of_order(SF, 12)]);
    CHECK(gp.G.elements != gp.Gprime.elements);
    FiniteGroup ref = semidirect_by_character(13, SE.characters[s12], E);
    CHECK(are_isomorphic(gp.G.as_group(), ref).has_value());
    CHECK(are_isomorphic(gp.Gprime.as_group(), ref).has_value());
    CHECK_FALSE(conjugating_element(ctx->hol, gp.G, gp.Gprime).has_value());
  }
  SUBCASE("tau trivial: both isomorphic to the direct product") {
    GPair gp = build_G_pair(*ctx, F, SF.characters[SF.trivial_index()]);
    CHECK(are_isomorphic(gp.G.as_group(), cyclic_group(156)).has_value());
    CHECK(are_isomorphic(gp.Gprime.as_group(), cyclic_group(156)).has_value());
    CHECK_FALSE(conjugating_element(ctx->hol, gp.G, gp.Gprime).has_value());
  }
}

TEST_CASE("G(sigma, tau) realizes exactly the double semidirect product brace") {
  FiniteGroup Z13 = cyclic_group(13);
  SkewBrace A = trivial_brace(Z13);
  BraceAutGroup autA = brace_aut_group(A);
  FiniteGroup E = cyclic_group(12);
  AutomorphismGroup autE = automorphism_group(E);
  HolGroup holE = holomorph(E, autE);
  Elt c = E.hint("c");
  int g7 = aut_index_by_images(autE, E, {{c, E.pow(c, 7)}});
  // non-trivial multiplicative structure: F with circle group C6 x C2
  RegularSubgroup F{&holE, hol_closure(holE, {holE.make(c, g7), holE.make(E.pow(c, 6), 0)})};
  REQUIRE(F.is_regular());
  SkewBrace B = brace_from_regular(E, F);
  CharacterSpace SE = homs_to_cyclic(E, 12);
  auto bchars = brace_characters(B, F, SE);
  FiniteGroup Fg = F.as_group();
  CharacterSpace SF = homs_to_cyclic(Fg, 12);
  for (int si : bchars) {
    if (SE.characters[si].order() > 2) continue; // keep runtime small
    auto ctx = make_gpair_context(13, E, SE.characters[si]);
    for (int ti = 0; ti < SF.size(); ti += 3) {
      GPair gp = build_G_pair(*ctx, F, SF.characters[ti]);
      SkewBrace from_reg = brace_from_regular(ctx->N, gp.G);
      std::vector<int> sigma = character_as_zp_action(SE.characters[si], 13, autA);
      std::vector<int> tau_c = tau_on_carrier(SF.characters[ti], F, 13, autA);
      SkewBrace from_dsdp = double_semidirect(DsdpSpec{&A, &B, &autA, sigma, tau_c});
      CHECK(from_reg.add.table == from_dsdp.add.table);
      CHECK(from_reg.mul.table == from_dsdp.mul.table);
    }
  }
}
