#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "efountain/families.hpp"
#include "efountain/fountain.hpp"
#include "support.hpp"

using namespace efountain;
using efountain::test::corpus;

namespace {
  std::set<size_t> right_identities(FiniteSemigroup const& S,
                                    std::vector<size_t> const& E, size_t a) {
    std::set<size_t> out;
    for (size_t e : E) {
      if (S.product(a, e) == a) {
        out.insert(e);
      }
    }
    return out;
  }
  std::set<size_t> left_identities(FiniteSemigroup const& S,
                                   std::vector<size_t> const& E, size_t a) {
    std::set<size_t> out;
    for (size_t e : E) {
      if (S.product(e, a) == a) {
        out.insert(e);
      }
    }
    return out;
  }

  size_t index(Family const& F, uint32_t X, uint32_t Y) {
    return *F.index_of({X, Y});
  }

  // The direct-product monoid Z/2 with E = {identity}.
  FiniteSemigroup z2() {
    return FiniteSemigroup::from_table({{0, 1}, {1, 0}});
  }
}  // namespace

TEST_CASE("tilde classes agree with identity sets", "[fountain][oracle]") {
  for (auto const& e : corpus()) {
    auto const tc = tilde_classes(e.semigroup, e.E);
    for (size_t a = 0; a < e.semigroup.size(); ++a) {
      for (size_t b = 0; b < e.semigroup.size(); ++b) {
        REQUIRE(tc.ltilde.same(a, b)
                == (right_identities(e.semigroup, e.E, a)
                    == right_identities(e.semigroup, e.E, b)));
        REQUIRE(tc.rtilde.same(a, b)
                == (left_identities(e.semigroup, e.E, a)
                    == left_identities(e.semigroup, e.E, b)));
      }
    }
  }
}

TEST_CASE("E = {1} in a monoid", "[fountain]") {
  auto const S  = z2();
  auto const tc = tilde_classes(S, {0});
  REQUIRE(tc.ltilde.count() == 1);
  auto const check = e_fountain_check(S, {0});
  REQUIRE(check.fountain);
  REQUIRE(check.reduced);
  EStructure ES(S, {0});
  REQUIRE(congruence_condition(ES).holds);
  REQUIRE(gra_check(ES).holds);
  REQUIRE(gra_simplified_check(ES).holds);
  REQUIRE(gla_check(ES).holds);
  auto const eq = gra_action_equivalence(ES);
  REQUIRE(eq.gra.holds);
  REQUIRE(eq.all_r_alpha_homs);
  auto const homs = enumerate_action_homs(ES, 0, 0);
  // L~(1) is all of Z/2; the homomorphisms are the two translations x ↦ xα
  REQUIRE(homs.size() == 2);
}

TEST_CASE("invalid E is rejected", "[fountain]") {
  auto const S = test::null2();
  try {
    tilde_classes(S, {1});
    FAIL("non-idempotent accepted");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::not_idempotent_in_e);
  }
  try {
    EStructure(S, {});
    FAIL("empty E accepted");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::invalid_e);
  }
  try {
    EStructure(S, {5});
    FAIL("out of range E accepted");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::invalid_e);
  }
  // the null semigroup: L~(1) = {1} contains no element of E = {0}
  auto const check = e_fountain_check(S, {0});
  REQUIRE_FALSE(check.fountain);
  REQUIRE(check.witness.has_value());
  try {
    EStructure(S, {0});
    FAIL("non-fountain accepted");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::not_reduced_e_fountain);
  }
  // right zero semigroup: ef = f but fe = e, so E = S is not reduced
  auto const R = FiniteSemigroup::from_table({{0, 1}, {0, 1}});
  auto const r = e_fountain_check(R, {0, 1});
  REQUIRE(r.fountain);
  REQUIRE_FALSE(r.reduced);
  REQUIRE(r.witness->elements == std::vector<size_t>{0, 1});
}

TEST_CASE("stars and pluses in OF_n and IO_n", "[fountain]") {
  auto const OF3 = build_OF(3);
  size_t const f21 = index(OF3, 0b10, 0b01);
  REQUIRE(OF3.es.star(f21) == index(OF3, 0b10, 0b10));
  REQUIRE(OF3.es.plus(f21) == index(OF3, 0b01, 0b01));
  for (size_t n = 1; n <= 4; ++n) {
    auto const F = build_OF(n);
    for (size_t a = 0; a < F.pairs.size(); ++a) {
      auto const p = F.pairs[a];
      REQUIRE(F.es.star(a) == index(F, p.X, p.X));
      REQUIRE(F.es.plus(a) == index(F, p.Y, p.Y));
    }
    auto const g = green_classes(F.semigroup());
    REQUIRE(F.es.ltilde() == g.l_class);
    REQUIRE(F.es.rtilde() == g.r_class);
  }
  // L~-class sizes in OF_3 are 1, 2, 2, 1
  std::vector<size_t> sizes;
  for (auto const& c : OF3.es.ltilde().classes()) {
    sizes.push_back(c.size());
  }
  std::sort(sizes.begin(), sizes.end());
  REQUIRE(sizes == std::vector<size_t>{1, 1, 2, 2});
  REQUIRE(build_OF(4).es.ltilde().count() == 8);

  auto const IO2 = build_IO(2);
  for (size_t a = 0; a < IO2.pairs.size(); ++a) {
    REQUIRE(IO2.es.star(a) == index(IO2, IO2.pairs[a].X, IO2.pairs[a].X));
  }
}

TEST_CASE("stars are minimal identities", "[fountain][property]") {
  for (auto const& entry : corpus()) {
    auto const  ES = test::structure_of(entry);
    auto const& S  = ES.semigroup();
    for (size_t a = 0; a < S.size(); ++a) {
      REQUIRE(ES.star(a) == ES.star(ES.star(a)));
      for (size_t e : ES.E()) {
        if (S.product(a, e) == a) {
          REQUIRE(natural_order_leq(S, ES.star(a), e));
        }
        if (S.product(e, a) == a) {
          REQUIRE(natural_order_leq(S, ES.plus(a), e));
        }
      }
    }
    for (size_t e : ES.E()) {
      REQUIRE(ES.star(e) == e);
      REQUIRE(ES.plus(e) == e);
    }
  }
}

TEST_CASE("the GRA-failing fixture", "[fountain]") {
  auto const ES = test::gra_failing();
  REQUIRE(congruence_condition(ES).holds);
  auto const v = gra_check(ES);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  REQUIRE(v.witness->elements.size() == 3);
  // the witness really violates the identity
  auto const& w = v.witness->elements;
  size_t const a = w[0], e = w[1], f = w[2];
  size_t const inner = ES.product(a, ES.star(ES.product(e, a, f)));
  REQUIRE(ES.star(ES.product(e, ES.plus(inner))) != ES.plus(inner));
  REQUIRE_FALSE(gra_simplified_check(ES).holds);
  auto const eq = gra_action_equivalence(ES);
  REQUIRE_FALSE(eq.all_r_alpha_homs);
  REQUIRE(eq.failing_alpha.has_value());
  // its dual fails the left identity
  REQUIRE_FALSE(gla_check(dual(ES)).holds);
  REQUIRE(gla_check(ES).holds);
}

TEST_CASE("theorem-level equivalences on the corpus", "[fountain][property]") {
  REQUIRE(corpus().size() >= 50);
  for (auto const& entry : corpus()) {
    INFO(entry.name);
    auto const ES = test::structure_of(entry);
    REQUIRE(congruence_condition(ES).holds);
    bool const gra = gra_check(ES).holds;
    REQUIRE(gra_simplified_check(ES).holds == gra);
    REQUIRE(gra_action_equivalence(ES).agrees());
    // left identity on S is the right identity on the dual
    REQUIRE(gla_check(ES).holds == gra_check(dual(ES)).holds);
  }
}

TEST_CASE("homomorphisms of partial actions are the maps r_alpha", "[fountain][property]") {
  for (auto const& entry : corpus()) {
    INFO(entry.name);
    auto const ES = test::structure_of(entry);
    if (!gra_check(ES).holds) {
      continue;
    }
    for (size_t e : ES.E()) {
      for (size_t f : ES.E()) {
        auto const homs = enumerate_action_homs(ES, e, f);
        std::set<std::vector<size_t>> expected, got;
        for (size_t a = 0; a < ES.size(); ++a) {
          if (ES.plus(a) == e && ES.star(a) == f) {
            expected.insert(r_alpha(ES, a).images());
          }
        }
        for (auto const& F : homs) {
          got.insert(F.images());
        }
        REQUIRE(got == expected);
      }
    }
  }
}

TEST_CASE("r_alpha examples", "[fountain]") {
  auto const OF3 = build_OF(3);
  auto const& ES = OF3.es;
  for (size_t a = 0; a < ES.size(); ++a) {
    auto const F = r_alpha(ES, a);
    REQUIRE(F.is_total());
    // r_α(α⁺) = α
    auto const from = ES.ltilde_class(ES.plus(a));
    auto const to   = ES.ltilde_class(ES.star(a));
    size_t const i  = std::find(from.begin(), from.end(), ES.plus(a)) - from.begin();
    REQUIRE(to[F[i]] == a);
    if (ES.in_e(a)) {
      std::vector<size_t> id(from.size());
      std::iota(id.begin(), id.end(), 0);
      REQUIRE(F.images() == id);
    }
  }
  size_t const f11 = index(OF3, 1, 1), f22 = index(OF3, 2, 2), f21 = index(OF3, 2, 1);
  auto const homs = enumerate_action_homs(ES, f11, f22);
  REQUIRE(homs.size() == 1);
  REQUIRE(homs[0] == r_alpha(ES, f21));
  auto const top = index(OF3, 3, 3), bottom = index(OF3, 0, 0);
  // no α has α⁺ = f_{[2],[2]} and α* = f_{∅,∅}
  REQUIRE(enumerate_action_homs(ES, top, bottom).empty());

  try {
    enumerate_action_homs(build_OF(5).es, index(build_OF(5), 0b0011, 0b0011),
                          index(build_OF(5), 0b0011, 0b0011), 10);
    FAIL("budget not enforced");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::budget_exceeded);
  }
  try {
    is_partial_action_hom(ES, PartialMap(1, 1), f11, f22);
    FAIL("mismatched map accepted");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::domain_mismatch);
  }
}

TEST_CASE("sweeps give the same witness with any number of workers", "[fountain]") {
  auto const ES  = test::gra_failing();
  auto const one = gra_check(ES);
  set_jobs(4);
  auto const four = gra_check(ES);
  set_jobs(1);
  REQUIRE(one.witness->elements == four.witness->elements);
  std::vector<Verdict> many;
  for (size_t j : {1, 2, 8}) {
    set_jobs(j);
    many.push_back(gra_check(build_OF(5).es));
  }
  set_jobs(1);
  for (auto const& v : many) {
    REQUIRE(v.holds);
  }
}
