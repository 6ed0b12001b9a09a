#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "efountain/algebra.hpp"
#include "efountain/families.hpp"
#include "support.hpp"

using namespace efountain;

namespace {
  // Every order-preserving f : [n] → [n] with f(n) = n, by brute force.
  std::set<Images> of_maps(size_t n) {
    std::set<Images> out;
    Images           f(n, 1);
    while (true) {
      bool ok = f[n - 1] == n;
      for (size_t v = 1; ok && v < n; ++v) {
        ok = f[v - 1] <= f[v];
      }
      if (ok) {
        out.insert(f);
      }
      size_t v = 0;
      while (v < n && f[v] == n) {
        f[v++] = 1;
      }
      if (v == n) {
        return out;
      }
      ++f[v];
    }
  }

  // Order-preserving partial injections of [n], by brute force.
  size_t io_count(size_t n) {
    size_t count = 0;
    Images f(n, 0);
    while (true) {
      bool   ok   = true;
      size_t last = 0;
      for (size_t v = 0; ok && v < n; ++v) {
        if (f[v] != 0) {
          ok   = f[v] > last;
          last = f[v];
        }
      }
      count += ok;
      size_t v = 0;
      while (v < n && f[v] == n) {
        f[v++] = 0;
      }
      if (v == n) {
        return count;
      }
      ++f[v];
    }
  }

  SubsetPair pair(std::initializer_list<size_t> X, std::initializer_list<size_t> Y) {
    SubsetPair p;
    for (size_t x : X) {
      p.X |= uint32_t(1) << (x - 1);
    }
    for (size_t y : Y) {
      p.Y |= uint32_t(1) << (y - 1);
    }
    return p;
  }
}  // namespace

TEST_CASE("OF_n is every order-preserving map fixing n", "[families][oracle]") {
  for (size_t n = 1; n <= 6; ++n) {
    INFO(n);
    auto const F = build_OF(n);
    REQUIRE(std::set<Images>(F.images.begin(), F.images.end()) == of_maps(n));
    REQUIRE(F.pairs.size() == binomial(2 * n - 2, n - 1));
    for (size_t i = 0; i < F.pairs.size(); ++i) {
      REQUIRE(of_pair(F.images[i]) == F.pairs[i]);
      REQUIRE(of_function(n, F.pairs[i]) == F.images[i]);
    }
  }
  std::vector<size_t> sizes;
  for (size_t n = 1; n <= 7; ++n) {
    sizes.push_back(build_OF(n).pairs.size());
  }
  REQUIRE(sizes == std::vector<size_t>{1, 2, 6, 20, 70, 252, 924});
}

TEST_CASE("the six elements of OF_3", "[families]") {
  auto const F = build_OF(3);
  std::set<Images> const listed = {{1, 2, 3}, {1, 3, 3}, {2, 3, 3},
                                   {1, 1, 3}, {2, 2, 3}, {3, 3, 3}};
  REQUIRE(std::set<Images>(F.images.begin(), F.images.end()) == listed);
  REQUIRE(F.semigroup().label(*F.index_of(pair({1, 2}, {1, 2}))) == "f{1,2}{1,2}");
  REQUIRE(images_string(F.images[*F.index_of(pair({1}, {2}))]) == "2 3 3");
  REQUIRE(F.es.E().size() == 4);
  REQUIRE(idempotents(F.semigroup()).size() == 5);
  REQUIRE(build_OF(3).name() == "of:3");
}

TEST_CASE("f_{Y,Z} f_{X,Y} = f_{X,Z}", "[families]") {
  for (size_t n = 1; n <= 5; ++n) {
    auto const  F = build_OF(n);
    auto const& S = F.semigroup();
    for (size_t i = 0; i < F.pairs.size(); ++i) {
      for (size_t j = 0; j < F.pairs.size(); ++j) {
        if (F.pairs[i].X == F.pairs[j].Y) {
          auto const expected = F.index_of({F.pairs[j].X, F.pairs[i].Y});
          REQUIRE(expected.has_value());
          REQUIRE(S.product(i, j) == *expected);
        }
      }
    }
  }
  auto const F = build_OF(3);
  REQUIRE(F.semigroup().product(*F.index_of(pair({1}, {2})), *F.index_of(pair({2}, {1})))
          == *F.index_of(pair({2}, {2})));
}

TEST_CASE("Green's relations of OF_n by subsets", "[families][property]") {
  for (size_t n = 1; n <= 5; ++n) {
    auto const F = build_OF(n);
    auto const g = green_classes(F.semigroup());
    for (size_t i = 0; i < F.pairs.size(); ++i) {
      for (size_t j = 0; j < F.pairs.size(); ++j) {
        auto const &p = F.pairs[i], &q = F.pairs[j];
        REQUIRE(g.r_class.same(i, j) == (p.Y == q.Y));
        REQUIRE(g.l_class.same(i, j) == (p.X == q.X));
        REQUIRE(g.j_class.same(i, j) == (std::popcount(p.X) == std::popcount(q.X)));
      }
    }
    REQUIRE(g.j_class.count() == n);
  }
  // J_k of OF_5 has C(4, k)² elements
  auto const F = build_OF(5);
  auto const g = green_classes(F.semigroup());
  for (auto const& cls : g.j_class.classes()) {
    size_t const k = std::popcount(F.pairs[cls.front()].X);
    REQUIRE(cls.size() == binomial(4, k) * binomial(4, k));
  }
}

TEST_CASE("OF_n satisfies every condition", "[families][property]") {
  for (size_t n = 1; n <= 5; ++n) {
    INFO(n);
    auto const F     = build_OF(n);
    auto const check = e_fountain_check(F.semigroup(), F.es.E());
    REQUIRE(check.fountain);
    REQUIRE(check.reduced);
    REQUIRE(congruence_condition(F.es).holds);
    REQUIRE(gra_check(F.es).holds);
    REQUIRE(gla_check(F.es).holds);
    auto const flags = structure_flags(F.semigroup(), green_classes(F.semigroup()));
    REQUIRE(flags.regular);
    REQUIRE(flags.h_trivial);
    // left-triangle is contained in the lexicographic order
    for (size_t a = 0; a < F.pairs.size(); ++a) {
      for (size_t c = 0; c < F.pairs.size(); ++c) {
        if (triangle_left(F.es, c, a)) {
          REQUIRE(lex_leq(F.pairs[c], F.pairs[a]));
        }
      }
    }
  }
}

TEST_CASE("the lexicographic order is a partial order", "[families]") {
  auto const pairs = build_OF(4).pairs;
  for (auto const& a : pairs) {
    REQUIRE(lex_leq(a, a));
    for (auto const& b : pairs) {
      if (lex_leq(a, b) && lex_leq(b, a)) {
        REQUIRE(a == b);
      }
      for (auto const& c : pairs) {
        if (lex_leq(a, b) && lex_leq(b, c)) {
          REQUIRE(lex_leq(a, c));
        }
      }
    }
  }
}

TEST_CASE("Catalan monoids", "[families]") {
  REQUIRE(build_Catalan(3).pairs.size() == 5);
  REQUIRE(build_Catalan(4).pairs.size() == 14);
  REQUIRE(build_Catalan(5).pairs.size() == 42);
  for (size_t n = 1; n <= 5; ++n) {
    INFO(n);
    auto const C = build_Catalan(n);
    auto const O = build_OF(n);
    REQUIRE(C.pairs.size() == catalan_number(n));
    REQUIRE(green_classes(C.semigroup()).j_class.count() == C.pairs.size());
    REQUIRE(gra_check(C.es).holds);
    REQUIRE(gla_check(C.es).holds);
    // E of OF_n is the idempotent set of C_n
    std::vector<SubsetPair>     e_of, e_c;
    for (size_t e : O.es.E()) {
      e_of.push_back(O.pairs[e]);
    }
    for (size_t e : idempotents(C.semigroup())) {
      e_c.push_back(C.pairs[e]);
    }
    REQUIRE(e_of == e_c);
  }
  REQUIRE(idempotents(build_OF(3).semigroup()).size() == 5);
}

TEST_CASE("IO_n and IC_n", "[families]") {
  REQUIRE(build_IO(2).pairs.size() == 6);
  REQUIRE(build_IO(3).pairs.size() == 20);
  for (size_t n = 0; n <= 4; ++n) {
    INFO(n);
    auto const  I = build_IO(n);
    auto const& S = I.semigroup();
    REQUIRE(I.pairs.size() == io_count(n));
    REQUIRE(is_inverse_semigroup(S));
    REQUIRE(idempotents(S) == I.es.E());
    for (size_t i = 0; i < I.pairs.size(); ++i) {
      size_t const inv = *I.index_of({I.pairs[i].Y, I.pairs[i].X});
      REQUIRE(S.product(S.product(i, inv), i) == i);
      REQUIRE(S.product(S.product(inv, i), inv) == inv);
      size_t count = 0;
      for (size_t j = 0; j < I.pairs.size(); ++j) {
        count += S.product(S.product(i, j), i) == i && S.product(S.product(j, i), j) == j;
      }
      REQUIRE(count == 1);
    }
  }
  for (size_t n = 2; n <= 4; ++n) {
    INFO(n);
    auto const C = build_IC(n);
    REQUIRE(C.pairs.size() == catalan_number(n + 1));
    REQUIRE_FALSE(is_inverse_semigroup(C.semigroup()));
    auto const check = e_fountain_check(C.semigroup(), C.es.E());
    REQUIRE(check.fountain);
    REQUIRE(check.reduced);
    REQUIRE(congruence_condition(C.es).holds);
    REQUIRE(gra_check(C.es).holds);
    REQUIRE(gla_check(C.es).holds);
  }
  // IC_1 = {θ_∅, id} is a semilattice
  REQUIRE(is_inverse_semigroup(build_IC(1).semigroup()));
}

TEST_CASE("natural order on IO_n", "[families]") {
  auto const  I = build_IO(2);
  auto const& S = I.semigroup();
  auto const  P = natural_order(S);
  size_t const bottom = *I.index_of({0, 0});
  for (size_t t = 0; t < I.pairs.size(); ++t) {
    REQUIRE(P.leq(t, t));
    REQUIRE(P.leq(bottom, t));
  }
  REQUIRE_FALSE(natural_order(S, *I.index_of(pair({1}, {2})), *I.index_of(pair({1, 2}, {1, 2}))));
  REQUIRE(natural_order(S, *I.index_of(pair({1}, {1})), *I.index_of(pair({1, 2}, {1, 2}))));
  // restriction oracle
  for (size_t n = 1; n <= 3; ++n) {
    auto const J = build_IO(n);
    auto const Q = natural_order(J.semigroup());
    for (size_t t = 0; t < J.pairs.size(); ++t) {
      for (size_t u = 0; u < J.pairs.size(); ++u) {
        bool restricts = true;
        for (size_t v = 0; v < n; ++v) {
          if (J.images[t][v] != 0 && J.images[t][v] != J.images[u][v]) {
            restricts = false;
          }
        }
        REQUIRE(Q.leq(t, u) == restricts);
      }
    }
  }
  try {
    natural_order(build_Catalan(3).semigroup());
    FAIL("natural order on a non-inverse semigroup");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::not_inverse);
  }
}

TEST_CASE("Mobius function of the natural order", "[families][oracle]") {
  for (size_t n = 1; n <= 3; ++n) {
    auto const I  = build_IO(n);
    auto const P  = natural_order(I.semigroup());
    auto const mu = mobius(P);
    REQUIRE(mobius_identity(P, mu).holds);
    // intervals below θ are Boolean lattices of restrictions
    for (size_t t = 0; t < I.pairs.size(); ++t) {
      for (size_t u = 0; u < I.pairs.size(); ++u) {
        if (P.leq(t, u)) {
          int const d = std::popcount(I.pairs[u].X) - std::popcount(I.pairs[t].X);
          REQUIRE(mu[t][u] == (d % 2 ? -1 : 1));
        }
      }
    }
  }
  auto const I = build_IO(2);
  auto const mu = mobius(natural_order(I.semigroup()));
  REQUIRE(mu[*I.index_of({0, 0})][*I.index_of(pair({1, 2}, {1, 2}))] == 1);

  Preorder cycle(2);
  cycle.set(0, 0);
  cycle.set(1, 1);
  cycle.set(0, 1);
  cycle.set(1, 0);
  try {
    mobius(cycle);
    FAIL("cycle accepted");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::not_partial_order);
  }
  Preorder chain(3);
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = i; j < 3; ++j) {
      chain.set(i, j);
    }
  }
  auto const m = mobius(chain);
  REQUIRE(m[0][1] == -1);
  REQUIRE(m[0][2] == 0);
}

TEST_CASE("psi inverts phi on IO_n", "[families]") {
  auto const I   = build_IO(2);
  auto const map = psi(I.es);
  size_t const bottom = *I.index_of({0, 0});
  REQUIRE(map.image_of_basis(bottom) == AlgebraElement::basis(BasisTag::semigroup, bottom));
  size_t const t = *I.index_of(pair({1}, {2}));
  AlgebraElement expected(BasisTag::semigroup);
  expected.add(t, Rational(1));
  expected.add(bottom, Rational(-1));
  REQUIRE(map.image_of_basis(t) == expected);
  for (size_t n = 1; n <= 3; ++n) {
    auto const J = build_IO(n);
    REQUIRE(psi(J.es).after(phi(J.es)).matrix == Matrix::identity(J.pairs.size()));
  }
  auto const C = build_IC(2);
  REQUIRE(phi_inverse(C.es).after(phi(C.es)).matrix == Matrix::identity(5));
}

TEST_CASE("QOF_{n+1} = QIO_n and QC_{n+1} = QIC_n", "[families]") {
  for (size_t n = 1; n <= 3; ++n) {
    INFO(n);
    auto const a = iso_OF_IO(n);
    REQUIRE(a.category_identified);
    REQUIRE(a.psi_inverts_phi);
    REQUIRE(a.unit_preserved);
    REQUIRE(a.hom.holds);
    REQUIRE(a.iso);
    REQUIRE(a.map.matrix.rows() == binomial(2 * n, n));
    auto const b = iso_C_IC(n);
    REQUIRE(b.holds());
    REQUIRE(b.map.matrix.rows() == catalan_number(n + 1));
  }
}

TEST_CASE("family selectors", "[families]") {
  REQUIRE(parse_family("of:3") == std::pair{FamilyKind::OF, size_t(3)});
  REQUIRE(parse_family("catalan:4").first == FamilyKind::Catalan);
  REQUIRE(build_family("ic:2").pairs.size() == 5);
  for (char const* bad : {"of", "of:", "xx:3", "of:-1", "of:3x", "OF:3", "of:12345"}) {
    INFO(bad);
    try {
      parse_family(bad);
      FAIL("accepted");
    } catch (Exception const& e) {
      REQUIRE(e.code() == ErrorCode::parse_error);
    }
  }
  REQUIRE_THROWS_AS(build_OF(0), Exception);
  try {
    build_OF(9);
    FAIL("OF_9 built");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::size_limit);
  }
  REQUIRE(build_OF(8).pairs.size() == max_family_size);
}
