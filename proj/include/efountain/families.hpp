//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// The monoids OF_n, C_n, IO_n and IC_n, indexed by pairs of subsets, the
// natural order and Möbius function of an inverse semigroup, and the
// isomorphisms ℚOF_{n+1} → ℚIO_n and ℚC_{n+1} → ℚIC_n.

#ifndef EFOUNTAIN_FAMILIES_HPP_
#define EFOUNTAIN_FAMILIES_HPP_

#include <algorithm>  // for sort, all_of
#include <bit>        // for popcount
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t, uint8_t, int64_t
#include <map>        // for map
#include <optional>   // for optional
#include <stdexcept>  // for logic_error
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "algebra.hpp"
#include "category.hpp"
#include "exception.hpp"
#include "fountain.hpp"
#include "linalg.hpp"
#include "semigroup.hpp"

namespace efountain {

  //! Two subsets of {1, ..., m} of equal size; element i is bit i - 1.
  struct SubsetPair {
    uint32_t X = 0;
    uint32_t Y = 0;

    friend bool operator==(SubsetPair const&, SubsetPair const&) = default;
  };

  //! The members of a bitmask subset in increasing order, 1-based.
  inline std::vector<size_t> subset_elements(uint32_t mask) {
    std::vector<size_t> out;
    for (size_t i = 0; mask >> i; ++i) {
      if ((mask >> i) & 1) {
        out.push_back(i + 1);
      }
    }
    return out;
  }

  inline std::string subset_string(uint32_t mask) {
    std::string out = "{";
    for (size_t x : subset_elements(mask)) {
      out += (out.size() > 1 ? "," : "") + std::to_string(x);
    }
    return out + "}";
  }

  //! X ≤ Y iff |X| = |Y| and x_i ≤ y_i for every i.
  inline bool subset_leq(uint32_t X, uint32_t Y) {
    auto const x = subset_elements(X), y = subset_elements(Y);
    if (x.size() != y.size()) {
      return false;
    }
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] > y[i]) {
        return false;
      }
    }
    return true;
  }

  //! Every pair of equal-sized subsets of {1, ..., m}, ordered by size, then
  //! X, then Y as integers.
  inline std::vector<SubsetPair> subset_pairs(size_t m) {
    std::vector<SubsetPair> out;
    uint32_t const          top = uint32_t(1) << m;
    for (uint32_t X = 0; X < top; ++X) {
      for (uint32_t Y = 0; Y < top; ++Y) {
        if (std::popcount(X) == std::popcount(Y)) {
          out.push_back({X, Y});
        }
      }
    }
    std::sort(out.begin(), out.end(), [](SubsetPair a, SubsetPair b) {
      int const pa = std::popcount(a.X), pb = std::popcount(b.X);
      return pa != pb ? pa < pb : a.X != b.X ? a.X < b.X : a.Y < b.Y;
    });
    return out;
  }

  inline uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
      return 0;
    }
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  inline uint64_t catalan_number(uint64_t n) {
    return binomial(2 * n, n) / (n + 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps on [n]
  ////////////////////////////////////////////////////////////////////////

  //! Images of 1, ..., n; 0 marks a point outside the domain.
  using Images = std::vector<uint8_t>;

  //! f_{X,Y} in OF_n: y_1 on x ≤ x_1, y_i on x_{i-1} < x ≤ x_i, n beyond x_l.
  inline Images of_function(size_t n, SubsetPair p) {
    auto const x = subset_elements(p.X), y = subset_elements(p.Y);
    Images     f(n);
    for (size_t v = 1; v <= n; ++v) {
      size_t i = 0;
      while (i < x.size() && v > x[i]) {
        ++i;
      }
      f[v - 1] = uint8_t(i < x.size() ? y[i] : n);
    }
    return f;
  }

  //! The pair of an order-preserving f : [n] → [n] with f(n) = n: X holds the
  //! largest point of every kernel class except that of n, Y = im(f) \ {n}.
  inline SubsetPair of_pair(Images const& f) {
    size_t const n = f.size();
    SubsetPair   p;
    for (size_t v = 1; v < n; ++v) {
      if (f[v - 1] != f[v]) {
        p.X |= uint32_t(1) << (v - 1);
        p.Y |= uint32_t(1) << (f[v - 1] - 1);
      }
    }
    return p;
  }

  //! θ_{X,Y} in IO_n: the order-preserving bijection X → Y.
  inline Images io_function(size_t n, SubsetPair p) {
    auto const x = subset_elements(p.X), y = subset_elements(p.Y);
    Images     f(n, 0);
    for (size_t i = 0; i < x.size(); ++i) {
      f[x[i] - 1] = uint8_t(y[i]);
    }
    return f;
  }

  //! (g ∘ f)(v) = g(f(v)), undefined where either side is.
  inline Images compose_images(Images const& g, Images const& f) {
    Images out(f.size(), 0);
    for (size_t v = 0; v < f.size(); ++v) {
      out[v] = f[v] == 0 ? 0 : g[f[v] - 1];
    }
    return out;
  }

  inline std::string images_string(Images const& f) {
    std::string out;
    for (size_t v = 0; v < f.size(); ++v) {
      out += (v ? " " : "") + (f[v] == 0 ? std::string("-") : std::to_string(f[v]));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Families
  ////////////////////////////////////////////////////////////////////////

  enum class FamilyKind { OF, Catalan, IO, IC };

  inline char const* to_string(FamilyKind k) noexcept {
    switch (k) {
      case FamilyKind::OF:
        return "of";
      case FamilyKind::Catalan:
        return "catalan";
      case FamilyKind::IO:
        return "io";
      case FamilyKind::IC:
        return "ic";
    }
    return "?";
  }

  //! Largest family built; |OF_8| = |IO_7| = 3432.
  inline constexpr size_t max_family_size = 3432;

  //! One of the four monoids with its canonical E = {X,X pairs}. Element i
  //! is pairs[i], acting on [n] as images[i].
  struct Family {
    FamilyKind              kind;
    size_t                  n;
    std::vector<SubsetPair> pairs;
    std::vector<Images>     images;
    EStructure              es;

    FiniteSemigroup const& semigroup() const noexcept {
      return es.semigroup();
    }
    std::string name() const {
      return std::string(to_string(kind)) + ":" + std::to_string(n);
    }
    std::optional<size_t> index_of(SubsetPair p) const {
      for (size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i] == p) {
          return i;
        }
      }
      return std::nullopt;
    }
  };

  namespace detail {
    inline Family make_family(FamilyKind              kind,
                              size_t                  n,
                              std::vector<SubsetPair> pairs,
                              char                    prefix) {
      if (pairs.size() > max_family_size) {
        throw Exception(ErrorCode::size_limit,
                        std::string(to_string(kind)) + ":" + std::to_string(n)
                            + " has " + std::to_string(pairs.size())
                            + " elements, more than "
                            + std::to_string(max_family_size));
      }
      bool const               total = kind == FamilyKind::OF
                         || kind == FamilyKind::Catalan;
      std::vector<Images>      images;
      std::map<Images, size_t> index;
      std::vector<std::string> labels;
      std::vector<size_t>      E;
      for (size_t i = 0; i < pairs.size(); ++i) {
        images.push_back(total ? of_function(n, pairs[i])
                               : io_function(n, pairs[i]));
        index.emplace(images.back(), i);
        labels.push_back(prefix + subset_string(pairs[i].X)
                         + subset_string(pairs[i].Y));
        if (pairs[i].X == pairs[i].Y) {
          E.push_back(i);
        }
      }
      size_t const                                N = pairs.size();
      std::vector<FiniteSemigroup::index_type> table(N * N);
      for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < N; ++j) {
          auto it = index.find(compose_images(images[i], images[j]));
          if (it == index.end()) {
            throw std::logic_error(std::string(to_string(kind))
                                   + " is not closed under composition");
          }
          table[i * N + j] = FiniteSemigroup::index_type(it->second);
        }
      }
      auto S = FiniteSemigroup::from_trusted_table(
          N, std::move(table), std::move(labels));
      return Family{kind,
                    n,
                    std::move(pairs),
                    std::move(images),
                    EStructure(std::move(S), std::move(E))};
    }

    inline std::vector<SubsetPair> increasing(std::vector<SubsetPair> pairs) {
      std::erase_if(pairs, [](SubsetPair p) { return !subset_leq(p.X, p.Y); });
      return pairs;
    }
  }  // namespace detail

  //! Order-preserving maps of [n] fixing n.
  inline Family build_OF(size_t n) {
    if (n == 0) {
      throw Exception(ErrorCode::out_of_range_entry, "OF_n needs n >= 1");
    }
    if (binomial(2 * n - 2, n - 1) > max_family_size) {
      throw Exception(ErrorCode::size_limit,
                      "OF_" + std::to_string(n) + " is too large");
    }
    auto F = detail::make_family(FamilyKind::OF, n, subset_pairs(n - 1), 'f');
    if (F.pairs.size() != binomial(2 * n - 2, n - 1)) {
      throw std::logic_error("wrong number of elements in OF_n");
    }
    return F;
  }

  //! Order-preserving, order-increasing maps of [n].
  inline Family build_Catalan(size_t n) {
    if (n == 0) {
      throw Exception(ErrorCode::out_of_range_entry, "C_n needs n >= 1");
    }
    if (binomial(2 * n - 2, n - 1) > max_family_size) {
      throw Exception(ErrorCode::size_limit,
                      "C_" + std::to_string(n) + " is too large");
    }
    auto F = detail::make_family(
        FamilyKind::Catalan, n, detail::increasing(subset_pairs(n - 1)), 'f');
    if (F.pairs.size() != catalan_number(n)) {
      throw std::logic_error("wrong number of elements in C_n");
    }
    if (idempotents(F.semigroup()) != F.es.E()) {
      throw std::logic_error("E(C_n) is not the set of f_{X,X}");
    }
    return F;
  }

  //! Order-preserving partial permutations of [n].
  inline Family build_IO(size_t n) {
    if (binomial(2 * n, n) > max_family_size) {
      throw Exception(ErrorCode::size_limit,
                      "IO_" + std::to_string(n) + " is too large");
    }
    return detail::make_family(FamilyKind::IO, n, subset_pairs(n), 't');
  }

  //! Order-preserving, order-increasing partial permutations of [n].
  inline Family build_IC(size_t n) {
    if (binomial(2 * n, n) > max_family_size) {
      throw Exception(ErrorCode::size_limit,
                      "IC_" + std::to_string(n) + " is too large");
    }
    return detail::make_family(
        FamilyKind::IC, n, detail::increasing(subset_pairs(n)), 't');
  }

  inline Family build_family(FamilyKind kind, size_t n) {
    switch (kind) {
      case FamilyKind::OF:
        return build_OF(n);
      case FamilyKind::Catalan:
        return build_Catalan(n);
      case FamilyKind::IO:
        return build_IO(n);
      case FamilyKind::IC:
        return build_IC(n);
    }
    throw std::logic_error("unknown family");
  }

  //! Parses "of:n", "catalan:n", "io:n" or "ic:n".
  inline std::pair<FamilyKind, size_t> parse_family(std::string const& text) {
    auto const colon = text.find(':');
    auto const bad   = [&] {
      return Exception(ErrorCode::parse_error,
                       "bad family '" + text
                           + "', expected of:n, catalan:n, io:n or ic:n");
    };
    if (colon == std::string::npos || colon + 1 == text.size()) {
      throw bad();
    }
    std::string const name = text.substr(0, colon), num = text.substr(colon + 1);
    if (!std::all_of(num.begin(), num.end(), [](char c) {
          return c >= '0' && c <= '9';
        })
        || num.size() > 3) {
      throw bad();
    }
    size_t const n = std::stoul(num);
    for (auto k : {FamilyKind::OF, FamilyKind::Catalan, FamilyKind::IO,
                   FamilyKind::IC}) {
      if (name == to_string(k)) {
        return {k, n};
      }
    }
    throw bad();
  }

  inline Family build_family(std::string const& selector) {
    auto [kind, n] = parse_family(selector);
    return build_family(kind, n);
  }

  //! f_{Z,W} ⪯ f_{X,Y} iff W ⊊ Y, or W = Y and Z ≤ X.
  inline bool lex_leq(SubsetPair zw, SubsetPair xy) {
    bool const proper = (zw.Y & ~xy.Y) == 0 && zw.Y != xy.Y;
    return proper || (zw.Y == xy.Y && subset_leq(zw.X, xy.X));
  }

  ////////////////////////////////////////////////////////////////////////
  // Inverse semigroups, natural order and Möbius function
  ////////////////////////////////////////////////////////////////////////

  //! Regular with commuting idempotents.
  inline bool is_inverse_semigroup(FiniteSemigroup const& S) {
    auto const E = idempotents(S);
    for (size_t e : E) {
      for (size_t f : E) {
        if (S.product(e, f) != S.product(f, e)) {
          return false;
        }
      }
    }
    for (size_t a = 0; a < S.size(); ++a) {
      if (!is_regular_element(S, a)) {
        return false;
      }
    }
    return true;
  }

  //! τ ≤ θ iff τ = θe for an idempotent e, as a relation with below(θ).
  inline Preorder natural_order(FiniteSemigroup const& S) {
    if (!is_inverse_semigroup(S)) {
      throw Exception(ErrorCode::not_inverse,
                      "the natural order needs an inverse semigroup");
    }
    Preorder P(S.size());
    auto const E = idempotents(S);
    for (size_t theta = 0; theta < S.size(); ++theta) {
      for (size_t e : E) {
        P.set(S.product(theta, e), theta);
      }
    }
    return P;
  }

  inline bool natural_order(FiniteSemigroup const& S, size_t tau, size_t theta) {
    return natural_order(S).leq(tau, theta);
  }

  //! μ(x, y) for x ≤ y; zero elsewhere.
  using MobiusTable = std::vector<std::vector<int64_t>>;

  //! Σ_{x ≤ z ≤ y} μ(z, y) = δ(x, y) for every x ≤ y.
  inline Verdict mobius_identity(Preorder const& P, MobiusTable const& mu) {
    size_t const n = P.size();
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        if (!P.leq(x, y)) {
          continue;
        }
        int64_t sum = 0;
        for (size_t z = 0; z < n; ++z) {
          if (P.leq(x, z) && P.leq(z, y)) {
            sum += mu[z][y];
          }
        }
        if (sum != (x == y ? 1 : 0)) {
          return Verdict{false,
                         Witness{{x, y},
                                 "sum of mu(z, y) over the interval is "
                                     + std::to_string(sum)}};
        }
      }
    }
    return {};
  }

  //! μ(x, x) = 1 and μ(x, y) = -Σ_{x ≤ z < y} μ(x, z).
  inline MobiusTable mobius(Preorder const& P) {
    size_t const n = P.size();
    for (size_t x = 0; x < n; ++x) {
      if (!P.leq(x, x)) {
        throw Exception(ErrorCode::not_partial_order,
                        "not reflexive at " + std::to_string(x));
      }
      for (size_t y = 0; y < n; ++y) {
        if (x != y && P.leq(x, y) && P.leq(y, x)) {
          throw Exception(ErrorCode::not_partial_order,
                          "not antisymmetric at " + std::to_string(x) + ", "
                              + std::to_string(y));
        }
        for (size_t z = 0; z < n; ++z) {
          if (P.leq(x, y) && P.leq(y, z) && !P.leq(x, z)) {
            throw Exception(ErrorCode::not_partial_order,
                            "not transitive at " + std::to_string(x) + ", "
                                + std::to_string(y) + ", "
                                + std::to_string(z));
          }
        }
      }
    }
    // A linear extension: fewer elements below comes first.
    std::vector<size_t> order(n), below(n, 0);
    for (size_t y = 0; y < n; ++y) {
      order[y] = y;
      for (size_t z = 0; z < n; ++z) {
        below[y] += P.leq(z, y);
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return below[a] < below[b];
    });
    MobiusTable mu(n, std::vector<int64_t>(n, 0));
    for (size_t x = 0; x < n; ++x) {
      for (size_t y : order) {
        if (!P.leq(x, y)) {
          continue;
        }
        if (x == y) {
          mu[x][y] = 1;
          continue;
        }
        int64_t sum = 0;
        for (size_t z = 0; z < n; ++z) {
          if (z != y && P.leq(x, z) && P.leq(z, y)) {
            sum += mu[x][z];
          }
        }
        mu[x][y] = -sum;
      }
    }
    if (!mobius_identity(P, mu).holds) {
      throw std::logic_error("Mobius recursion violates the delta identity");
    }
    return mu;
  }

  ////////////////////////////////////////////////////////////////////////
  // ψ and the end-to-end isomorphisms
  ////////////////////////////////////////////////////////////////////////

  //! ψ : ℚC(S) → ℚS, C(θ) ↦ Σ_{τ ≤ θ} μ(τ, θ) τ, for an inverse semigroup S
  //! with E = E(S).
  inline LinearMap psi(EStructure const& ES) {
    auto const   P  = natural_order(ES.semigroup());
    auto const   mu = mobius(P);
    size_t const n  = ES.size();
    LinearMap    map{BasisTag::category, BasisTag::semigroup, Matrix(n, n)};
    for (size_t theta = 0; theta < n; ++theta) {
      for (size_t tau = 0; tau < n; ++tau) {
        if (P.leq(tau, theta)) {
          map.matrix(tau, theta) = Rational(static_cast<long>(mu[tau][theta]));
        }
      }
    }
    return map;
  }

  //! The inverse of φ, for reduced E-Fountain semigroups where φ is
  //! invertible.
  inline LinearMap phi_inverse(EStructure const& ES) {
    auto inv = inverse(phi(ES).matrix);
    if (!inv) {
      throw Exception(ErrorCode::dimension_mismatch, "phi is not invertible");
    }
    return LinearMap{BasisTag::category, BasisTag::semigroup, std::move(*inv)};
  }

  //! An isomorphism ℚA → ℚB assembled as ψ ∘ P ∘ φ, with its checks.
  struct FamilyIsomorphism {
    Family    source;
    Family    target;
    LinearMap map;
    //! C(source) ≅ C(target) via f_{X,Y} ↦ θ_{X,Y}, verified.
    bool category_identified = false;
    //! ψ ∘ φ_target is the identity on ℚtarget.
    bool psi_inverts_phi = false;
    //! The identity of the source goes to the identity of the target.
    bool unit_preserved = false;
    Verdict hom;
    bool    iso = false;

    bool holds() const {
      return category_identified && psi_inverts_phi && unit_preserved
             && hom.holds && iso;
    }
  };

  namespace detail {
    inline FamilyIsomorphism assemble_iso(Family src, Family tgt, LinearMap psi_map) {
      FamilyIsomorphism out{
          std::move(src), std::move(tgt), {}, false, false, false, {}, false};
      auto const&       A = out.source;
      auto const&       B = out.target;
      auto const        CA = associated_category(A.es);
      auto const        CB = associated_category(B.es);
      // Both sides index elements and objects by the same subset pairs in
      // the same order; the candidate is still checked.
      Functor  candidate;
      Matrix   perm(B.pairs.size(), A.pairs.size());
      bool     matched = A.pairs.size() == B.pairs.size();
      for (size_t i = 0; matched && i < A.pairs.size(); ++i) {
        auto j = B.index_of(A.pairs[i]);
        matched = j.has_value();
        if (matched) {
          candidate.morphisms.push_back(*j);
          perm(*j, i) = 1;
        }
      }
      for (size_t o = 0; matched && o < A.es.E().size(); ++o) {
        size_t const e = A.es.E()[o];
        candidate.objects.push_back(B.es.e_position(candidate.morphisms[e]));
      }
      if (!matched) {
        return out;
      }
      out.category_identified
          = category_isomorphic(CA, CB, candidate).has_value()
            && is_isomorphism(CA, CB, candidate);
      LinearMap const P{BasisTag::category, BasisTag::category, perm};
      LinearMap const phi_A = phi(A.es);
      out.map               = psi_map.after(P).after(phi_A);
      out.psi_inverts_phi
          = psi_map.after(phi(B.es)).matrix == Matrix::identity(B.pairs.size());
      auto const& SA = A.semigroup();
      auto const& SB = B.semigroup();
      out.unit_preserved
          = SA.identity() && SB.identity()
            && out.map.image_of_basis(*SA.identity())
                   == AlgebraElement::basis(BasisTag::semigroup, *SB.identity());
      out.hom = check_algebra_hom(out.map, semigroup_algebra(SA), semigroup_algebra(SB));
      out.iso = check_iso(out.map);
      return out;
    }
  }  // namespace detail

  //! ℚOF_{n+1} → ℚC(OF_{n+1}) → ℚC(IO_n) → ℚIO_n.
  inline FamilyIsomorphism iso_OF_IO(size_t n) {
    auto IO = build_IO(n);
    auto p  = psi(IO.es);
    return detail::assemble_iso(build_OF(n + 1), std::move(IO), std::move(p));
  }

  //! ℚC_{n+1} → ℚC(C_{n+1}) → ℚC(IC_n) → ℚIC_n, with ψ = φ(IC_n)⁻¹ as IC_n
  //! is not inverse.
  inline FamilyIsomorphism iso_C_IC(size_t n) {
    auto IC = build_IC(n);
    auto p  = phi_inverse(IC.es);
    return detail::assemble_iso(build_Catalan(n + 1), std::move(IC), std::move(p));
  }

}  // namespace efountain

#endif  // EFOUNTAIN_FAMILIES_HPP_
