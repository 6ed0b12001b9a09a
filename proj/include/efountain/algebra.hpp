//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// Semigroup and category algebras over ℚ, the map φ : ℚS → ℚC(S), the
// ℚS-modules ℚL̃(e) and their homomorphism spaces, and a semisimplicity test.

#ifndef EFOUNTAIN_ALGEBRA_HPP_
#define EFOUNTAIN_ALGEBRA_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <set>       // for set
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "category.hpp"
#include "exception.hpp"
#include "fountain.hpp"
#include "linalg.hpp"
#include "semigroup.hpp"

namespace efountain {

  //! A finite-dimensional algebra in which the product of two basis elements
  //! is either a basis element or zero. Semigroup algebras and category
  //! algebras are of this kind.
  class BasisAlgebra {
   public:
    BasisAlgebra() = default;
    BasisAlgebra(BasisTag                      tag,
                 size_t                        dim,
                 std::vector<size_t>           table,
                 std::optional<AlgebraElement> unit)
        : _tag(tag), _dim(dim), _table(std::move(table)), _unit(std::move(unit)) {}

    BasisTag tag() const noexcept {
      return _tag;
    }
    size_t dim() const noexcept {
      return _dim;
    }
    std::optional<AlgebraElement> const& unit() const noexcept {
      return _unit;
    }

    //! b_i · b_j as a basis index, or UNDEFINED for zero.
    size_t basis_product(size_t i, size_t j) const {
      return _table[i * _dim + j];
    }

    AlgebraElement basis(size_t i) const {
      return AlgebraElement::basis(_tag, i);
    }

    AlgebraElement multiply(AlgebraElement const& x,
                            AlgebraElement const& y) const {
      if (x.tag() != _tag || y.tag() != _tag) {
        throw Exception(ErrorCode::basis_mismatch,
                        std::string("multiplying outside the ")
                            + to_string(_tag) + " algebra");
      }
      AlgebraElement out(_tag);
      for (auto const& [i, a] : x.coefficients()) {
        for (auto const& [j, b] : y.coefficients()) {
          if (i >= _dim || j >= _dim) {
            throw Exception(ErrorCode::dimension_mismatch,
                            "basis index outside the algebra");
          }
          size_t const k = basis_product(i, j);
          if (k != UNDEFINED) {
            out.add(k, a * b);
          }
        }
      }
      return out;
    }

   private:
    BasisTag                      _tag = BasisTag::semigroup;
    size_t                        _dim = 0;
    std::vector<size_t>           _table;
    std::optional<AlgebraElement> _unit;
  };

  inline BasisAlgebra semigroup_algebra(FiniteSemigroup const& S) {
    size_t const        n = S.size();
    std::vector<size_t> table(n * n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        table[i * n + j] = S.product(i, j);
      }
    }
    std::optional<AlgebraElement> unit;
    if (S.identity()) {
      unit = AlgebraElement::basis(BasisTag::semigroup, *S.identity());
    }
    return BasisAlgebra(BasisTag::semigroup, n, std::move(table), std::move(unit));
  }

  //! The unit is the sum of the identity morphisms.
  inline BasisAlgebra category_algebra(FiniteCategory const& C) {
    size_t const        M = C.number_of_morphisms();
    std::vector<size_t> table(M * M);
    for (size_t i = 0; i < M; ++i) {
      for (size_t j = 0; j < M; ++j) {
        table[i * M + j] = C.compose(i, j);
      }
    }
    AlgebraElement unit(BasisTag::category);
    for (size_t o = 0; o < C.number_of_objects(); ++o) {
      unit.add(C.identity(o), Rational(1));
    }
    return BasisAlgebra(BasisTag::category, M, std::move(table), std::move(unit));
  }

  inline AlgebraElement semigroup_algebra_mult(FiniteSemigroup const& S,
                                               AlgebraElement const&  x,
                                               AlgebraElement const&  y) {
    if (x.tag() != BasisTag::semigroup || y.tag() != BasisTag::semigroup) {
      throw Exception(ErrorCode::basis_mismatch,
                      "semigroup algebra product of category elements");
    }
    AlgebraElement out(BasisTag::semigroup);
    for (auto const& [i, a] : x.coefficients()) {
      for (auto const& [j, b] : y.coefficients()) {
        out.add(S.product(i, j), a * b);
      }
    }
    return out;
  }

  inline AlgebraElement category_algebra_mult(FiniteCategory const& C,
                                              AlgebraElement const& x,
                                              AlgebraElement const& y) {
    if (x.tag() != BasisTag::category || y.tag() != BasisTag::category) {
      throw Exception(ErrorCode::basis_mismatch,
                      "category algebra product of semigroup elements");
    }
    AlgebraElement out(BasisTag::category);
    for (auto const& [i, a] : x.coefficients()) {
      for (auto const& [j, b] : y.coefficients()) {
        size_t const k = C.compose(i, j);
        if (k != UNDEFINED) {
          out.add(k, a * b);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The relation ⊴_l and the map φ
  ////////////////////////////////////////////////////////////////////////

  //! a ⊴_l b iff a = be for some e ∈ E.
  inline bool triangle_left(EStructure const& ES, size_t a, size_t b) {
    for (size_t e : ES.E()) {
      if (ES.product(b, e) == a) {
        return true;
      }
    }
    return false;
  }

  //! Whether the reflexive-transitive closure of ⊴_l is antisymmetric, i.e.
  //! whether ⊴_l is contained in a partial order.
  inline Verdict order_condition(EStructure const& ES) {
    size_t const n = ES.size();
    Preorder     closure(n);
    for (size_t b = 0; b < n; ++b) {
      closure.set(b, b);
      for (size_t e : ES.E()) {
        closure.set(ES.product(b, e), b);
      }
    }
    // Warshall: below(b) |= below(k) whenever k ≤ b.
    for (size_t k = 0; k < n; ++k) {
      for (size_t b = 0; b < n; ++b) {
        if (closure.leq(k, b)) {
          closure.absorb(b, closure, k);
        }
      }
    }
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = a + 1; b < n; ++b) {
        if (closure.leq(a, b) && closure.leq(b, a)) {
          return Verdict{false,
                         Witness{{a, b},
                                 "the closure of the left-triangle relation "
                                 "relates "
                                     + ES.label(a) + " and " + ES.label(b)
                                     + " both ways"}};
        }
      }
    }
    return {};
  }

  //! φ(a) = Σ_{c ⊴_l a} C(c); morphism C(c) has the index of c.
  inline LinearMap phi(EStructure const& ES) {
    if (auto v = congruence_condition(ES); !v.holds) {
      throw Exception(ErrorCode::congruence_condition_fails,
                      v.witness->description);
    }
    size_t const n = ES.size();
    LinearMap    map{BasisTag::semigroup, BasisTag::category, Matrix(n, n)};
    for (size_t a = 0; a < n; ++a) {
      for (size_t e : ES.E()) {
        map.matrix(ES.product(a, e), a) = 1;
      }
    }
    return map;
  }

  //! map(b_i b_j) = map(b_i) map(b_j) for every pair of basis elements.
  inline Verdict check_algebra_hom(LinearMap const&    map,
                                   BasisAlgebra const& source,
                                   BasisAlgebra const& target) {
    if (map.domain_dim() != source.dim() || map.codomain_dim() != target.dim()
        || map.domain_tag != source.tag() || map.codomain_tag != target.tag()) {
      throw Exception(ErrorCode::dimension_mismatch,
                      "map does not go between the given algebras");
    }
    size_t const                n = source.dim();
    std::vector<AlgebraElement> images;
    for (size_t i = 0; i < n; ++i) {
      images.push_back(map.image_of_basis(i));
    }
    auto bad = first_failure(n * n, [&](size_t k) {
      size_t const   i = k / n, j = k % n;
      size_t const   ij = source.basis_product(i, j);
      AlgebraElement lhs(target.tag());
      if (ij != UNDEFINED) {
        lhs = images[ij];
      }
      return !(lhs == target.multiply(images[i], images[j]));
    });
    if (!bad) {
      return {};
    }
    size_t const i = *bad / n, j = *bad % n;
    return Verdict{false,
                   Witness{{i, j},
                           "map(b" + std::to_string(i) + " b" + std::to_string(j)
                               + ") != map(b" + std::to_string(i) + ") map(b"
                               + std::to_string(j) + ")"}};
  }

  //! Invertible over ℚ.
  inline bool check_iso(LinearMap const& map) {
    return map.domain_dim() == map.codomain_dim()
           && rank(map.matrix) == map.domain_dim();
  }

  ////////////////////////////////////////////////////////////////////////
  // The modules ℚL̃(e)
  ////////////////////////////////////////////////////////////////////////

  //! ℚL̃(e) with s·x = sx when sx ∈ L̃(e) and 0 otherwise. The action of s is
  //! stored as a partial map on positions in the sorted class; undefined
  //! means zero.
  struct LTildeModule {
    size_t                  e;
    std::vector<size_t>     basis;
    std::vector<PartialMap> action;

    size_t dim() const noexcept {
      return basis.size();
    }

    Matrix matrix(size_t s) const {
      Matrix m(dim(), dim());
      for (size_t x = 0; x < dim(); ++x) {
        if (action[s].defined(x)) {
          m(action[s][x], x) = 1;
        }
      }
      return m;
    }
  };

  inline LTildeModule ltilde_module(EStructure const& ES, size_t e) {
    if (!ES.in_e(e)) {
      throw Exception(ErrorCode::invalid_e,
                      ES.label(e) + " is not an element of E");
    }
    LTildeModule mod{e, ES.ltilde_class(e), {}};
    for (size_t s = 0; s < ES.size(); ++s) {
      PartialMap act(mod.dim(), mod.dim());
      for (size_t x = 0; x < mod.dim(); ++x) {
        size_t const sx = ES.product(s, mod.basis[x]);
        if (ES.in_ltilde(sx, e)) {
          act.set(x, ES.ltilde_position(sx));
        }
      }
      mod.action.push_back(std::move(act));
    }
    for (size_t s = 0; s < ES.size(); ++s) {
      for (size_t t = 0; t < ES.size(); ++t) {
        if (!(mod.action[ES.product(s, t)]
              == compose(mod.action[s], mod.action[t]))) {
          throw Exception(ErrorCode::not_associative,
                          "(st)·x != s·(t·x) on L~(" + ES.label(e) + ") at s = "
                              + ES.label(s) + ", t = " + ES.label(t));
        }
      }
    }
    return mod;
  }

  //! The linear extension of r_α as a |L̃(α*)| × |L̃(α⁺)| matrix.
  inline Matrix r_alpha_matrix(EStructure const& ES, size_t alpha) {
    PartialMap const F = r_alpha(ES, alpha);
    Matrix           m(F.codomain_size(), F.domain_size());
    for (size_t x = 0; x < F.domain_size(); ++x) {
      m(F[x], x) = 1;
    }
    return m;
  }

  struct HomSpace {
    size_t e;
    size_t f;
    //! A basis of Hom(ℚL̃(e), ℚL̃(f)), each a |L̃(f)| × |L̃(e)| matrix.
    std::vector<Matrix> basis;
    //! Every α with α⁺ = e and α* = f.
    std::vector<size_t> alphas;
    //! Each linearized r_α commutes with the action.
    bool r_alpha_are_homs = false;
    //! The r_α are linearly independent.
    bool r_alpha_independent = false;

    size_t dimension() const noexcept {
      return basis.size();
    }
    //! dim = #{α : α⁺ = e, α* = f} and the r_α form a basis.
    bool r_alpha_form_basis() const noexcept {
      return r_alpha_are_homs && r_alpha_independent
             && alphas.size() == basis.size();
    }
  };

  //! Solves F · (s on ℚL̃(e)) = (s on ℚL̃(f)) · F for all s.
  inline HomSpace hom_space(EStructure const& ES, size_t e, size_t f) {
    LTildeModule const Me = ltilde_module(ES, e), Mf = ltilde_module(ES, f);
    size_t const       p = Me.dim(), q = Mf.dim(), unknowns = p * q;
    // unknown F(i, k) sits at column i * p + k
    std::set<std::vector<Rational>> rows;
    for (size_t s = 0; s < ES.size(); ++s) {
      PartialMap const& A = Me.action[s];
      PartialMap const& B = Mf.action[s];
      for (size_t i = 0; i < q; ++i) {
        for (size_t j = 0; j < p; ++j) {
          // (F A)(i, j) - (B F)(i, j)
          std::vector<Rational> row(unknowns, Rational(0));
          if (A.defined(j)) {
            row[i * p + A[j]] += 1;
          }
          for (size_t k = 0; k < q; ++k) {
            if (B.defined(k) && B[k] == i) {
              row[k * p + j] -= 1;
            }
          }
          bool zero = true;
          for (auto const& c : row) {
            zero = zero && c == 0;
          }
          if (!zero) {
            rows.insert(std::move(row));
          }
        }
      }
    }
    Matrix system(rows.size(), unknowns);
    size_t r = 0;
    for (auto const& row : rows) {
      for (size_t c = 0; c < unknowns; ++c) {
        system(r, c) = row[c];
      }
      ++r;
    }
    HomSpace out{e, f, {}, {}, true, false};
    for (auto const& v : nullspace(system)) {
      Matrix F(q, p);
      for (size_t i = 0; i < q; ++i) {
        for (size_t k = 0; k < p; ++k) {
          F(i, k) = v[i * p + k];
        }
      }
      out.basis.push_back(std::move(F));
    }
    Matrix stacked(0, 0);
    std::vector<std::vector<Rational>> flat;
    for (size_t a = 0; a < ES.size(); ++a) {
      if (ES.plus(a) != e || ES.star(a) != f) {
        continue;
      }
      out.alphas.push_back(a);
      Matrix const R = r_alpha_matrix(ES, a);
      for (size_t s = 0; s < ES.size() && out.r_alpha_are_homs; ++s) {
        out.r_alpha_are_homs = R * Me.matrix(s) == Mf.matrix(s) * R;
      }
      std::vector<Rational> v(unknowns);
      for (size_t i = 0; i < q; ++i) {
        for (size_t k = 0; k < p; ++k) {
          v[i * p + k] = R(i, k);
        }
      }
      flat.push_back(std::move(v));
    }
    Matrix independent(flat.size(), unknowns);
    for (size_t i = 0; i < flat.size(); ++i) {
      for (size_t c = 0; c < unknowns; ++c) {
        independent(i, c) = flat[i][c];
      }
    }
    out.r_alpha_independent = rank(independent) == flat.size();
    return out;
  }

  //! Checks that Φ : ℚL̃(e) → ℚC(S)·C(e), x ↦ C(x), is an isomorphism of
  //! ℚS-modules when ℚS acts on the target by s ⋆ C(m) = φ(s) · C(m).
  inline bool phi_module_iso(EStructure const&     ES,
                             FiniteCategory const& C,
                             LinearMap const&      phi_map,
                             size_t                e) {
    auto const class_e = ES.ltilde_class(e);
    // ℚC(S)·C(e) is spanned by the non-zero products C(t)·C(e).
    std::set<size_t> target;
    for (size_t t = 0; t < ES.size(); ++t) {
      size_t const te = C.compose(t, e);
      if (te != UNDEFINED) {
        target.insert(te);
      }
    }
    if (target != std::set<size_t>(class_e.begin(), class_e.end())) {
      return false;
    }
    for (size_t s = 0; s < ES.size(); ++s) {
      AlgebraElement const phi_s = phi_map.image_of_basis(s);
      for (size_t x : class_e) {
        size_t const   sx = ES.product(s, x);
        AlgebraElement lhs(BasisTag::category);
        if (ES.in_ltilde(sx, e)) {
          lhs.add(sx, Rational(1));
        }
        auto const rhs = category_algebra_mult(
            C, phi_s, AlgebraElement::basis(BasisTag::category, x));
        if (!(lhs == rhs)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool phi_module_iso(EStructure const& ES, size_t e) {
    return phi_module_iso(ES, associated_category(ES), phi(ES), e);
  }

  //! Entry (i, j) is the number of morphisms from object i to object j.
  inline std::vector<std::vector<size_t>> peirce_dims(FiniteCategory const& C) {
    size_t const                     N = C.number_of_objects();
    std::vector<std::vector<size_t>> dims(N, std::vector<size_t>(N, 0));
    for (size_t m = 0; m < C.number_of_morphisms(); ++m) {
      ++dims[C.dom(m)][C.cod(m)];
    }
    return dims;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semisimplicity
  ////////////////////////////////////////////////////////////////////////

  //! Solves u·b = b·u = b for all basis elements b.
  inline std::optional<AlgebraElement> find_unit(BasisAlgebra const& A) {
    size_t const                    n = A.dim();
    std::set<std::vector<Rational>> rows;
    for (size_t j = 0; j < n; ++j) {
      for (int side = 0; side < 2; ++side) {
        // Σ_k u_k [b_k b_j = b_i] = δ_ij  (side 0), b_j b_k for side 1
        std::vector<std::vector<Rational>> eqs(
            n, std::vector<Rational>(n + 1, Rational(0)));
        for (size_t k = 0; k < n; ++k) {
          size_t const p = side == 0 ? A.basis_product(k, j) : A.basis_product(j, k);
          if (p != UNDEFINED) {
            eqs[p][k] += 1;
          }
        }
        eqs[j][n] = 1;
        for (auto& eq : eqs) {
          rows.insert(std::move(eq));
        }
      }
    }
    Matrix system(rows.size(), n + 1);
    size_t r = 0;
    for (auto const& row : rows) {
      for (size_t c = 0; c <= n; ++c) {
        system(r, c) = row[c];
      }
      ++r;
    }
    auto const ef = row_reduce(system);
    if (!ef.pivot_columns.empty() && ef.pivot_columns.back() == n) {
      return std::nullopt;
    }
    AlgebraElement u(A.tag());
    for (size_t i = 0; i < ef.pivot_columns.size(); ++i) {
      u.add(ef.pivot_columns[i], ef.reduced(i, n));
    }
    return u;
  }

  //! Gram matrix of the trace form B(x, y) = tr(left multiplication by xy)
  //! of the regular representation, on the basis.
  inline Matrix trace_form(BasisAlgebra const& A) {
    size_t const          n = A.dim();
    std::vector<Rational> trace(n, Rational(0));
    for (size_t k = 0; k < n; ++k) {
      for (size_t x = 0; x < n; ++x) {
        if (A.basis_product(k, x) == x) {
          trace[k] += 1;
        }
      }
    }
    Matrix G(n, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        size_t const k = A.basis_product(i, j);
        if (k != UNDEFINED) {
          G(i, j) = trace[k];
        }
      }
    }
    return G;
  }

  //! A unital algebra over a field of characteristic 0 is semisimple iff the
  //! trace form of its regular representation is non-degenerate.
  inline bool is_semisimple_char0(BasisAlgebra const& A,
                                  unsigned            characteristic = 0) {
    if (characteristic != 0) {
      throw Exception(ErrorCode::wrong_characteristic,
                      "the trace-form test is valid in characteristic 0 only");
    }
    if (!A.unit() && !find_unit(A)) {
      throw Exception(ErrorCode::no_unit, "the algebra has no unit element");
    }
    return determinant(trace_form(A)) != 0;
  }

}  // namespace efountain

#endif  // EFOUNTAIN_ALGEBRA_HPP_
