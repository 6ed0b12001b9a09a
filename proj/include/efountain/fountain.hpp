//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// Generalized Green's relations relative to a set E of idempotents, the
// reduced E-Fountain structure (a*, a⁺), the congruence condition, the
// generalized right and left ample identities, and the partial left actions
// of S on the classes L̃(e).

#ifndef EFOUNTAIN_FOUNTAIN_HPP_
#define EFOUNTAIN_FOUNTAIN_HPP_

#include <algorithm>  // for sort, unique
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "exception.hpp"
#include "semigroup.hpp"
#include "sweep.hpp"

namespace efountain {

  constexpr size_t UNDEFINED = static_cast<size_t>(-1);

  //! A failing tuple of element indices and a readable description.
  struct Witness {
    std::vector<size_t> elements;
    std::string         description;
  };

  //! A yes/no answer; when no, the first failing tuple in index order.
  struct Verdict {
    bool                   holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  //! A partial function {0, ..., domain_size - 1} → {0, ..., codomain_size - 1}.
  class PartialMap {
   public:
    PartialMap() = default;
    PartialMap(size_t domain_size, size_t codomain_size)
        : _codomain_size(codomain_size), _images(domain_size, UNDEFINED) {}
    PartialMap(size_t codomain_size, std::vector<size_t> images)
        : _codomain_size(codomain_size), _images(std::move(images)) {
      for (size_t y : _images) {
        if (y != UNDEFINED && y >= _codomain_size) {
          throw Exception(ErrorCode::out_of_range_entry,
                          "image " + std::to_string(y) + " outside codomain");
        }
      }
    }

    size_t domain_size() const noexcept {
      return _images.size();
    }
    size_t codomain_size() const noexcept {
      return _codomain_size;
    }
    bool defined(size_t x) const {
      return _images[x] != UNDEFINED;
    }
    bool is_total() const {
      return std::find(_images.begin(), _images.end(), UNDEFINED)
             == _images.end();
    }
    size_t operator[](size_t x) const {
      return _images[x];
    }
    void set(size_t x, size_t y) {
      if (y != UNDEFINED && y >= _codomain_size) {
        throw Exception(ErrorCode::out_of_range_entry,
                        "image " + std::to_string(y) + " outside codomain");
      }
      _images[x] = y;
    }
    std::vector<size_t> const& images() const noexcept {
      return _images;
    }

    //! (g ∘ f)(x) = g(f(x)); undefined wherever either step is.
    friend PartialMap compose(PartialMap const& g, PartialMap const& f) {
      if (f.codomain_size() != g.domain_size()) {
        throw Exception(ErrorCode::domain_mismatch,
                        "composing partial maps with mismatched sets");
      }
      PartialMap out(f.domain_size(), g.codomain_size());
      for (size_t x = 0; x < f.domain_size(); ++x) {
        if (f.defined(x)) {
          out._images[x] = g._images[f[x]];
        }
      }
      return out;
    }

    friend bool operator==(PartialMap const& a, PartialMap const& b) {
      return a._codomain_size == b._codomain_size && a._images == b._images;
    }
    friend bool operator<(PartialMap const& a, PartialMap const& b) {
      return a._images < b._images;
    }

   private:
    size_t              _codomain_size = 0;
    std::vector<size_t> _images;
  };

  PartialMap compose(PartialMap const& g, PartialMap const& f);

  ////////////////////////////////////////////////////////////////////////
  // Tilde relations
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    //! Sorted, deduplicated, validated copy of E.
    inline std::vector<size_t> normalize_e(FiniteSemigroup const& S,
                                           std::vector<size_t>    E) {
      std::sort(E.begin(), E.end());
      E.erase(std::unique(E.begin(), E.end()), E.end());
      if (E.empty()) {
        throw Exception(ErrorCode::invalid_e,
                        "E must be non-empty for a non-empty semigroup");
      }
      for (size_t e : E) {
        if (e >= S.size()) {
          throw Exception(ErrorCode::invalid_e,
                          "index " + std::to_string(e) + " outside S");
        }
        if (S.product(e, e) != e) {
          throw Exception(ErrorCode::not_idempotent_in_e,
                          "element " + std::to_string(e) + " (" + S.label(e)
                              + ") is not idempotent");
        }
      }
      return E;
    }
  }  // namespace detail

  struct TildeClasses {
    Partition ltilde;
    Partition rtilde;
  };

  //! a L̃ b iff a and b have the same right identities in E; R̃ dually.
  inline TildeClasses tilde_classes(FiniteSemigroup const& S,
                                    std::vector<size_t>    E) {
    E = detail::normalize_e(S, std::move(E));
    std::vector<std::vector<bool>> right(S.size()), left(S.size());
    for (size_t a = 0; a < S.size(); ++a) {
      for (size_t e : E) {
        right[a].push_back(S.product(a, e) == a);
        left[a].push_back(S.product(e, a) == a);
      }
    }
    return {Partition::from_keys(right), Partition::from_keys(left)};
  }

  struct FountainCheck {
    bool                   fountain = false;
    bool                   reduced  = false;
    std::optional<Witness> witness;
  };

  //! Every L̃- and R̃-class meets E (fountain), and ef = e ⟺ fe = e on E
  //! (reduced).
  inline FountainCheck e_fountain_check(FiniteSemigroup const& S,
                                        std::vector<size_t>    E) {
    E              = detail::normalize_e(S, std::move(E));
    auto const  tc = tilde_classes(S, E);
    FountainCheck out;
    out.fountain = true;
    auto check_meets = [&](Partition const& p, char const* name) {
      std::vector<bool> met(p.count(), false);
      for (size_t e : E) {
        met[p.class_of(e)] = true;
      }
      for (size_t a = 0; a < S.size(); ++a) {
        if (!met[p.class_of(a)]) {
          out.fountain = false;
          out.witness  = Witness{
              p.members(a),
              std::string("the ") + name + "-class of " + S.label(a)
                  + " contains no element of E"};
          return false;
        }
      }
      return true;
    };
    if (check_meets(tc.ltilde, "L~")) {
      check_meets(tc.rtilde, "R~");
    }
    out.reduced = true;
    for (size_t e : E) {
      for (size_t f : E) {
        if ((S.product(e, f) == e) != (S.product(f, e) == e)) {
          out.reduced = false;
          if (!out.witness) {
            out.witness = Witness{
                {e, f},
                "ef = e and fe = e disagree for e = " + S.label(e)
                    + ", f = " + S.label(f)};
          }
          return out;
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // EStructure
  ////////////////////////////////////////////////////////////////////////

  //! A reduced E-Fountain semigroup: S with E, a*, a⁺, L̃ and R̃.
  class EStructure {
   public:
    EStructure() = default;

    EStructure(FiniteSemigroup S, std::vector<size_t> E) : _S(std::move(S)) {
      _E           = detail::normalize_e(_S, std::move(E));
      auto const check = e_fountain_check(_S, _E);
      if (!check.fountain || !check.reduced) {
        throw Exception(ErrorCode::not_reduced_e_fountain,
                        check.witness ? check.witness->description
                                      : std::string("check failed"));
      }
      auto tc  = tilde_classes(_S, _E);
      _ltilde  = std::move(tc.ltilde);
      _rtilde  = std::move(tc.rtilde);
      _in_e.assign(_S.size(), false);
      for (size_t e : _E) {
        _in_e[e] = true;
      }
      size_t const n = _S.size();
      std::vector<size_t> lrep(_ltilde.count(), UNDEFINED),
          rrep(_rtilde.count(), UNDEFINED);
      for (size_t e : _E) {
        for (auto [p, rep] : {std::pair{&_ltilde, &lrep},
                              std::pair{&_rtilde, &rrep}}) {
          size_t& slot = (*rep)[p->class_of(e)];
          if (slot != UNDEFINED) {
            throw Exception(ErrorCode::not_reduced_e_fountain,
                            "two elements of E (" + _S.label(slot) + ", "
                                + _S.label(e) + ") share a tilde class");
          }
          slot = e;
        }
      }
      _star.resize(n);
      _plus.resize(n);
      _lpos.resize(n);
      std::vector<size_t> seen(_ltilde.count(), 0);
      for (size_t a = 0; a < n; ++a) {
        _star[a] = lrep[_ltilde.class_of(a)];
        _plus[a] = rrep[_rtilde.class_of(a)];
        _lpos[a] = seen[_ltilde.class_of(a)]++;
        if (_S.product(a, _star[a]) != a || _S.product(_plus[a], a) != a) {
          throw Exception(ErrorCode::not_reduced_e_fountain,
                          "a·a* = a or a⁺·a = a fails at " + _S.label(a));
        }
      }
    }

    FiniteSemigroup const& semigroup() const noexcept {
      return _S;
    }
    size_t size() const noexcept {
      return _S.size();
    }
    size_t product(size_t a, size_t b) const noexcept {
      return _S.product(a, b);
    }
    size_t product(size_t a, size_t b, size_t c) const noexcept {
      return _S.product(a, b, c);
    }
    std::string const& label(size_t a) const {
      return _S.label(a);
    }

    std::vector<size_t> const& E() const noexcept {
      return _E;
    }
    bool in_e(size_t a) const {
      return _in_e[a];
    }
    //! Position of e within E.
    size_t e_position(size_t e) const {
      return static_cast<size_t>(
          std::lower_bound(_E.begin(), _E.end(), e) - _E.begin());
    }

    size_t star(size_t a) const {
      return _star[a];
    }
    size_t plus(size_t a) const {
      return _plus[a];
    }

    Partition const& ltilde() const noexcept {
      return _ltilde;
    }
    Partition const& rtilde() const noexcept {
      return _rtilde;
    }

    //! L̃(e) in increasing order.
    std::vector<size_t> ltilde_class(size_t e) const {
      return _ltilde.members(e);
    }
    //! Position of x within its (sorted) L̃-class.
    size_t ltilde_position(size_t x) const {
      return _lpos[x];
    }
    bool in_ltilde(size_t x, size_t e) const {
      return _star[x] == e;
    }

   private:
    FiniteSemigroup     _S;
    std::vector<size_t> _E;
    std::vector<bool>   _in_e;
    Partition           _ltilde;
    Partition           _rtilde;
    std::vector<size_t> _star;
    std::vector<size_t> _plus;
    std::vector<size_t> _lpos;
  };

  inline EStructure build_estructure(FiniteSemigroup S, std::vector<size_t> E) {
    return EStructure(std::move(S), std::move(E));
  }

  //! The same E on the dual semigroup; there a* and a⁺ swap roles.
  inline EStructure dual(EStructure const& ES) {
    return EStructure(ES.semigroup().reversed(), ES.E());
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string tuple_text(EStructure const&          ES,
                                  std::vector<size_t> const& xs,
                                  std::vector<char const*>   names) {
      std::string out;
      for (size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ", ");
        out += names[i];
        out += " = ";
        out += ES.label(xs[i]);
      }
      return out;
    }

    //! A coordinate ranges over all of S (nullptr) or over the listed
    //! elements.
    using Domain = std::vector<size_t> const*;

    //! Sweeps the tuples in lexicographic order.
    template <typename TFails>
    Verdict sweep_tuples(EStructure const&                ES,
                         std::vector<Domain> const&       domains,
                         std::vector<char const*> const&  names,
                         char const*                      what,
                         TFails&&                         fails) {
      std::vector<size_t> dims;
      size_t              total = 1;
      for (auto const* d : domains) {
        dims.push_back(d ? d->size() : ES.size());
        total *= dims.back();
      }
      auto decode = [&](size_t k) {
        std::vector<size_t> xs(dims.size());
        for (size_t i = dims.size(); i-- > 0;) {
          size_t const pos = k % dims[i];
          xs[i]            = domains[i] ? (*domains[i])[pos] : pos;
          k /= dims[i];
        }
        return xs;
      };
      auto bad = first_failure(total, [&](size_t k) { return fails(decode(k)); });
      if (!bad) {
        return {};
      }
      auto xs = decode(*bad);
      return Verdict{false,
                     Witness{xs, std::string(what) + " fails at "
                                     + tuple_text(ES, xs, names)}};
    }
  }  // namespace detail

  //! (ab)* = (a*b)* and (ab)⁺ = (ab⁺)⁺ for all a, b.
  inline Verdict congruence_condition(EStructure const& ES) {
    return detail::sweep_tuples(
        ES, {nullptr, nullptr}, {"a", "b"}, "congruence condition", [&](std::vector<size_t> const& x) {
          size_t const a = x[0], b = x[1], ab = ES.product(a, b);
          return ES.star(ab) != ES.star(ES.product(ES.star(a), b))
                 || ES.plus(ab) != ES.plus(ES.product(a, ES.plus(b)));
        });
  }

  //! (e(a(eaf)*)⁺)* = (a(eaf)*)⁺ for all a ∈ S, e, f ∈ E.
  inline Verdict gra_check(EStructure const& ES) {
    return detail::sweep_tuples(
        ES, {nullptr, &ES.E(), &ES.E()}, {"a", "e", "f"},
        "generalized right ample identity",
        [&](std::vector<size_t> const& x) {
          size_t const a = x[0], e = x[1], f = x[2];
          size_t const t = ES.product(a, ES.star(ES.product(e, a, f)));
          return ES.star(ES.product(e, ES.plus(t))) != ES.plus(t);
        });
  }

  //! (e(a(ea)*)⁺)* = (a(ea)*)⁺ for all a ∈ S, e ∈ E.
  inline Verdict gra_simplified_check(EStructure const& ES) {
    return detail::sweep_tuples(
        ES, {nullptr, &ES.E()}, {"a", "e"},
        "simplified generalized right ample identity",
        [&](std::vector<size_t> const& x) {
          size_t const a = x[0], e = x[1];
          size_t const t = ES.product(a, ES.star(ES.product(e, a)));
          return ES.star(ES.product(e, ES.plus(t))) != ES.plus(t);
        });
  }

  //! (((ae)⁺a)*e)⁺ = ((ae)⁺a)* for all a ∈ S, e ∈ E.
  inline Verdict gla_check(EStructure const& ES) {
    return detail::sweep_tuples(
        ES, {nullptr, &ES.E()}, {"a", "e"},
        "generalized left ample identity",
        [&](std::vector<size_t> const& x) {
          size_t const a = x[0], e = x[1];
          size_t const t = ES.star(ES.product(ES.plus(ES.product(a, e)), a));
          return ES.plus(ES.product(t, e)) != t;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial actions on L̃-classes
  ////////////////////////////////////////////////////////////////////////

  //! r_α : L̃(α⁺) → L̃(α*), x ↦ xα, written on class positions.
  inline PartialMap r_alpha(EStructure const& ES, size_t alpha) {
    size_t const e = ES.plus(alpha), f = ES.star(alpha);
    auto const   domain = ES.ltilde_class(e);
    PartialMap   F(domain.size(), ES.ltilde_class(f).size());
    for (size_t i = 0; i < domain.size(); ++i) {
      size_t const y = ES.product(domain[i], alpha);
      if (!ES.in_ltilde(y, f)) {
        throw Exception(ErrorCode::congruence_condition_fails,
                        "r_" + ES.label(alpha) + " sends " + ES.label(domain[i])
                            + " outside L~(" + ES.label(f) + ")");
      }
      F.set(i, ES.ltilde_position(y));
    }
    return F;
  }

  //! Whether F : L̃(e) → L̃(f) is a homomorphism of partial left S-actions,
  //! where s·x = sx if sx stays in the class and is undefined otherwise.
  inline bool is_partial_action_hom(EStructure const& ES,
                                    PartialMap const& F,
                                    size_t            e,
                                    size_t            f) {
    if (!ES.in_e(e) || !ES.in_e(f)) {
      throw Exception(ErrorCode::domain_mismatch,
                      "hom endpoints must lie in E");
    }
    auto const from = ES.ltilde_class(e), to = ES.ltilde_class(f);
    if (F.domain_size() != from.size() || F.codomain_size() != to.size()
        || !F.is_total()) {
      throw Exception(ErrorCode::domain_mismatch,
                      "map is not a total function L~(" + ES.label(e)
                          + ") -> L~(" + ES.label(f) + ")");
    }
    for (size_t s = 0; s < ES.size(); ++s) {
      for (size_t i = 0; i < from.size(); ++i) {
        size_t const sx  = ES.product(s, from[i]);
        size_t const sFx = ES.product(s, to[F[i]]);
        bool const   lhs = ES.in_ltilde(sx, e), rhs = ES.in_ltilde(sFx, f);
        if (lhs != rhs) {
          return false;
        }
        if (lhs && to[F[ES.ltilde_position(sx)]] != sFx) {
          return false;
        }
      }
    }
    return true;
  }

  struct ActionEquivalence {
    Verdict gra;
    bool    all_r_alpha_homs = true;
    //! First α whose r_α is not a homomorphism.
    std::optional<size_t> failing_alpha;

    bool agrees() const noexcept {
      return gra.holds == all_r_alpha_homs;
    }
  };

  //! Both sides of: GRA holds ⟺ every r_α is a partial-action homomorphism.
  inline ActionEquivalence gra_action_equivalence(EStructure const& ES) {
    ActionEquivalence out;
    out.gra = gra_check(ES);
    auto bad = first_failure(ES.size(), [&](size_t alpha) {
      return !is_partial_action_hom(
          ES, r_alpha(ES, alpha), ES.plus(alpha), ES.star(alpha));
    });
    out.all_r_alpha_homs = !bad.has_value();
    out.failing_alpha    = bad;
    return out;
  }

  constexpr size_t default_enumeration_budget = 1'000'000;

  //! All homomorphisms of partial actions L̃(e) → L̃(f), by exhaustive search
  //! over total maps in lexicographic order of image sequences.
  inline std::vector<PartialMap>
  enumerate_action_homs(EStructure const& ES,
                        size_t            e,
                        size_t            f,
                        size_t            budget = default_enumeration_budget) {
    if (!ES.in_e(e) || !ES.in_e(f)) {
      throw Exception(ErrorCode::domain_mismatch,
                      "hom endpoints must lie in E");
    }
    size_t const m = ES.ltilde_class(e).size(), k = ES.ltilde_class(f).size();
    size_t       candidates = 1;
    for (size_t i = 0; i < m; ++i) {
      if (candidates > budget / k) {
        throw Exception(ErrorCode::budget_exceeded,
                        std::to_string(k) + "^" + std::to_string(m)
                            + " candidate maps exceed the budget of "
                            + std::to_string(budget));
      }
      candidates *= k;
    }
    std::vector<PartialMap> out;
    std::vector<size_t>     images(m, 0);
    for (size_t c = 0; c < candidates; ++c) {
      PartialMap F(k, images);
      if (is_partial_action_hom(ES, F, e, f)) {
        out.push_back(F);
      }
      for (size_t i = m; i-- > 0;) {
        if (++images[i] < k) {
          break;
        }
        images[i] = 0;
      }
    }
    return out;
  }

}  // namespace efountain

#endif  // EFOUNTAIN_FOUNTAIN_HPP_
