//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// This file contains FiniteCategory together with the associated category
// C(S) of a reduced E-Fountain semigroup, the category D(S) of partial-action
// homomorphisms between L̃-classes, and an isomorphism checker.

#ifndef EFOUNTAIN_CATEGORY_HPP_
#define EFOUNTAIN_CATEGORY_HPP_

#include <algorithm>   // for find
#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <utility>     // for move
#include <vector>      // for vector

#include "exception.hpp"
#include "fountain.hpp"
#include "semigroup.hpp"

namespace efountain {

  //! A finite category with explicitly enumerated objects and morphisms.
  //!
  //! compose(m2, m1) is m2 ∘ m1, defined exactly when cod(m1) = dom(m2).
  class FiniteCategory {
   public:
    using compose_function
        = std::function<size_t(size_t /* m2 */, size_t /* m1 */)>;

    FiniteCategory() = default;

    //! Tabulates \p compose on every composable pair and checks the category
    //! axioms.
    FiniteCategory(std::vector<std::string> object_labels,
                   std::vector<size_t>      dom,
                   std::vector<size_t>      cod,
                   std::vector<size_t>      identity,
                   compose_function const&  compose,
                   std::vector<std::string> morphism_labels = {})
        : _object_labels(std::move(object_labels)),
          _dom(std::move(dom)),
          _cod(std::move(cod)),
          _identity(std::move(identity)),
          _morphism_labels(std::move(morphism_labels)) {
      size_t const M = _dom.size();
      if (_cod.size() != M || _identity.size() != _object_labels.size()) {
        throw Exception(ErrorCode::dimension_mismatch,
                        "inconsistent category data");
      }
      if (_morphism_labels.empty()) {
        for (size_t m = 0; m < M; ++m) {
          _morphism_labels.push_back(std::to_string(m));
        }
      }
      _table.assign(M * M, UNDEFINED);
      for (size_t m2 = 0; m2 < M; ++m2) {
        for (size_t m1 = 0; m1 < M; ++m1) {
          if (_cod[m1] == _dom[m2]) {
            size_t const c = compose(m2, m1);
            if (c >= M) {
              throw Exception(ErrorCode::out_of_range_entry,
                              "composite outside the morphism set");
            }
            _table[m2 * M + m1] = c;
          }
        }
      }
      validate();
    }

    size_t number_of_objects() const noexcept {
      return _object_labels.size();
    }
    size_t number_of_morphisms() const noexcept {
      return _dom.size();
    }
    size_t dom(size_t m) const {
      return _dom[m];
    }
    size_t cod(size_t m) const {
      return _cod[m];
    }
    size_t identity(size_t object) const {
      return _identity[object];
    }
    bool is_identity(size_t m) const {
      return _identity[_dom[m]] == m;
    }
    std::string const& object_label(size_t o) const {
      return _object_labels[o];
    }
    std::string const& morphism_label(size_t m) const {
      return _morphism_labels[m];
    }

    //! m2 ∘ m1, or UNDEFINED.
    size_t compose(size_t m2, size_t m1) const {
      return _table[m2 * number_of_morphisms() + m1];
    }

    std::vector<size_t> hom(size_t from, size_t to) const {
      std::vector<size_t> out;
      for (size_t m = 0; m < number_of_morphisms(); ++m) {
        if (_dom[m] == from && _cod[m] == to) {
          out.push_back(m);
        }
      }
      return out;
    }

    friend bool operator==(FiniteCategory const& a, FiniteCategory const& b) {
      return a._object_labels == b._object_labels && a._dom == b._dom
             && a._cod == b._cod && a._identity == b._identity
             && a._table == b._table;
    }

   private:
    void validate() const {
      size_t const M = number_of_morphisms();
      for (size_t o = 0; o < number_of_objects(); ++o) {
        size_t const id = _identity[o];
        if (id >= M || _dom[id] != o || _cod[id] != o) {
          throw Exception(ErrorCode::domain_mismatch,
                          "identity of object " + _object_labels[o]
                              + " is not an endomorphism of it");
        }
      }
      for (size_t m = 0; m < M; ++m) {
        if (compose(_identity[_cod[m]], m) != m
            || compose(m, _identity[_dom[m]]) != m) {
          throw Exception(ErrorCode::domain_mismatch,
                          "identities are not neutral for "
                              + _morphism_labels[m]);
        }
      }
      std::vector<std::vector<size_t>> into(number_of_objects());
      for (size_t m = 0; m < M; ++m) {
        into[_cod[m]].push_back(m);
      }
      for (size_t m2 = 0; m2 < M; ++m2) {
        for (size_t m1 : into[_dom[m2]]) {
          size_t const c = compose(m2, m1);
          if (_dom[c] != _dom[m1] || _cod[c] != _cod[m2]) {
            throw Exception(ErrorCode::domain_mismatch,
                            "composite " + _morphism_labels[m2] + " o "
                                + _morphism_labels[m1]
                                + " has the wrong endpoints");
          }
          for (size_t m0 : into[_dom[m1]]) {
            if (compose(c, m0) != compose(m2, compose(m1, m0))) {
              throw Exception(ErrorCode::not_associative,
                              "composition is not associative at ("
                                  + _morphism_labels[m2] + ", "
                                  + _morphism_labels[m1] + ", "
                                  + _morphism_labels[m0] + ")");
            }
          }
        }
      }
    }

    std::vector<std::string> _object_labels;
    std::vector<size_t>      _dom;
    std::vector<size_t>      _cod;
    std::vector<size_t>      _identity;
    std::vector<std::string> _morphism_labels;
    std::vector<size_t>      _table;
  };

  //! C(S): objects are the elements of E (in the order of ES.E()), and
  //! morphism a is C(a) : a* → a⁺. C(b) ∘ C(a) = C(ba) when b* = a⁺.
  inline FiniteCategory associated_category(EStructure const& ES) {
    if (auto v = congruence_condition(ES); !v.holds) {
      throw Exception(ErrorCode::congruence_condition_fails,
                      v.witness->description);
    }
    size_t const             n = ES.size();
    std::vector<std::string> objects, morphisms;
    std::vector<size_t>      dom(n), cod(n), identity;
    for (size_t e : ES.E()) {
      objects.push_back(ES.label(e));
      identity.push_back(e);
    }
    for (size_t a = 0; a < n; ++a) {
      dom[a] = ES.e_position(ES.star(a));
      cod[a] = ES.e_position(ES.plus(a));
      morphisms.push_back("C(" + ES.label(a) + ")");
    }
    auto compose = [&](size_t b, size_t a) {
      size_t const ba = ES.product(b, a);
      if (ES.plus(ba) != ES.plus(b) || ES.star(ba) != ES.star(a)) {
        throw Exception(ErrorCode::congruence_condition_fails,
                        "C(" + ES.label(b) + ")C(" + ES.label(a)
                            + ") has the wrong endpoints");
      }
      return ba;
    };
    return FiniteCategory(std::move(objects),
                          std::move(dom),
                          std::move(cod),
                          std::move(identity),
                          compose,
                          std::move(morphisms));
  }

  struct CategoryFlags {
    bool groupoid;
    bool locally_trivial;
  };

  inline CategoryFlags category_flags(FiniteCategory const& C) {
    CategoryFlags flags{true, true};
    for (size_t m = 0; m < C.number_of_morphisms(); ++m) {
      if (C.dom(m) == C.cod(m) && !C.is_identity(m)) {
        flags.locally_trivial = false;
      }
      bool invertible = false;
      for (size_t k : C.hom(C.cod(m), C.dom(m))) {
        if (C.is_identity(C.compose(k, m)) && C.is_identity(C.compose(m, k))) {
          invertible = true;
          break;
        }
      }
      flags.groupoid = flags.groupoid && invertible;
    }
    return flags;
  }

  inline FiniteCategory opposite(FiniteCategory const& C) {
    std::vector<std::string> objects, morphisms;
    std::vector<size_t>      dom, cod, identity;
    for (size_t o = 0; o < C.number_of_objects(); ++o) {
      objects.push_back(C.object_label(o));
      identity.push_back(C.identity(o));
    }
    for (size_t m = 0; m < C.number_of_morphisms(); ++m) {
      dom.push_back(C.cod(m));
      cod.push_back(C.dom(m));
      morphisms.push_back(C.morphism_label(m));
    }
    return FiniteCategory(
        std::move(objects),
        std::move(dom),
        std::move(cod),
        std::move(identity),
        [&C](size_t m2, size_t m1) { return C.compose(m1, m2); },
        std::move(morphisms));
  }

  //! D(S) together with the partial-action homomorphism behind each
  //! morphism, written on positions in the sorted L̃-classes.
  struct DCategory {
    FiniteCategory          category;
    std::vector<PartialMap> maps;

    std::optional<size_t> find(size_t dom, size_t cod, PartialMap const& F) const {
      for (size_t m : category.hom(dom, cod)) {
        if (maps[m] == F) {
          return m;
        }
      }
      return std::nullopt;
    }
  };

  //! Objects are the classes L̃(e), e ∈ E; hom(e, f) is every partial-action
  //! homomorphism L̃(e) → L̃(f); composition is composition of maps.
  inline DCategory d_category(EStructure const& ES,
                              size_t budget = default_enumeration_budget) {
    size_t const             k = ES.E().size();
    std::vector<std::string> objects, labels;
    std::vector<size_t>      dom, cod, identity(k, UNDEFINED);
    std::vector<PartialMap>  maps;
    for (size_t i = 0; i < k; ++i) {
      objects.push_back("L~(" + ES.label(ES.E()[i]) + ")");
    }
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) {
        auto homs = enumerate_action_homs(ES, ES.E()[i], ES.E()[j], budget);
        for (auto& F : homs) {
          std::string label = "[";
          for (size_t x = 0; x < F.domain_size(); ++x) {
            label += (x == 0 ? "" : " ") + std::to_string(F[x]);
          }
          labels.push_back(label + "]");
          dom.push_back(i);
          cod.push_back(j);
          maps.push_back(std::move(F));
        }
      }
    }
    for (size_t i = 0; i < k; ++i) {
      size_t const        size = ES.ltilde_class(ES.E()[i]).size();
      std::vector<size_t> id(size);
      for (size_t x = 0; x < size; ++x) {
        id[x] = x;
      }
      PartialMap const idmap(size, id);
      for (size_t m = 0; m < maps.size(); ++m) {
        if (dom[m] == i && cod[m] == i && maps[m] == idmap) {
          identity[i] = m;
        }
      }
      if (identity[i] == UNDEFINED) {
        throw Exception(ErrorCode::domain_mismatch,
                        "identity of " + objects[i]
                            + " is not a partial-action homomorphism");
      }
    }
    auto compose = [&](size_t m2, size_t m1) {
      PartialMap const c = efountain::compose(maps[m2], maps[m1]);
      for (size_t m = 0; m < maps.size(); ++m) {
        if (dom[m] == dom[m1] && cod[m] == cod[m2] && maps[m] == c) {
          return m;
        }
      }
      throw Exception(ErrorCode::domain_mismatch,
                      "homomorphisms are not closed under composition");
    };
    // compose reads dom and cod while the category is tabulated
    FiniteCategory C(std::move(objects), dom, cod, std::move(identity), compose,
                     std::move(labels));
    return DCategory{std::move(C), std::move(maps)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphisms
  ////////////////////////////////////////////////////////////////////////

  //! A covariant functor given by its action on object and morphism indices.
  struct Functor {
    std::vector<size_t> objects;
    std::vector<size_t> morphisms;
  };

  //! Checks that F : C1 → C2 is an isomorphism of categories.
  inline bool is_isomorphism(FiniteCategory const& C1,
                             FiniteCategory const& C2,
                             Functor const&        F) {
    size_t const N = C1.number_of_objects(), M = C1.number_of_morphisms();
    if (N != C2.number_of_objects() || M != C2.number_of_morphisms()
        || F.objects.size() != N || F.morphisms.size() != M) {
      return false;
    }
    std::vector<bool> hit_o(N, false), hit_m(M, false);
    for (size_t o = 0; o < N; ++o) {
      if (F.objects[o] >= N || hit_o[F.objects[o]]) {
        return false;
      }
      hit_o[F.objects[o]] = true;
      if (F.morphisms[C1.identity(o)] != C2.identity(F.objects[o])) {
        return false;
      }
    }
    for (size_t m = 0; m < M; ++m) {
      size_t const fm = F.morphisms[m];
      if (fm >= M || hit_m[fm]) {
        return false;
      }
      hit_m[fm] = true;
      if (C2.dom(fm) != F.objects[C1.dom(m)]
          || C2.cod(fm) != F.objects[C1.cod(m)]) {
        return false;
      }
    }
    for (size_t m2 = 0; m2 < M; ++m2) {
      for (size_t m1 = 0; m1 < M; ++m1) {
        size_t const c = C1.compose(m2, m1);
        if (c != UNDEFINED
            && F.morphisms[c]
                   != C2.compose(F.morphisms[m2], F.morphisms[m1])) {
          return false;
        }
      }
    }
    return true;
  }

  struct IsomorphismSearch {
    size_t max_objects   = 12;
    size_t max_morphisms = 64;
    size_t node_budget   = 1'000'000;
  };

  namespace detail {
    class IsoSearcher {
     public:
      IsoSearcher(FiniteCategory const& C1,
                  FiniteCategory const& C2,
                  size_t                budget)
          : _C1(C1), _C2(C2), _budget(budget) {}

      std::optional<Functor> run() {
        size_t const N = _C1.number_of_objects();
        _F.objects.assign(N, UNDEFINED);
        _F.morphisms.assign(_C1.number_of_morphisms(), UNDEFINED);
        _used_o.assign(N, false);
        _used_m.assign(_C1.number_of_morphisms(), false);
        if (assign_object(0)) {
          return _F;
        }
        return std::nullopt;
      }

     private:
      void tick() {
        if (++_nodes > _budget) {
          throw Exception(ErrorCode::search_budget_exceeded,
                          "isomorphism search exceeded "
                              + std::to_string(_budget) + " nodes");
        }
      }

      bool assign_object(size_t o) {
        tick();
        size_t const N = _C1.number_of_objects();
        if (o == N) {
          _order.clear();
          for (size_t m = 0; m < _C1.number_of_morphisms(); ++m) {
            if (_C1.is_identity(m)) {
              _F.morphisms[m] = _C2.identity(_F.objects[_C1.dom(m)]);
              _used_m[_F.morphisms[m]] = true;
            } else {
              _order.push_back(m);
            }
          }
          bool const ok = assign_morphism(0);
          if (!ok) {
            for (size_t m = 0; m < _C1.number_of_morphisms(); ++m) {
              if (_C1.is_identity(m)) {
                _used_m[_F.morphisms[m]] = false;
                _F.morphisms[m]          = UNDEFINED;
              }
            }
          }
          return ok;
        }
        for (size_t t = 0; t < N; ++t) {
          if (_used_o[t]) {
            continue;
          }
          _F.objects[o] = t;
          bool ok       = true;
          for (size_t p = 0; p <= o && ok; ++p) {
            size_t const fp = _F.objects[p];
            ok = _C1.hom(o, p).size() == _C2.hom(t, fp).size()
                 && _C1.hom(p, o).size() == _C2.hom(fp, t).size();
          }
          if (ok) {
            _used_o[t] = true;
            if (assign_object(o + 1)) {
              return true;
            }
            _used_o[t] = false;
          }
          _F.objects[o] = UNDEFINED;
        }
        return false;
      }

      bool consistent() const {
        size_t const M = _C1.number_of_morphisms();
        for (size_t m2 = 0; m2 < M; ++m2) {
          if (_F.morphisms[m2] == UNDEFINED) {
            continue;
          }
          for (size_t m1 = 0; m1 < M; ++m1) {
            if (_F.morphisms[m1] == UNDEFINED) {
              continue;
            }
            size_t const c = _C1.compose(m2, m1);
            if (c != UNDEFINED && _F.morphisms[c] != UNDEFINED
                && _F.morphisms[c]
                       != _C2.compose(_F.morphisms[m2], _F.morphisms[m1])) {
              return false;
            }
          }
        }
        return true;
      }

      bool assign_morphism(size_t k) {
        tick();
        if (k == _order.size()) {
          return consistent();
        }
        size_t const m = _order[k];
        for (size_t t : _C2.hom(_F.objects[_C1.dom(m)], _F.objects[_C1.cod(m)])) {
          if (_used_m[t]) {
            continue;
          }
          _F.morphisms[m] = t;
          _used_m[t]      = true;
          if (consistent() && assign_morphism(k + 1)) {
            return true;
          }
          _used_m[t]      = false;
          _F.morphisms[m] = UNDEFINED;
        }
        return false;
      }

      FiniteCategory const& _C1;
      FiniteCategory const& _C2;
      size_t                _budget;
      size_t                _nodes = 0;
      Functor               _F;
      std::vector<bool>     _used_o, _used_m;
      std::vector<size_t>   _order;
    };
  }  // namespace detail

  //! An isomorphism C1 → C2, if one exists. A supplied candidate is verified
  //! first; otherwise (or if it fails) a backtracking search runs, but only on
  //! categories within the limits of \p search.
  inline std::optional<Functor>
  category_isomorphic(FiniteCategory const&  C1,
                      FiniteCategory const&  C2,
                      std::optional<Functor> candidate = std::nullopt,
                      IsomorphismSearch      search    = {}) {
    if (C1.number_of_objects() != C2.number_of_objects()
        || C1.number_of_morphisms() != C2.number_of_morphisms()) {
      return std::nullopt;
    }
    if (candidate && is_isomorphism(C1, C2, *candidate)) {
      return candidate;
    }
    if (C1.number_of_objects() > search.max_objects
        || C1.number_of_morphisms() > search.max_morphisms) {
      throw Exception(ErrorCode::search_budget_exceeded,
                      "generic isomorphism search is limited to "
                          + std::to_string(search.max_objects) + " objects and "
                          + std::to_string(search.max_morphisms)
                          + " morphisms");
    }
    return detail::IsoSearcher(C1, C2, search.node_budget).run();
  }

  //! The functor C(S)^op → D(S) given by e ↦ L̃(e), C(α) ↦ r_α.
  inline Functor opposite_to_d_functor(EStructure const& ES,
                                       DCategory const&  D) {
    Functor F;
    for (size_t i = 0; i < ES.E().size(); ++i) {
      F.objects.push_back(i);
    }
    for (size_t a = 0; a < ES.size(); ++a) {
      auto m = D.find(ES.e_position(ES.plus(a)),
                      ES.e_position(ES.star(a)),
                      r_alpha(ES, a));
      F.morphisms.push_back(m ? *m : UNDEFINED);
    }
    return F;
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT export
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }

    inline std::string html_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        switch (c) {
          case '<': out += "&lt;"; break;
          case '>': out += "&gt;"; break;
          case '&': out += "&amp;"; break;
          default: out += c;
        }
      }
      return out;
    }
  }  // namespace detail

  //! Objects as nodes, every morphism (identities included) as an edge.
  inline std::string export_dot(FiniteCategory const& C) {
    std::ostringstream out;
    out << "digraph category {\n";
    out << "  node [shape=ellipse];\n";
    for (size_t o = 0; o < C.number_of_objects(); ++o) {
      out << "  o" << o << " [label=\"" << detail::dot_escape(C.object_label(o))
          << "\"];\n";
    }
    for (size_t m = 0; m < C.number_of_morphisms(); ++m) {
      out << "  o" << C.dom(m) << " -> o" << C.cod(m) << " [label=\""
          << detail::dot_escape(C.morphism_label(m)) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  //! Eggbox diagram: one cluster per J-class, R-classes as rows, L-classes
  //! as columns. Idempotents are marked with '*'.
  inline std::string export_dot(FiniteSemigroup const& S, GreenData const& g) {
    std::ostringstream out;
    out << "digraph eggbox {\n";
    out << "  node [shape=plaintext];\n";
    auto const jclasses = g.j_class.classes();
    for (size_t j = 0; j < jclasses.size(); ++j) {
      std::vector<size_t> rows, cols;
      for (size_t a : jclasses[j]) {
        size_t const r = g.r_class.class_of(a), l = g.l_class.class_of(a);
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) {
          rows.push_back(r);
        }
        if (std::find(cols.begin(), cols.end(), l) == cols.end()) {
          cols.push_back(l);
        }
      }
      out << "  subgraph cluster_j" << j << " {\n";
      out << "    label=\"J" << j << "\";\n";
      out << "    j" << j
          << " [label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">";
      for (size_t r : rows) {
        out << "<TR>";
        for (size_t l : cols) {
          std::string cell;
          for (size_t a : jclasses[j]) {
            if (g.r_class.class_of(a) == r && g.l_class.class_of(a) == l) {
              cell += (cell.empty() ? "" : ",") + detail::html_escape(S.label(a));
              if (S.product(a, a) == a) {
                cell += "*";
              }
            }
          }
          out << "<TD>" << cell << "</TD>";
        }
        out << "</TR>";
      }
      out << "</TABLE>>];\n";
      out << "  }\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace efountain

#endif  // EFOUNTAIN_CATEGORY_HPP_
