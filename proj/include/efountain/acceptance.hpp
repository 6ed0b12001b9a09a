//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// The acceptance criteria, each an exhaustive computation with a pass/fail
// verdict and a one-line summary. Shared by the acceptance binary and the
// verify command.

#ifndef EFOUNTAIN_ACCEPTANCE_HPP_
#define EFOUNTAIN_ACCEPTANCE_HPP_

#include <bit>        // for popcount
#include <chrono>     // for steady_clock
#include <cstddef>    // for size_t
#include <exception>  // for exception
#include <functional> // for function
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "algebra.hpp"
#include "category.hpp"
#include "corpus.hpp"
#include "families.hpp"
#include "fountain.hpp"
#include "semigroup.hpp"

namespace efountain {

  struct AcceptanceOptions {
    //! The corpus file for the theorem sweep.
    std::string corpus_path;
    //! Corpus entries larger than this are skipped. The size requirement on
    //! the corpus only applies at the full order 6.
    size_t max_order = 6;
  };

  struct CriterionResult {
    size_t      number = 0;
    std::string id;
    bool        pass = false;
    std::string detail;
    double      seconds = 0;
    //! The time limit in seconds that is part of the criterion; 0 for none.
    double limit = 0;
  };

  namespace detail {
    // Collects the first failure message; everything after it is ignored.
    struct Failures {
      std::optional<std::string> first;
      void                       check(bool ok, std::string const& what) {
        if (!ok && !first) {
          first = what;
        }
      }
      bool ok() const {
        return !first.has_value();
      }
    };

    inline std::string join_counts(std::vector<size_t> const& v) {
      std::string out;
      for (size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(v[i]);
      }
      return out;
    }

    inline std::string criterion_of_count(Failures& f) {
      std::vector<size_t> sizes;
      for (size_t n = 1; n <= 7; ++n) {
        auto const F = build_OF(n);
        sizes.push_back(F.pairs.size());
        f.check(F.pairs.size() == binomial(2 * n - 2, n - 1),
                "|OF_" + std::to_string(n) + "| is " + std::to_string(F.pairs.size()));
      }
      f.check(sizes == std::vector<size_t>{1, 2, 6, 20, 70, 252, 924},
              "sizes are " + join_counts(sizes));
      // The example list of OF_3, second rows, with the subset pairs given
      // for them in the same order.
      struct Listed {
        char const* images;
        uint32_t    X, Y;
      };
      Listed const listed[] = {{"1 2 3", 0b11, 0b11},
                               {"1 3 3", 0b01, 0b01},
                               {"2 3 3", 0b01, 0b10},
                               {"1 1 3", 0b10, 0b01},
                               {"2 2 3", 0b10, 0b10},
                               {"3 3 3", 0b00, 0b00}};
      auto const OF3 = build_OF(3);
      f.check(OF3.pairs.size() == 6, "OF_3 does not have 6 elements");
      std::vector<bool> hit(OF3.pairs.size(), false);
      for (auto const& l : listed) {
        auto i = OF3.index_of({l.X, l.Y});
        f.check(i.has_value(), std::string("no element for ") + l.images);
        if (i) {
          f.check(images_string(OF3.images[*i]) == l.images,
                  "f" + subset_string(l.X) + subset_string(l.Y) + " is ("
                      + images_string(OF3.images[*i]) + "), expected ("
                      + l.images + ")");
          hit[*i] = true;
        }
      }
      for (bool h : hit) {
        f.check(h, "OF_3 has an element outside the example list");
      }
      return "sizes " + join_counts(sizes) + "; OF_3 matches the 6 listed maps";
    }

    inline std::string criterion_of_structure(Failures& f) {
      for (size_t n = 1; n <= 5; ++n) {
        std::string const tag   = "OF_" + std::to_string(n) + ": ";
        auto const        F     = build_OF(n);
        auto const&       S     = F.semigroup();
        auto const        g     = green_classes(S);
        auto const        flags = structure_flags(S, g);
        f.check(flags.regular, tag + "not regular");
        f.check(flags.h_trivial, tag + "not H-trivial");
        auto const check = e_fountain_check(S, F.es.E());
        f.check(check.fountain && check.reduced, tag + "not reduced E-Fountain");
        f.check(congruence_condition(F.es).holds, tag + "congruence condition fails");
        f.check(gra_check(F.es).holds, tag + "GRA fails");
        f.check(gla_check(F.es).holds, tag + "GLA fails");
        f.check(F.es.ltilde() == g.l_class, tag + "L~ differs from L");
        f.check(F.es.rtilde() == g.r_class, tag + "R~ differs from R");
        for (size_t a = 0; a < S.size(); ++a) {
          for (size_t b = 0; b < S.size(); ++b) {
            auto const pa = F.pairs[a], pb = F.pairs[b];
            f.check(g.r_class.same(a, b) == (pa.Y == pb.Y), tag + "R is not 'same Y'");
            f.check(g.l_class.same(a, b) == (pa.X == pb.X), tag + "L is not 'same X'");
            f.check(g.j_class.same(a, b)
                        == (std::popcount(pa.X) == std::popcount(pb.X)),
                    tag + "J is not 'same size'");
          }
        }
        f.check(g.j_class.count() == n, tag + "wrong number of J-classes");
        for (auto const& J : g.j_class.classes()) {
          size_t const k = std::popcount(F.pairs[J[0]].X);
          size_t const c = binomial(n - 1, k);
          f.check(J.size() == c * c, tag + "wrong J-class size");
          for (size_t a : J) {
            f.check(g.r_class.members(a).size() == c
                        && g.l_class.members(a).size() == c,
                    tag + "wrong L- or R-class size");
          }
        }
      }
      return "OF_1..OF_5 regular, H-trivial, reduced E-Fountain, congruence, "
             "GRA, GLA, L~ = L, R~ = R, |J_k| = C(n-1,k)^2";
    }

    inline std::string criterion_theorem_sweep(Failures&                f,
                                               AcceptanceOptions const& opt) {
      auto const entries  = read_corpus_file(opt.corpus_path);
      size_t     used     = 0, gra_fail = 0, with_order = 0;
      for (auto const& entry : entries) {
        if (entry.semigroup.size() > opt.max_order) {
          continue;
        }
        ++used;
        std::string const tag = entry.name + ": ";
        std::optional<EStructure> ES;
        try {
          ES.emplace(entry.semigroup, entry.E);
        } catch (Exception const& e) {
          f.check(false, tag + e.what());
          continue;
        }
        f.check(congruence_condition(*ES).holds, tag + "congruence condition fails");
        if (!f.ok()) {
          continue;
        }
        bool const gra  = gra_check(*ES).holds;
        bool const sim  = gra_simplified_check(*ES).holds;
        bool const homs = gra_action_equivalence(*ES).all_r_alpha_homs;
        auto const C    = associated_category(*ES);
        auto const map  = phi(*ES);
        bool const hom  = check_algebra_hom(map,
                                           semigroup_algebra(entry.semigroup),
                                           category_algebra(C))
                             .holds;
        gra_fail += !gra;
        f.check(gra == sim, tag + "GRA and simplified GRA disagree");
        f.check(gra == homs, tag + "GRA and the r_alpha homomorphism test disagree");
        f.check(gra == hom, tag + "GRA and the phi homomorphism test disagree");
        if (order_condition(*ES).holds) {
          ++with_order;
          bool const iso = check_iso(map);
          f.check(iso, tag + "phi singular although the order condition holds");
          f.check(gra == (hom && iso), tag + "GRA and 'phi is an isomorphism' disagree");
        }
      }
      if (opt.max_order >= 6) {
        f.check(used >= 50, "corpus has only " + std::to_string(used) + " entries");
      }
      f.check(gra_fail >= 1, "no GRA-failing instance in the corpus");
      return std::to_string(used) + " corpus entries, " + std::to_string(gra_fail)
             + " failing GRA, " + std::to_string(with_order)
             + " with the order condition";
    }

    inline std::string criterion_phi_iso(Failures& f) {
      for (size_t n = 1; n <= 4; ++n) {
        auto const F   = build_OF(n);
        auto const map = phi(F.es);
        auto const hom = check_algebra_hom(map,
                                           semigroup_algebra(F.semigroup()),
                                           category_algebra(associated_category(F.es)));
        f.check(hom.holds,
                "OF_" + std::to_string(n) + ": "
                    + (hom.witness ? hom.witness->description : std::string()));
        f.check(check_iso(map), "OF_" + std::to_string(n) + ": phi is singular");
      }
      return "phi is an algebra isomorphism on OF_1..OF_4";
    }

    inline std::string criterion_order_lemma(Failures& f) {
      size_t pairs = 0;
      for (size_t n = 1; n <= 5; ++n) {
        auto const   F = build_OF(n);
        size_t const N = F.pairs.size();
        for (size_t a = 0; a < N; ++a) {
          for (size_t b = 0; b < N; ++b) {
            if (triangle_left(F.es, a, b)) {
              ++pairs;
              f.check(lex_leq(F.pairs[a], F.pairs[b]),
                      "OF_" + std::to_string(n) + ": " + F.semigroup().label(a)
                          + " is left-below " + F.semigroup().label(b)
                          + " but not lexicographically below");
            }
            // the lexicographic relation is antisymmetric
            f.check(a == b || !(lex_leq(F.pairs[a], F.pairs[b])
                                && lex_leq(F.pairs[b], F.pairs[a])),
                    "lexicographic order is not antisymmetric");
          }
        }
        f.check(order_condition(F.es).holds,
                "OF_" + std::to_string(n) + ": closure of the left triangle is cyclic");
      }
      return std::to_string(pairs) + " related pairs on OF_1..OF_5 all lie in the "
             "lexicographic order; the closure is antisymmetric";
    }

    inline std::string criterion_module_layer(Failures& f) {
      size_t modules = 0, spaces = 0;
      for (size_t n = 1; n <= 4; ++n) {
        std::string const tag = "OF_" + std::to_string(n) + ": ";
        auto const        F   = build_OF(n);
        auto const        C   = associated_category(F.es);
        auto const        map = phi(F.es);
        for (size_t e : F.es.E()) {
          ++modules;
          f.check(phi_module_iso(F.es, C, map, e),
                  tag + "Phi is not a module isomorphism at " + F.es.label(e));
          for (size_t g : F.es.E()) {
            ++spaces;
            auto const H = hom_space(F.es, e, g);
            f.check(H.dimension() == H.alphas.size() && H.r_alpha_form_basis(),
                    tag + "Hom(L~(" + F.es.label(e) + "), L~(" + F.es.label(g)
                        + ")) has dimension " + std::to_string(H.dimension())
                        + " but " + std::to_string(H.alphas.size())
                        + " candidate r_alpha");
          }
        }
        auto const D  = d_category(F.es);
        auto const Co = opposite(C);
        f.check(category_isomorphic(Co, D.category, opposite_to_d_functor(F.es, D))
                    .has_value(),
                tag + "D(S) is not isomorphic to C(S)^op");
      }
      return std::to_string(modules) + " projective modules, " + std::to_string(spaces)
             + " hom spaces, D(S) = C(S)^op on OF_1..OF_4";
    }

    inline std::string criterion_semisimplicity(Failures& f) {
      for (size_t n = 1; n <= 4; ++n) {
        std::string const tag = "OF_" + std::to_string(n) + ": ";
        auto const        F   = build_OF(n);
        f.check(is_semisimple_char0(semigroup_algebra(F.semigroup())),
                tag + "algebra is not semisimple");
        // C(OF_n) is a groupoid with trivial isotropy whose components are the
        // subsets of each size k, so its algebra is a product of full matrix
        // algebras of size C(n-1, k).
        auto const C     = associated_category(F.es);
        auto const flags = category_flags(C);
        f.check(flags.groupoid && flags.locally_trivial,
                tag + "C(S) is not a locally trivial groupoid");
        auto const  dims = peirce_dims(C);
        size_t      sum_blocks = 0;
        size_t      total      = 0;
        for (size_t k = 0; k < n; ++k) {
          sum_blocks += binomial(n - 1, k) * binomial(n - 1, k);
        }
        for (size_t i = 0; i < dims.size(); ++i) {
          for (size_t j = 0; j < dims.size(); ++j) {
            size_t const pi = std::popcount(F.pairs[F.es.E()[i]].X);
            size_t const pj = std::popcount(F.pairs[F.es.E()[j]].X);
            f.check(dims[i][j] == (pi == pj ? 1u : 0u), tag + "wrong Peirce block");
            total += dims[i][j];
          }
        }
        f.check(sum_blocks == binomial(2 * n - 2, n - 1) && total == sum_blocks
                    && total == F.pairs.size(),
                tag + "dimension bookkeeping fails");
      }
      std::vector<size_t> semisimple_catalan;
      for (size_t n = 2; n <= 4; ++n) {
        if (is_semisimple_char0(semigroup_algebra(build_Catalan(n).semigroup()))) {
          semisimple_catalan.push_back(n);
        }
      }
      f.check(semisimple_catalan.empty(),
              "QC_n is semisimple for n = " + join_counts(semisimple_catalan)
                  + " (C_2 consists of two commuting idempotents)");
      return "QOF_1..QOF_4 semisimple with matching block dimensions; QC_2..QC_4 not";
    }

    inline std::string criterion_final_isos(Failures& f) {
      for (size_t n = 1; n <= 3; ++n) {
        auto const a = iso_OF_IO(n);
        f.check(a.category_identified,
                "C(OF_" + std::to_string(n + 1) + ") and C(IO_" + std::to_string(n)
                    + ") not identified");
        f.check(a.psi_inverts_phi, "psi o phi is not the identity on QIO_" + std::to_string(n));
        f.check(a.unit_preserved && a.hom.holds && a.iso,
                "QOF_" + std::to_string(n + 1) + " -> QIO_" + std::to_string(n)
                    + " is not an isomorphism");
        auto const b = iso_C_IC(n);
        f.check(b.category_identified,
                "C(C_" + std::to_string(n + 1) + ") and C(IC_" + std::to_string(n)
                    + ") not identified");
        f.check(b.unit_preserved && b.hom.holds && b.iso && b.psi_inverts_phi,
                "QC_" + std::to_string(n + 1) + " -> QIC_" + std::to_string(n)
                    + " is not an isomorphism");
      }
      return "QOF_{n+1} = QIO_n and QC_{n+1} = QIC_n for n = 1..3";
    }

    inline std::string criterion_mobius(Failures& f) {
      size_t intervals = 0;
      for (size_t n = 0; n <= 3; ++n) {
        auto const F  = build_IO(n);
        auto const P  = natural_order(F.semigroup());
        auto const mu = mobius(P);
        f.check(mobius_identity(P, mu).holds,
                "delta identity fails on IO_" + std::to_string(n));
        for (size_t x = 0; x < P.size(); ++x) {
          for (size_t y = 0; y < P.size(); ++y) {
            intervals += P.leq(x, y);
          }
        }
      }
      return "delta identity on " + std::to_string(intervals)
             + " intervals of IO_0..IO_3";
    }
  }  // namespace detail

  struct Criterion {
    size_t      number;
    std::string id;
    double      limit;
    std::function<std::string(detail::Failures&, AcceptanceOptions const&)> run;
  };

  inline std::vector<Criterion> const& criteria() {
    using detail::Failures;
    using Opt = AcceptanceOptions;
    static std::vector<Criterion> const all = {
        {1, "of-count", 1,
         [](Failures& f, Opt const&) { return detail::criterion_of_count(f); }},
        {2, "of-structure", 30,
         [](Failures& f, Opt const&) { return detail::criterion_of_structure(f); }},
        {3, "theorem-sweep", 60,
         [](Failures& f, Opt const& o) { return detail::criterion_theorem_sweep(f, o); }},
        {4, "phi-iso", 10,
         [](Failures& f, Opt const&) { return detail::criterion_phi_iso(f); }},
        {5, "order-lemma", 0,
         [](Failures& f, Opt const&) { return detail::criterion_order_lemma(f); }},
        {6, "module-layer", 0,
         [](Failures& f, Opt const&) { return detail::criterion_module_layer(f); }},
        {7, "semisimplicity", 0,
         [](Failures& f, Opt const&) { return detail::criterion_semisimplicity(f); }},
        {8, "final-isos", 60,
         [](Failures& f, Opt const&) { return detail::criterion_final_isos(f); }},
        {9, "mobius", 0,
         [](Failures& f, Opt const&) { return detail::criterion_mobius(f); }},
    };
    return all;
  }

  //! Runs one criterion; exceptions count as failures.
  inline CriterionResult run_criterion(Criterion const&         c,
                                       AcceptanceOptions const& opt) {
    CriterionResult  r{c.number, c.id, false, "", 0, c.limit};
    detail::Failures f;
    auto const       start = std::chrono::steady_clock::now();
    try {
      r.detail = c.run(f, opt);
    } catch (std::exception const& e) {
      f.check(false, std::string("exception: ") + e.what());
    }
    r.seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
    f.check(c.limit == 0 || r.seconds <= c.limit,
            "took " + std::to_string(r.seconds) + " s, limit "
                + std::to_string(c.limit) + " s");
    r.pass = f.ok();
    if (!r.pass) {
      r.detail = *f.first;
    }
    return r;
  }

}  // namespace efountain

#endif  // EFOUNTAIN_ACCEPTANCE_HPP_
