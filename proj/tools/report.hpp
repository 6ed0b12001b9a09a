// JSON views of verdicts, categories, linear maps and the analysis pipeline
// used by the efountain command-line tool.

#ifndef EFOUNTAIN_TOOLS_REPORT_HPP_
#define EFOUNTAIN_TOOLS_REPORT_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "efountain/algebra.hpp"
#include "efountain/category.hpp"
#include "efountain/fountain.hpp"
#include "efountain/semigroup.hpp"
#include "json.hpp"

namespace efountain::report {

  using json = nlohmann::ordered_json;

  inline constexpr char const* analysis_schema   = "efountain.analysis/1";
  inline constexpr char const* linear_map_schema = "efountain.linear-map/1";

  //! Algebra checks are skipped above this many elements.
  inline constexpr size_t algebra_size_limit = 300;

  inline json labels_of(FiniteSemigroup const& S, std::vector<size_t> const& idx) {
    json out = json::array();
    for (size_t i : idx) {
      out.push_back(S.label(i));
    }
    return out;
  }

  inline json witness_json(FiniteSemigroup const& S, Witness const& w) {
    return json{{"elements", w.elements},
                {"labels", labels_of(S, w.elements)},
                {"description", w.description}};
  }

  //! {"status": "true" | "false" | "skipped", ...}
  inline json verdict_json(FiniteSemigroup const& S, Verdict const& v) {
    json out{{"status", v.holds ? "true" : "false"}};
    if (v.witness) {
      out["witness"] = witness_json(S, *v.witness);
    }
    return out;
  }

  inline json flag_json(bool b) {
    return json{{"status", b ? "true" : "false"}};
  }

  inline json skipped(std::string const& reason) {
    return json{{"status", "skipped"}, {"reason", reason}};
  }

  inline std::string rational_string(Rational const& q) {
    return q.get_str();
  }

  //! Row-major entries as exact rational strings such as "1" or "-1/2".
  inline json linear_map_json(LinearMap const& map) {
    json entries = json::array();
    for (size_t r = 0; r < map.matrix.rows(); ++r) {
      json row = json::array();
      for (size_t c = 0; c < map.matrix.cols(); ++c) {
        row.push_back(rational_string(map.matrix(r, c)));
      }
      entries.push_back(std::move(row));
    }
    return json{{"schema", linear_map_schema},
                {"domain", to_string(map.domain_tag)},
                {"codomain", to_string(map.codomain_tag)},
                {"rows", map.matrix.rows()},
                {"cols", map.matrix.cols()},
                {"entries", std::move(entries)}};
  }

  struct AnalysisInput {
    json                descriptor;
    FiniteSemigroup     semigroup;
    std::vector<size_t> E;
    size_t              budget = default_enumeration_budget;
    bool                timing = false;
  };

  struct Analysis {
    json report;
    //! Every evaluated condition holds.
    bool all_hold = true;
  };

  namespace detail {
    class Timer {
     public:
      explicit Timer(bool on) : _on(on) {}
      void lap(json& into, char const* name) {
        if (!_on) {
          return;
        }
        auto const now = std::chrono::steady_clock::now();
        into[name]     = std::chrono::duration<double>(now - _last).count();
        _last          = now;
      }

     private:
      bool                                  _on;
      std::chrono::steady_clock::time_point _last = std::chrono::steady_clock::now();
    };
  }  // namespace detail

  //! Runs the pipeline in dependency order; conditions whose prerequisites
  //! fail are reported as skipped.
  inline Analysis analyze(AnalysisInput const& in) {
    Analysis               out;
    // ordered_json keeps members in a vector, so sections are built as
    // locals and inserted once complete.
    json&                  r = out.report;
    FiniteSemigroup const& S = in.semigroup;
    json                   timing = json::object();
    detail::Timer          timer(in.timing);

    r["schema"] = analysis_schema;
    r["input"]  = in.descriptor;
    r["input"]["size"] = S.size();
    r["input"]["E"]    = {{"elements", in.E}, {"labels", labels_of(S, in.E)}};

    auto const g     = green_classes(S);
    auto const flags = structure_flags(S, g);
    r["structure"]   = {{"monoid", S.is_monoid()},
                        {"regular", flags.regular},
                        {"h_trivial", flags.h_trivial},
                        {"idempotents", idempotents(S).size()},
                        {"r_classes", g.r_class.count()},
                        {"l_classes", g.l_class.count()},
                        {"j_classes", g.j_class.count()},
                        {"h_classes", g.h_class.count()}};
    timer.lap(timing, "green");

    json  cond  = json::object();
    auto  note  = [&](char const* name, json v) {
      if (v["status"] == "false") {
        out.all_hold = false;
      }
      cond[name] = std::move(v);
    };
    auto const tc    = tilde_classes(S, in.E);
    r["tilde"]       = {{"ltilde_classes", tc.ltilde.count()},
                        {"rtilde_classes", tc.rtilde.count()}};
    auto const check = e_fountain_check(S, in.E);
    note("fountain", check.fountain || !check.witness
                         ? flag_json(check.fountain)
                         : verdict_json(S, Verdict{false, check.witness}));
    note("reduced", flag_json(check.reduced));
    if (check.fountain && !check.reduced && check.witness) {
      cond["reduced"]["witness"] = witness_json(S, *check.witness);
    }
    std::optional<EStructure> ES;
    if (check.fountain && check.reduced) {
      ES.emplace(S, in.E);
    }
    bool congruence = false;
    if (ES) {
      auto v     = congruence_condition(*ES);
      congruence = v.holds;
      note("congruence", verdict_json(S, v));
    } else {
      note("congruence", skipped("not a reduced E-Fountain semigroup"));
    }
    if (congruence) {
      note("gra", verdict_json(S, gra_check(*ES)));
      note("gla", verdict_json(S, gla_check(*ES)));
    } else {
      note("gra", skipped("congruence condition not established"));
      note("gla", skipped("congruence condition not established"));
    }
    timer.lap(timing, "conditions");

    json cat = json::object();
    json alg = json::object();
    if (!congruence) {
      cat = skipped("congruence condition not established");
      note("phi_hom", skipped("congruence condition not established"));
      note("phi_iso", skipped("congruence condition not established"));
    } else {
      auto const C  = associated_category(*ES);
      auto const cf = category_flags(C);
      cat           = {{"objects", C.number_of_objects()},
                       {"morphisms", C.number_of_morphisms()},
                       {"groupoid", cf.groupoid},
                       {"locally_trivial", cf.locally_trivial}};
      if (cond["gra"]["status"] == "true") {
        try {
          auto const D = d_category(*ES, in.budget);
          auto const F = category_isomorphic(opposite(C), D.category,
                                             opposite_to_d_functor(*ES, D));
          cat["d_category_morphisms"]  = D.category.number_of_morphisms();
          cat["d_isomorphic_to_opposite"] = flag_json(F.has_value());
        } catch (Exception const& e) {
          cat["d_isomorphic_to_opposite"] = skipped(e.what());
        }
      } else {
        cat["d_isomorphic_to_opposite"] = skipped("GRA does not hold");
      }
      timer.lap(timing, "category");
      if (S.size() > algebra_size_limit) {
        std::string const why = "more than " + std::to_string(algebra_size_limit)
                                + " elements";
        note("phi_hom", skipped(why));
        note("phi_iso", skipped(why));
        alg["order_condition"] = skipped(why);
      } else {
        auto const map = phi(*ES);
        auto const hom = check_algebra_hom(map, semigroup_algebra(S),
                                           category_algebra(C));
        json       hom_json = verdict_json(S, hom);
        if (hom.witness) {
          auto const& w = hom.witness->elements;
          hom_json["witness"]["description"]
              = "phi(" + S.label(w[0]) + " " + S.label(w[1]) + ") != phi("
                + S.label(w[0]) + ") phi(" + S.label(w[1]) + ")";
        }
        note("phi_hom", std::move(hom_json));
        bool const bijective = check_iso(map);
        note("phi_iso", flag_json(hom.holds && bijective));
        alg["phi_bijective"]   = bijective;
        alg["order_condition"] = verdict_json(S, order_condition(*ES));
      }
      timer.lap(timing, "phi");
    }
    if (S.size() > algebra_size_limit) {
      alg["semisimple"] = skipped("more than " + std::to_string(algebra_size_limit)
                                  + " elements");
    } else {
      try {
        alg["semisimple"] = flag_json(is_semisimple_char0(semigroup_algebra(S)));
      } catch (Exception const& e) {
        alg["semisimple"] = skipped(e.what());
      }
    }
    timer.lap(timing, "semisimple");
    r["conditions"] = std::move(cond);
    r["category"]   = std::move(cat);
    r["algebra"]    = std::move(alg);
    if (in.timing) {
      r["timing"] = std::move(timing);
    }
    r["all_conditions_hold"] = out.all_hold;
    return out;
  }

}  // namespace efountain::report

#endif  // EFOUNTAIN_TOOLS_REPORT_HPP_
