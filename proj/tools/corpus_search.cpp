// Searches small transformation, partial transformation and relation
// semigroups for reduced E-Fountain pairs (S, E) with the congruence
// condition and writes them, deduplicated up to isomorphism, as a corpus.
//
// The search is deterministic for a given seed and trial count.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "efountain/algebra.hpp"
#include "efountain/corpus.hpp"
#include "efountain/fountain.hpp"

namespace {

  using efountain::CorpusEntry;
  using efountain::EStructure;
  using efountain::FiniteSemigroup;

  using Elem = std::vector<uint8_t>;

  constexpr uint8_t none = 0xff;

  enum class Source { transformations, partial, relations };

  // g after f
  Elem compose(Source src, Elem const& g, Elem const& f) {
    Elem out(f.size(), 0);
    for (size_t v = 0; v < f.size(); ++v) {
      if (src == Source::relations) {
        for (size_t y = 0; y < f.size(); ++y) {
          if ((f[v] >> y) & 1) {
            out[v] |= g[y];
          }
        }
      } else {
        out[v] = f[v] == none ? none : g[f[v]];
      }
    }
    return out;
  }

  Elem random_elem(Source src, size_t k, std::mt19937& rng) {
    Elem e(k);
    for (auto& v : e) {
      switch (src) {
        case Source::transformations:
          v = uint8_t(rng() % k);
          break;
        case Source::partial: {
          auto r = rng() % (k + 1);
          v      = r == k ? none : uint8_t(r);
          break;
        }
        case Source::relations:
          v = uint8_t(rng() % (1u << k));
          break;
      }
    }
    return e;
  }

  // The subsemigroup generated by gens, or empty if it exceeds max_size.
  std::vector<Elem> generate(Source src, std::vector<Elem> const& gens, size_t max_size) {
    std::set<Elem>    seen(gens.begin(), gens.end());
    std::vector<Elem> queue(seen.begin(), seen.end());
    for (size_t i = 0; i < queue.size(); ++i) {
      for (auto const& g : gens) {
        for (Elem const& p : {compose(src, queue[i], g), compose(src, g, queue[i])}) {
          if (seen.insert(p).second) {
            if (seen.size() > max_size) {
              return {};
            }
            queue.push_back(p);
          }
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  FiniteSemigroup table_of(Source src, std::vector<Elem> const& elems) {
    size_t const                                n = elems.size();
    std::map<Elem, size_t>                      index;
    for (size_t i = 0; i < n; ++i) {
      index[elems[i]] = i;
    }
    std::vector<std::vector<size_t>> grid(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        grid[i][j] = index.at(compose(src, elems[i], elems[j]));
      }
    }
    return FiniteSemigroup::from_table(grid);
  }

  // Lexicographically least relabelling of (S, E): the table followed by a
  // marker per element saying whether it lies in E.
  std::vector<uint8_t> canonical_form(FiniteSemigroup const& S,
                                      std::vector<size_t> const& E) {
    size_t const        n = S.size();
    std::vector<bool>   in_e(n, false);
    for (size_t e : E) {
      in_e[e] = true;
    }
    std::vector<size_t> perm(n);  // new index -> old index
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint8_t> best;
    do {
      std::vector<size_t> inv(n);
      for (size_t i = 0; i < n; ++i) {
        inv[perm[i]] = i;
      }
      std::vector<uint8_t> form;
      form.reserve(n * n + n);
      for (size_t i = 0; i < n; ++i) {
        form.push_back(uint8_t(in_e[perm[i]]));
      }
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          form.push_back(uint8_t(inv[S.product(perm[i], perm[j])]));
        }
      }
      if (best.empty() || form < best) {
        best = std::move(form);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  // Rebuilds (S, E) from a canonical form.
  CorpusEntry from_form(std::vector<uint8_t> const& form, size_t n) {
    std::vector<std::vector<size_t>> grid(n, std::vector<size_t>(n));
    std::vector<size_t>              E;
    for (size_t i = 0; i < n; ++i) {
      if (form[i]) {
        E.push_back(i);
      }
      for (size_t j = 0; j < n; ++j) {
        grid[i][j] = form[n + i * n + j];
      }
    }
    return {"", FiniteSemigroup::from_table(grid), E};
  }

  struct Found {
    CorpusEntry entry;
    bool        gra;
    bool        gla;
    bool        order;
  };

}  // namespace

int main(int argc, char** argv) {
  CLI::App    app{"Search for reduced E-Fountain semigroups of small order"};
  std::string out_path;
  uint32_t    seed     = 20260101;
  size_t      trials   = 20000;
  size_t      max_size = 6;
  size_t      keep     = 120;
  app.add_option("--out", out_path, "corpus file to write")->required();
  app.add_option("--seed", seed, "random seed");
  app.add_option("--trials", trials, "generator sets tried per source");
  app.add_option("--max-order", max_size, "largest semigroup kept");
  app.add_option("--keep", keep, "number of entries written");
  CLI11_PARSE(app, argc, argv);

  std::mt19937 rng(seed);
  // canonical form -> verdicts, ordered by size then form
  std::map<std::pair<size_t, std::vector<uint8_t>>, Found> found;

  struct Setup {
    Source src;
    size_t k;
  };
  std::vector<Setup> const setups = {{Source::transformations, 3},
                                     {Source::transformations, 4},
                                     {Source::partial, 3},
                                     {Source::partial, 4},
                                     {Source::relations, 2},
                                     {Source::relations, 3}};
  for (auto const& [src, k] : setups) {
    for (size_t t = 0; t < trials; ++t) {
      std::vector<Elem> gens;
      size_t const      g = 1 + rng() % 3;
      for (size_t i = 0; i < g; ++i) {
        gens.push_back(random_elem(src, k, rng));
      }
      auto const elems = generate(src, gens, max_size);
      if (elems.empty()) {
        continue;
      }
      FiniteSemigroup const S0 = table_of(src, elems);
      for (FiniteSemigroup const& S : {S0, S0.reversed()}) {
        auto const idem = efountain::idempotents(S);
        for (uint32_t mask = 1; mask < (1u << idem.size()); ++mask) {
          std::vector<size_t> E;
          for (size_t i = 0; i < idem.size(); ++i) {
            if ((mask >> i) & 1) {
              E.push_back(idem[i]);
            }
          }
          auto const check = efountain::e_fountain_check(S, E);
          if (!check.fountain || !check.reduced) {
            continue;
          }
          auto key = std::make_pair(S.size(), canonical_form(S, E));
          if (found.count(key)) {
            continue;
          }
          auto       entry = from_form(key.second, S.size());
          EStructure ES(entry.semigroup, entry.E);
          if (!efountain::congruence_condition(ES).holds) {
            continue;
          }
          found.emplace(key,
                        Found{std::move(entry),
                              efountain::gra_check(ES).holds,
                              efountain::gla_check(ES).holds,
                              efountain::order_condition(ES).holds});
        }
      }
    }
  }

  // Every instance failing GRA, GLA or the order condition first, then the
  // rest in canonical order up to the requested count.
  std::vector<Found const*> chosen;
  for (auto const& [key, f] : found) {
    if (!f.gra || !f.gla || !f.order) {
      chosen.push_back(&f);
    }
  }
  for (auto const& [key, f] : found) {
    if (chosen.size() >= keep) {
      break;
    }
    if (f.gra && f.gla && f.order) {
      chosen.push_back(&f);
    }
  }
  std::stable_sort(chosen.begin(), chosen.end(), [](Found const* a, Found const* b) {
    return a->entry.semigroup.size() < b->entry.semigroup.size();
  });

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << '\n';
    return 2;
  }
  out << "# Reduced E-Fountain semigroups with the congruence condition, one\n"
         "# per isomorphism class of (S, E). Generated by corpus_search --seed "
      << seed << " --trials " << trials << " --max-order " << max_size
      << " --keep " << keep << ".\n";
  size_t gra_fail = 0, gla_fail = 0, order_fail = 0;
  std::map<size_t, size_t> per_size;
  for (size_t i = 0; i < chosen.size(); ++i) {
    CorpusEntry e = chosen[i]->entry;
    size_t const n = e.semigroup.size();
    e.name = "n" + std::to_string(n) + "-" + std::to_string(per_size[n]++);
    if (!chosen[i]->gra) {
      e.name += "-gra-fails";
    }
    if (!chosen[i]->gla) {
      e.name += "-gla-fails";
    }
    if (!chosen[i]->order) {
      e.name += "-cyclic";
    }
    gra_fail += !chosen[i]->gra;
    gla_fail += !chosen[i]->gla;
    order_fail += !chosen[i]->order;
    efountain::write_corpus_entry(out, e);
  }
  std::cerr << "classes found: " << found.size() << ", written: " << chosen.size()
            << ", GRA failing: " << gra_fail << ", GLA failing: " << gla_fail
            << ", order condition failing: " << order_fail << '\n';
  return 0;
}
