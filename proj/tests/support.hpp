// Fixtures shared by the unit tests.

#ifndef EFOUNTAIN_TESTS_SUPPORT_HPP_
#define EFOUNTAIN_TESTS_SUPPORT_HPP_

#include <set>
#include <vector>

#include "efountain/corpus.hpp"
#include "efountain/fountain.hpp"
#include "efountain/semigroup.hpp"

namespace efountain::test {

  inline std::vector<CorpusEntry> const& corpus() {
    static auto const entries
        = read_corpus_file(std::string(EFOUNTAIN_DATA_DIR) + "/corpus.txt");
    return entries;
  }

  inline EStructure structure_of(CorpusEntry const& e) {
    return EStructure(e.semigroup, e.E);
  }

  // Smallest GRA-failing instance: 0 is a zero-like element absorbing from
  // the left, 1 is the identity, 2 a left zero; E = {1, 2}.
  inline EStructure gra_failing() {
    return EStructure(FiniteSemigroup::from_table({{0, 0, 0}, {0, 1, 2}, {2, 2, 2}}),
                      {1, 2});
  }

  // A reduced E-Fountain semigroup with the congruence condition whose
  // left-triangle relation has a cycle.
  inline EStructure cyclic_triangle() {
    return EStructure(FiniteSemigroup::from_table(
                          {{0, 2, 2, 0}, {3, 1, 1, 3}, {0, 2, 2, 0}, {3, 1, 1, 3}}),
                      {2, 3});
  }

  // {0, e, f} with ef = fe = 0.
  inline FiniteSemigroup semilattice3() {
    return FiniteSemigroup::from_table({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  }

  // Null semigroup of order 2: every product is 0.
  inline FiniteSemigroup null2() {
    return FiniteSemigroup::from_table({{0, 0}, {0, 0}});
  }

  inline std::set<size_t> as_set(std::vector<size_t> const& v) {
    return {v.begin(), v.end()};
  }

}  // namespace efountain::test

#endif  // EFOUNTAIN_TESTS_SUPPORT_HPP_
