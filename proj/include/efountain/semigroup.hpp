//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// This file contains FiniteSemigroup, a validated dense multiplication table,
// together with the classical Green's relations machinery.

#ifndef EFOUNTAIN_SEMIGROUP_HPP_
#define EFOUNTAIN_SEMIGROUP_HPP_

#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t, uint64_t
#include <istream>    // for istream
#include <map>        // for map
#include <optional>   // for optional
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream, istringstream
#include <string>     // for string
#include <tuple>      // for tuple
#include <utility>    // for pair
#include <vector>     // for vector

#include "exception.hpp"
#include "sweep.hpp"

namespace efountain {

  //! Above this size the cubic associativity check must be requested
  //! explicitly.
  constexpr size_t exhaustive_check_limit = 512;

  struct TableOptions {
    //! Run the O(n^3) associativity check even when n > exhaustive_check_limit.
    bool allow_large_check = false;
  };

  //! A finite semigroup on the elements 0, ..., n - 1.
  //!
  //! Products are read from a dense table: product(i, j) is i·j. The adjoined
  //! unit of S¹ is never stored; code that needs it handles it explicitly.
  class FiniteSemigroup {
   public:
    using index_type = uint32_t;

    FiniteSemigroup() = default;

    //! Validates range and associativity of \p grid.
    static FiniteSemigroup
    from_table(std::vector<std::vector<size_t>> const& grid,
               std::vector<std::string>                labels  = {},
               TableOptions                            options = {}) {
      size_t const n = grid.size();
      if (n == 0) {
        throw Exception(ErrorCode::out_of_range_entry,
                        "a semigroup needs at least one element");
      }
      FiniteSemigroup S;
      S._size = n;
      S._table.resize(n * n);
      for (size_t i = 0; i < n; ++i) {
        if (grid[i].size() != n) {
          throw Exception(ErrorCode::out_of_range_entry,
                          "row " + std::to_string(i) + " has "
                              + std::to_string(grid[i].size())
                              + " entries, expected " + std::to_string(n));
        }
        for (size_t j = 0; j < n; ++j) {
          if (grid[i][j] >= n) {
            throw Exception(ErrorCode::out_of_range_entry,
                            "entry (" + std::to_string(i) + ","
                                + std::to_string(j) + ") = "
                                + std::to_string(grid[i][j]));
          }
          S._table[i * n + j] = static_cast<index_type>(grid[i][j]);
        }
      }
      S.set_labels(std::move(labels));
      if (n > exhaustive_check_limit && !options.allow_large_check) {
        throw Exception(ErrorCode::size_limit,
                        "associativity check on " + std::to_string(n)
                            + " elements requires allow_large_check");
      }
      if (auto bad = S.associativity_violation()) {
        auto [i, j, k] = *bad;
        throw Exception(ErrorCode::not_associative,
                        "(" + std::to_string(i) + "·" + std::to_string(j)
                            + ")·" + std::to_string(k) + " != "
                            + std::to_string(i) + "·(" + std::to_string(j)
                            + "·" + std::to_string(k) + ")");
      }
      S.find_identity();
      return S;
    }

    //! For tables built from a known associative operation (for example
    //! composition of functions). Only ranges are checked.
    static FiniteSemigroup from_trusted_table(size_t                  n,
                                              std::vector<index_type> table,
                                              std::vector<std::string> labels
                                              = {}) {
      if (n == 0 || table.size() != n * n) {
        throw Exception(ErrorCode::out_of_range_entry,
                        "table size does not match element count");
      }
      for (size_t k = 0; k < table.size(); ++k) {
        if (table[k] >= n) {
          throw Exception(ErrorCode::out_of_range_entry,
                          "entry (" + std::to_string(k / n) + ","
                              + std::to_string(k % n) + ")");
        }
      }
      FiniteSemigroup S;
      S._size  = n;
      S._table = std::move(table);
      S.set_labels(std::move(labels));
      S.find_identity();
      return S;
    }

    size_t size() const noexcept {
      return _size;
    }

    size_t product(size_t i, size_t j) const noexcept {
      return _table[i * _size + j];
    }

    //! i·j·k, associated either way.
    size_t product(size_t i, size_t j, size_t k) const noexcept {
      return product(product(i, j), k);
    }

    std::string const& label(size_t i) const {
      return _labels[i];
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    bool is_monoid() const noexcept {
      return _identity.has_value();
    }

    std::optional<size_t> identity() const noexcept {
      return _identity;
    }

    //! The dual semigroup: i ∘ j = j·i.
    FiniteSemigroup reversed() const {
      FiniteSemigroup S = *this;
      for (size_t i = 0; i < _size; ++i) {
        for (size_t j = 0; j < _size; ++j) {
          S._table[i * _size + j] = _table[j * _size + i];
        }
      }
      return S;
    }

    std::vector<std::vector<size_t>> grid() const {
      std::vector<std::vector<size_t>> g(_size, std::vector<size_t>(_size));
      for (size_t i = 0; i < _size; ++i) {
        for (size_t j = 0; j < _size; ++j) {
          g[i][j] = product(i, j);
        }
      }
      return g;
    }

    //! First (i, j, k) in lexicographic order with (ij)k != i(jk).
    std::optional<std::tuple<size_t, size_t, size_t>>
    associativity_violation() const {
      size_t const n   = _size;
      auto         bad = first_failure(n * n, [&](size_t ij) {
        size_t const i = ij / n, j = ij % n, prod = product(i, j);
        for (size_t k = 0; k < n; ++k) {
          if (product(prod, k) != product(i, product(j, k))) {
            return true;
          }
        }
        return false;
      });
      if (!bad) {
        return std::nullopt;
      }
      size_t const i = *bad / n, j = *bad % n;
      for (size_t k = 0; k < n; ++k) {
        if (product(product(i, j), k) != product(i, product(j, k))) {
          return std::make_tuple(i, j, k);
        }
      }
      return std::nullopt;  // unreachable
    }

    friend bool operator==(FiniteSemigroup const& a, FiniteSemigroup const& b) {
      return a._size == b._size && a._table == b._table;
    }

   private:
    void set_labels(std::vector<std::string> labels) {
      if (labels.empty()) {
        labels.reserve(_size);
        for (size_t i = 0; i < _size; ++i) {
          labels.push_back(std::to_string(i));
        }
      } else if (labels.size() != _size) {
        throw Exception(ErrorCode::parse_error,
                        "expected " + std::to_string(_size) + " labels, got "
                            + std::to_string(labels.size()));
      }
      _labels = std::move(labels);
    }

    void find_identity() {
      _identity.reset();
      for (size_t e = 0; e < _size; ++e) {
        bool ok = true;
        for (size_t i = 0; i < _size && ok; ++i) {
          ok = product(e, i) == i && product(i, e) == i;
        }
        if (ok) {
          _identity = e;
          return;
        }
      }
    }

    size_t                   _size = 0;
    std::vector<index_type>  _table;
    std::vector<std::string> _labels;
    std::optional<size_t>    _identity;
  };

  ////////////////////////////////////////////////////////////////////////
  // Table text format
  ////////////////////////////////////////////////////////////////////////

  //! Reads the multiplication-table format: the element count, then one row
  //! of products per element, then optionally "labels:" and n tokens. Lines
  //! starting with '#' are comments.
  inline FiniteSemigroup read_table(std::istream& in,
                                    TableOptions  options = {}) {
    std::vector<std::string> lines;
    std::string              line;
    while (std::getline(in, line)) {
      size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') {
        continue;
      }
      lines.push_back(line.substr(start));
    }
    if (lines.empty()) {
      throw Exception(ErrorCode::parse_error, "empty table");
    }
    size_t n = 0;
    {
      std::istringstream first(lines[0]);
      std::string        extra;
      if (!(first >> n) || (first >> extra) || n == 0) {
        throw Exception(ErrorCode::parse_error,
                        "first line must be a positive element count");
      }
    }
    if (lines.size() < n + 1) {
      throw Exception(ErrorCode::parse_error,
                      "expected " + std::to_string(n) + " rows, found "
                          + std::to_string(lines.size() - 1));
    }
    std::vector<std::vector<size_t>> grid(n);
    for (size_t i = 0; i < n; ++i) {
      std::istringstream row(lines[i + 1]);
      long long          v;
      while (row >> v) {
        if (v < 0) {
          throw Exception(ErrorCode::out_of_range_entry,
                          "negative entry in row " + std::to_string(i));
        }
        grid[i].push_back(static_cast<size_t>(v));
      }
      if (!row.eof()) {
        throw Exception(ErrorCode::parse_error,
                        "non-integer token in row " + std::to_string(i));
      }
      if (grid[i].size() != n) {
        throw Exception(ErrorCode::parse_error,
                        "row " + std::to_string(i) + " has "
                            + std::to_string(grid[i].size()) + " entries");
      }
    }
    std::vector<std::string> labels;
    if (lines.size() > n + 1) {
      std::string rest;
      for (size_t k = n + 1; k < lines.size(); ++k) {
        rest += lines[k];
        rest += '\n';
      }
      std::istringstream tail(rest);
      std::string        tok;
      tail >> tok;
      if (tok.rfind("labels:", 0) != 0) {
        throw Exception(ErrorCode::parse_error,
                        "unexpected content after the table: " + tok);
      }
      if (tok.size() > 7) {
        labels.push_back(tok.substr(7));
      }
      while (tail >> tok) {
        labels.push_back(tok);
      }
      if (labels.size() != n) {
        throw Exception(ErrorCode::parse_error,
                        "expected " + std::to_string(n) + " labels, got "
                            + std::to_string(labels.size()));
      }
    }
    return FiniteSemigroup::from_table(grid, std::move(labels), options);
  }

  inline FiniteSemigroup parse_table(std::string const& text,
                                     TableOptions       options = {}) {
    std::istringstream in(text);
    return read_table(in, options);
  }

  //! Writes S in the table format; labels are written unless they are the
  //! default decimal indices.
  inline void write_table(std::ostream& out, FiniteSemigroup const& S) {
    size_t const n = S.size();
    out << n << '\n';
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        out << (j == 0 ? "" : " ") << S.product(i, j);
      }
      out << '\n';
    }
    bool custom = false;
    for (size_t i = 0; i < n && !custom; ++i) {
      custom = S.label(i) != std::to_string(i);
    }
    if (custom) {
      out << "labels:\n";
      for (size_t i = 0; i < n; ++i) {
        out << (i == 0 ? "" : " ") << S.label(i);
      }
      out << '\n';
    }
  }

  inline std::string format_table(FiniteSemigroup const& S) {
    std::ostringstream out;
    write_table(out, S);
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents and their natural order
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<size_t> idempotents(FiniteSemigroup const& S) {
    std::vector<size_t> out;
    for (size_t i = 0; i < S.size(); ++i) {
      if (S.product(i, i) == i) {
        out.push_back(i);
      }
    }
    return out;
  }

  inline bool is_idempotent(FiniteSemigroup const& S, size_t i) {
    return i < S.size() && S.product(i, i) == i;
  }

  //! e ≤ f iff ef = e = fe.
  inline bool natural_order_leq(FiniteSemigroup const& S, size_t e, size_t f) {
    if (!is_idempotent(S, e) || !is_idempotent(S, f)) {
      throw Exception(ErrorCode::not_idempotent,
                      "natural order is defined on idempotents only ("
                          + std::to_string(e) + ", " + std::to_string(f) + ")");
    }
    return S.product(e, f) == e && S.product(f, e) == e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions and relations
  ////////////////////////////////////////////////////////////////////////

  //! A partition of {0, ..., n - 1}; classes are numbered in order of their
  //! smallest element.
  class Partition {
   public:
    Partition() = default;

    //! Renumbers arbitrary class keys canonically.
    template <typename TKey>
    static Partition from_keys(std::vector<TKey> const& keys) {
      Partition          p;
      std::map<TKey, size_t> number;
      p._class_of.resize(keys.size());
      for (size_t i = 0; i < keys.size(); ++i) {
        auto [it, inserted] = number.emplace(keys[i], number.size());
        p._class_of[i]      = it->second;
      }
      p._count = number.size();
      return p;
    }

    size_t size() const noexcept {
      return _class_of.size();
    }
    size_t count() const noexcept {
      return _count;
    }
    size_t class_of(size_t i) const {
      return _class_of[i];
    }
    bool same(size_t i, size_t j) const {
      return _class_of[i] == _class_of[j];
    }

    std::vector<std::vector<size_t>> classes() const {
      std::vector<std::vector<size_t>> out(_count);
      for (size_t i = 0; i < _class_of.size(); ++i) {
        out[_class_of[i]].push_back(i);
      }
      return out;
    }

    std::vector<size_t> members(size_t i) const {
      std::vector<size_t> out;
      for (size_t j = 0; j < _class_of.size(); ++j) {
        if (_class_of[j] == _class_of[i]) {
          out.push_back(j);
        }
      }
      return out;
    }

    //! Every class of this partition lies inside a class of \p coarser.
    bool refines(Partition const& coarser) const {
      std::vector<size_t> image(_count, size_t(-1));
      for (size_t i = 0; i < _class_of.size(); ++i) {
        size_t& slot = image[_class_of[i]];
        if (slot == size_t(-1)) {
          slot = coarser.class_of(i);
        } else if (slot != coarser.class_of(i)) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(Partition const& a, Partition const& b) {
      return a._class_of == b._class_of;
    }

   private:
    std::vector<size_t> _class_of;
    size_t              _count = 0;
  };

  //! A binary relation on {0, ..., n - 1} stored as one bitset per column:
  //! below(b) is { a : a ≤ b }.
  class Preorder {
   public:
    Preorder() = default;
    explicit Preorder(size_t n)
        : _n(n), _words((n + 63) / 64), _bits(n * _words, 0) {}

    size_t size() const noexcept {
      return _n;
    }

    bool leq(size_t a, size_t b) const {
      return (_bits[b * _words + a / 64] >> (a % 64)) & 1;
    }

    void set(size_t a, size_t b) {
      _bits[b * _words + a / 64] |= uint64_t(1) << (a % 64);
    }

    //! below(b) |= other.below(c)
    void absorb(size_t b, Preorder const& other, size_t c) {
      for (size_t w = 0; w < _words; ++w) {
        _bits[b * _words + w] |= other._bits[c * _words + w];
      }
    }

    Partition symmetrization() const {
      std::vector<size_t> key(_n);
      for (size_t a = 0; a < _n; ++a) {
        key[a] = a;
        for (size_t b = 0; b < a; ++b) {
          if (leq(a, b) && leq(b, a)) {
            key[a] = key[b];
            break;
          }
        }
      }
      return Partition::from_keys(key);
    }

   private:
    size_t                _n     = 0;
    size_t                _words = 0;
    std::vector<uint64_t> _bits;
  };

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  struct GreenData {
    Preorder  r_leq;
    Preorder  l_leq;
    Preorder  j_leq;
    Partition r_class;
    Partition l_class;
    Partition j_class;
    Partition h_class;
  };

  //! Computes ≤_R, ≤_L and ≤_J (with the adjoined unit simulated) and their
  //! classes.
  inline GreenData green_classes(FiniteSemigroup const& S) {
    size_t const n = S.size();
    GreenData    g{Preorder(n), Preorder(n), Preorder(n), {}, {}, {}, {}};
    for (size_t b = 0; b < n; ++b) {
      g.r_leq.set(b, b);
      g.l_leq.set(b, b);
      for (size_t s = 0; s < n; ++s) {
        g.r_leq.set(S.product(b, s), b);  // bS¹
        g.l_leq.set(S.product(s, b), b);  // S¹b
      }
    }
    // S¹bS¹ is the union of S¹y over y in bS¹.
    for (size_t b = 0; b < n; ++b) {
      for (size_t y = 0; y < n; ++y) {
        if (g.r_leq.leq(y, b)) {
          g.j_leq.absorb(b, g.l_leq, y);
        }
      }
    }
    g.r_class = g.r_leq.symmetrization();
    g.l_class = g.l_leq.symmetrization();
    g.j_class = g.j_leq.symmetrization();
    std::vector<std::pair<size_t, size_t>> hkey(n);
    for (size_t a = 0; a < n; ++a) {
      hkey[a] = {g.r_class.class_of(a), g.l_class.class_of(a)};
    }
    g.h_class = Partition::from_keys(hkey);
    return g;
  }

  struct StructureFlags {
    bool h_trivial;
    bool regular;
  };

  inline bool is_regular_element(FiniteSemigroup const& S, size_t a) {
    for (size_t b = 0; b < S.size(); ++b) {
      if (S.product(a, b, a) == a) {
        return true;
      }
    }
    return false;
  }

  inline StructureFlags structure_flags(FiniteSemigroup const& S,
                                        GreenData const&       g) {
    StructureFlags flags{g.h_class.count() == S.size(), true};
    for (size_t a = 0; a < S.size() && flags.regular; ++a) {
      flags.regular = is_regular_element(S, a);
    }
    return flags;
  }

  inline StructureFlags structure_flags(FiniteSemigroup const& S) {
    return structure_flags(S, green_classes(S));
  }

  //! Inverse β of α with αβα = α and βαβ = β, first in index order.
  inline std::optional<size_t> first_inverse(FiniteSemigroup const& S,
                                             size_t                 alpha) {
    for (size_t b = 0; b < S.size(); ++b) {
      if (S.product(alpha, b, alpha) == alpha
          && S.product(b, alpha, b) == b) {
        return b;
      }
    }
    return std::nullopt;
  }

  //! Checks that ρ_α : L_e → L_f, x ↦ xα, is a homomorphism of the partial
  //! left actions of S on L_e and L_f, where e = αβ and f = βα for the first
  //! inverse β of α. Always true for regular α; kept as an oracle.
  inline bool rho_hom_check(FiniteSemigroup const& S,
                            GreenData const&       g,
                            size_t                 alpha) {
    auto beta = first_inverse(S, alpha);
    if (!beta) {
      throw Exception(ErrorCode::not_regular,
                      "element " + std::to_string(alpha) + " ("
                          + S.label(alpha) + ") has no inverse");
    }
    size_t const e = S.product(alpha, *beta), f = S.product(*beta, alpha);
    auto in_le = [&](size_t x) { return g.l_class.same(x, e); };
    auto in_lf = [&](size_t x) { return g.l_class.same(x, f); };
    for (size_t x : g.l_class.members(e)) {
      size_t const image = S.product(x, alpha);
      if (!in_lf(image)) {
        return false;
      }
      for (size_t s = 0; s < S.size(); ++s) {
        size_t const sx = S.product(s, x);
        // s·ρ(x) = s·x·α = ρ(s·x), so only definedness can differ.
        if (in_le(sx) != in_lf(S.product(s, image))) {
          return false;
        }
        if (in_le(sx) && S.product(sx, alpha) != S.product(s, image)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool rho_hom_check(FiniteSemigroup const& S, size_t alpha) {
    return rho_hom_check(S, green_classes(S), alpha);
  }

}  // namespace efountain

#endif  // EFOUNTAIN_SEMIGROUP_HPP_
