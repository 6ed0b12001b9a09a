//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// Exact rational linear algebra: dense matrices, sparse algebra elements and
// Gauss-Jordan elimination. All arithmetic is exact; nothing is ever rounded.

#ifndef EFOUNTAIN_LINALG_HPP_
#define EFOUNTAIN_LINALG_HPP_

#include <gmpxx.h>  // for mpq_class

#include <cstddef>   // for size_t
#include <map>       // for map
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "exception.hpp"

namespace efountain {

  //! Field elements. Always stored in canonical (reduced) form.
  using Rational = mpq_class;

  //! Which kind of basis an algebra element is written in.
  enum class BasisTag { semigroup, category };

  inline char const* to_string(BasisTag tag) noexcept {
    return tag == BasisTag::semigroup ? "semigroup" : "category";
  }

  //! A sparse linear combination of basis elements; zero coefficients are
  //! never stored.
  class AlgebraElement {
   public:
    using container_type = std::map<size_t, Rational>;

    explicit AlgebraElement(BasisTag tag = BasisTag::semigroup) : _tag(tag) {}

    static AlgebraElement basis(BasisTag tag, size_t i) {
      AlgebraElement x(tag);
      x._coeffs.emplace(i, Rational(1));
      return x;
    }

    BasisTag tag() const noexcept {
      return _tag;
    }

    container_type const& coefficients() const noexcept {
      return _coeffs;
    }

    bool is_zero() const noexcept {
      return _coeffs.empty();
    }

    Rational coefficient(size_t i) const {
      auto it = _coeffs.find(i);
      return it == _coeffs.end() ? Rational(0) : it->second;
    }

    void add(size_t i, Rational const& c) {
      if (c == 0) {
        return;
      }
      auto [it, inserted] = _coeffs.emplace(i, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          _coeffs.erase(it);
        }
      }
    }

    AlgebraElement& operator+=(AlgebraElement const& that) {
      check_tag(that);
      for (auto const& [i, c] : that._coeffs) {
        add(i, c);
      }
      return *this;
    }

    AlgebraElement& operator*=(Rational const& c) {
      if (c == 0) {
        _coeffs.clear();
        return *this;
      }
      for (auto& kv : _coeffs) {
        kv.second *= c;
      }
      return *this;
    }

    friend AlgebraElement operator+(AlgebraElement x, AlgebraElement const& y) {
      x += y;
      return x;
    }

    friend AlgebraElement operator-(AlgebraElement x, AlgebraElement y) {
      y *= Rational(-1);
      x += y;
      return x;
    }

    friend AlgebraElement operator*(Rational const& c, AlgebraElement x) {
      x *= c;
      return x;
    }

    friend bool operator==(AlgebraElement const& x, AlgebraElement const& y) {
      return x._tag == y._tag && x._coeffs == y._coeffs;
    }

    void check_tag(AlgebraElement const& that) const {
      if (that._tag != _tag) {
        throw Exception(ErrorCode::basis_mismatch,
                        std::string("cannot combine ") + to_string(_tag)
                            + " and " + to_string(that._tag) + " elements");
      }
    }

   private:
    BasisTag       _tag;
    container_type _coeffs;
  };

  //! Dense row-major rational matrix.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, Rational(0)) {}

    static Matrix identity(size_t n) {
      Matrix m(n, n);
      for (size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    size_t rows() const noexcept {
      return _rows;
    }
    size_t cols() const noexcept {
      return _cols;
    }

    Rational& operator()(size_t r, size_t c) {
      return _data[r * _cols + c];
    }
    Rational const& operator()(size_t r, size_t c) const {
      return _data[r * _cols + c];
    }

    bool is_zero() const {
      for (auto const& x : _data) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    Matrix transpose() const {
      Matrix t(_cols, _rows);
      for (size_t r = 0; r < _rows; ++r) {
        for (size_t c = 0; c < _cols; ++c) {
          t(c, r) = (*this)(r, c);
        }
      }
      return t;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      if (a._cols != b._rows) {
        throw Exception(ErrorCode::dimension_mismatch,
                        "matrix product of " + std::to_string(a._rows) + "x"
                            + std::to_string(a._cols) + " and "
                            + std::to_string(b._rows) + "x"
                            + std::to_string(b._cols));
      }
      Matrix out(a._rows, b._cols);
      for (size_t i = 0; i < a._rows; ++i) {
        for (size_t k = 0; k < a._cols; ++k) {
          Rational const& x = a(i, k);
          if (x == 0) {
            continue;
          }
          for (size_t j = 0; j < b._cols; ++j) {
            if (b(k, j) != 0) {
              out(i, j) += x * b(k, j);
            }
          }
        }
      }
      return out;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

   private:
    size_t                _rows = 0;
    size_t                _cols = 0;
    std::vector<Rational> _data;
  };

  //! Result of reducing a matrix to reduced row echelon form in place.
  struct EchelonForm {
    Matrix              reduced;
    std::vector<size_t> pivot_columns;
    Rational            determinant_factor;  // product of pivots times sign
  };

  //! Gauss-Jordan elimination with the first non-zero entry as pivot.
  inline EchelonForm row_reduce(Matrix m) {
    std::vector<size_t> pivots;
    Rational            det(1);
    size_t              row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      size_t p = row;
      while (p < m.rows() && m(p, col) == 0) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      if (p != row) {
        for (size_t c = 0; c < m.cols(); ++c) {
          std::swap(m(p, c), m(row, c));
        }
        det = -det;
      }
      Rational const pivot = m(row, col);
      det *= pivot;
      for (size_t c = col; c < m.cols(); ++c) {
        m(row, c) /= pivot;
      }
      for (size_t r = 0; r < m.rows(); ++r) {
        if (r == row || m(r, col) == 0) {
          continue;
        }
        Rational const factor = m(r, col);
        for (size_t c = col; c < m.cols(); ++c) {
          if (m(row, c) != 0) {
            m(r, c) -= factor * m(row, c);
          }
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return EchelonForm{std::move(m), std::move(pivots), det};
  }

  inline size_t rank(Matrix const& m) {
    return row_reduce(m).pivot_columns.size();
  }

  inline Rational determinant(Matrix const& m) {
    if (m.rows() != m.cols()) {
      throw Exception(ErrorCode::dimension_mismatch,
                      "determinant of a non-square matrix");
    }
    auto ef = row_reduce(m);
    if (ef.pivot_columns.size() < m.rows()) {
      return Rational(0);
    }
    return ef.determinant_factor;
  }

  //! Exact inverse, or nullopt when the matrix is singular.
  inline std::optional<Matrix> inverse(Matrix const& m) {
    size_t const n = m.rows();
    if (n != m.cols()) {
      throw Exception(ErrorCode::dimension_mismatch,
                      "inverse of a non-square matrix");
    }
    if (n == 0) {
      return Matrix();
    }
    Matrix aug(n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        aug(r, c) = m(r, c);
      }
      aug(r, n + r) = 1;
    }
    auto ef = row_reduce(std::move(aug));
    if (ef.pivot_columns.size() < n || ef.pivot_columns[n - 1] != n - 1) {
      return std::nullopt;
    }
    Matrix inv(n, n);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        inv(r, c) = ef.reduced(r, n + c);
      }
    }
    return inv;
  }

  //! A basis of { x : m x = 0 }, one vector per free column.
  inline std::vector<std::vector<Rational>> nullspace(Matrix const& m) {
    auto                ef = row_reduce(m);
    std::vector<bool>   is_pivot(m.cols(), false);
    for (size_t c : ef.pivot_columns) {
      is_pivot[c] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      std::vector<Rational> v(m.cols(), Rational(0));
      v[free] = 1;
      for (size_t r = 0; r < ef.pivot_columns.size(); ++r) {
        v[ef.pivot_columns[r]] = -ef.reduced(r, free);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  //! A linear map between two algebras given by its matrix; column j is the
  //! image of basis element j of the domain.
  struct LinearMap {
    BasisTag domain_tag   = BasisTag::semigroup;
    BasisTag codomain_tag = BasisTag::semigroup;
    Matrix   matrix;

    size_t domain_dim() const noexcept {
      return matrix.cols();
    }
    size_t codomain_dim() const noexcept {
      return matrix.rows();
    }

    AlgebraElement operator()(AlgebraElement const& x) const {
      if (x.tag() != domain_tag) {
        throw Exception(ErrorCode::basis_mismatch,
                        "linear map applied to an element of the wrong algebra");
      }
      AlgebraElement out(codomain_tag);
      for (auto const& [j, c] : x.coefficients()) {
        if (j >= domain_dim()) {
          throw Exception(ErrorCode::dimension_mismatch,
                          "basis index " + std::to_string(j)
                              + " outside domain");
        }
        for (size_t i = 0; i < codomain_dim(); ++i) {
          if (matrix(i, j) != 0) {
            out.add(i, c * matrix(i, j));
          }
        }
      }
      return out;
    }

    AlgebraElement image_of_basis(size_t j) const {
      return (*this)(AlgebraElement::basis(domain_tag, j));
    }

    //! this ∘ that
    LinearMap after(LinearMap const& that) const {
      if (that.codomain_tag != domain_tag) {
        throw Exception(ErrorCode::basis_mismatch,
                        "composing maps between different algebras");
      }
      return LinearMap{that.domain_tag, codomain_tag, matrix * that.matrix};
    }
  };

}  // namespace efountain

#endif  // EFOUNTAIN_LINALG_HPP_
