#pragma once

// Exact linear algebra over the rationals.
//
// Everything downstream (kernels of representations, coideal membership,
// antipode systems) reduces to solving linear systems over Q, so this layer
// never rounds: Scalar is a GMP rational kept in canonical form.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfreal {

using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InvalidArgument.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& value);

/// Sparse coordinate vector. Entries are sorted by index; zeros are never stored.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  static SparseVec from_dense(const std::vector<Scalar>& dense);
  static SparseVec unit(std::size_t index);

  std::vector<Scalar> to_dense(std::size_t size) const;
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Scalar at(std::size_t index) const;
  std::size_t leading_index() const { return entries_.front().first; }

  /// Appends an entry; indices must be strictly increasing. Zero values are skipped.
  void push_back(std::size_t index, Scalar value);
  /// this += factor * other
  SparseVec& axpy(const Scalar& factor, const SparseVec& other);
  SparseVec& operator*=(const Scalar& factor);
  SparseVec scaled(const Scalar& factor) const;
  /// Shifts every index by `offset`.
  SparseVec shifted(std::size_t offset) const;

  friend bool operator==(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a.axpy(1, b); }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a.axpy(-1, b); }

 private:
  std::vector<Entry> entries_;
};

/// Kronecker product of coordinate vectors: index (a, b) maps to a * size_b + b.
SparseVec kron(const SparseVec& a, const SparseVec& b, std::size_t size_b);

/// Finite linear combination over an ordered key set, zero terms dropped.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  static LinComb single(Key key, Scalar coeff = 1) {
    LinComb out;
    out.add(std::move(key), coeff);
    return out;
  }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& factor) {
    if (factor == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= factor;
    }
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Scalar& f, LinComb a) { return a *= f; }
  friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Sparse matrix stored by rows. Acts on column vectors: entry (r, c) is the
/// coefficient of basis vector r in the image of basis vector c.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void add_to(std::size_t r, std::size_t c, const Scalar& value);
  const SparseVec& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, SparseVec row);
  std::size_t nnz() const;
  bool is_zero() const;

  Matrix transposed() const;
  std::vector<SparseVec> columns() const;
  SparseVec apply(const SparseVec& v) const;
  /// Row-major flattening: entry (r, c) lands at index r * cols + c.
  SparseVec flatten() const;
  std::vector<std::vector<Scalar>> to_dense() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& factor);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& f, Matrix a) { return a *= f; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination over Q.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Null-space basis in canonical form: one vector per free column f, with
/// coefficient 1 at f and nonzeros otherwise only on pivot columns. Ordered
/// by free column.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// True iff v is in the span of `span`. All vectors must share one length.
bool membership(const std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& span);

/// Incrementally built subspace of Q^n kept in echelon form. Normal forms
/// are canonical: the unique representative of v + W with no entry at a
/// pivot index. That makes the quotient map Q^n -> Q^n / W computable.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  /// Returns true when v was independent of the current span.
  bool insert(const SparseVec& v);
  SparseVec normal_form(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return normal_form(v).empty(); }
  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::map<std::size_t, SparseVec>& rows() const { return rows_; }

 private:
  std::size_t ambient_;
  std::map<std::size_t, SparseVec> rows_;  // pivot -> row with 1 at pivot, zeros before it
};

/// Linear dependencies among `columns`: the same canonical kernel basis that
/// kernel_basis returns for the matrix whose columns these are, computed
/// column by column. Suited to matrices with far more rows than columns.
std::vector<SparseVec> column_kernel(const std::vector<SparseVec>& columns);

/// Solves sum_i x_i * columns[i] = rhs. Returns the solution whose free
/// variables are zero (free = dependent on earlier columns), or nullopt.
std::optional<SparseVec> solve_columns(const std::vector<SparseVec>& columns, const SparseVec& rhs);

/// Rank of the column set.
std::size_t column_rank(const std::vector<SparseVec>& columns);

}  // namespace hopfreal
