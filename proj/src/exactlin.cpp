#include "hopfreal/exactlin.hpp"

#include <algorithm>
#include <cctype>

#include "hopfreal/errors.hpp"

namespace hopfreal {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Sparse accumulator used while eliminating.
using Accumulator = std::map<std::size_t, Scalar>;

Accumulator to_accumulator(const SparseVec& v) {
  Accumulator acc;
  for (const auto& [i, c] : v.entries()) acc.emplace_hint(acc.end(), i, c);
  return acc;
}

SparseVec from_accumulator(const Accumulator& acc) {
  SparseVec out;
  for (const auto& [i, c] : acc) out.push_back(i, c);
  return out;
}

void subtract_scaled(Accumulator& acc, const Scalar& factor, const SparseVec& row) {
  for (const auto& [i, c] : row.entries()) {
    auto [it, inserted] = acc.try_emplace(i, 0);
    it->second -= factor * c;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  if (!is_integer_literal(num)) throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
  if (num[0] == '+') num.remove_prefix(1);
  if (slash == std::string_view::npos) return Scalar(mpz_class(std::string(num)));
  auto den = s.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
  mpz_class d(std::string{den});
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Scalar out(mpz_class(std::string(num)), d);
  out.canonicalize();
  return out;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

// ---------------------------------------------------------------- SparseVec

SparseVec SparseVec::from_dense(const std::vector<Scalar>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i) out.push_back(i, dense[i]);
  return out;
}

SparseVec SparseVec::unit(std::size_t index) {
  SparseVec out;
  out.push_back(index, 1);
  return out;
}

std::vector<Scalar> SparseVec::to_dense(std::size_t size) const {
  std::vector<Scalar> out(size);
  for (const auto& [i, c] : entries_) {
    if (i >= size) throw InvalidArgument("sparse index out of range");
    out[i] = c;
  }
  return out;
}

Scalar SparseVec::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVec::push_back(std::size_t index, Scalar value) {
  if (value == 0) return;
  if (!entries_.empty() && entries_.back().first >= index)
    throw InvalidArgument("SparseVec::push_back: indices must increase");
  entries_.emplace_back(index, std::move(value));
}

SparseVec& SparseVec::axpy(const Scalar& factor, const SparseVec& other) {
  if (factor == 0 || other.empty()) return *this;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Scalar sum = a->second + factor * b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

SparseVec& SparseVec::operator*=(const Scalar& factor) {
  if (factor == 0) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.second *= factor;
  }
  return *this;
}

SparseVec SparseVec::scaled(const Scalar& factor) const {
  SparseVec out = *this;
  out *= factor;
  return out;
}

SparseVec SparseVec::shifted(std::size_t offset) const {
  SparseVec out = *this;
  for (auto& e : out.entries_) e.first += offset;
  return out;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (a.entries_[k].first != b.entries_[k].first || a.entries_[k].second != b.entries_[k].second) return false;
  }
  return true;
}

SparseVec kron(const SparseVec& a, const SparseVec& b, std::size_t size_b) {
  SparseVec out;
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) out.push_back(i * size_b + j, x * y);
  return out;
}

// ------------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back(i, 1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& dense) {
  std::size_t cols = dense.empty() ? 0 : dense.front().size();
  Matrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw InvalidArgument("ragged matrix literal");
    m.data_[r] = SparseVec::from_dense(dense[r]);
  }
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of bounds");
  return data_[r].at(c);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of bounds");
  Scalar delta = value - data_[r].at(c);
  add_to(r, c, delta);
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of bounds");
  if (value == 0) return;
  data_[r].axpy(value, SparseVec::unit(c));
}

void Matrix::set_row(std::size_t r, SparseVec row) {
  if (r >= rows_) throw InvalidArgument("matrix row out of bounds");
  if (!row.empty() && row.entries().back().first >= cols_) throw InvalidArgument("matrix column out of bounds");
  data_[r] = std::move(row);
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.nnz();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVec& r) { return r.empty(); });
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r].entries()) t.data_[c].push_back(r, v);
  return t;
}

std::vector<SparseVec> Matrix::columns() const {
  auto t = transposed();
  return std::move(t.data_);
}

SparseVec Matrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar sum = 0;
    const auto& row = data_[r].entries();
    auto a = row.begin();
    auto b = v.entries().begin();
    while (a != row.end() && b != v.entries().end()) {
      if (a->first < b->first) {
        ++a;
      } else if (b->first < a->first) {
        ++b;
      } else {
        sum += a->second * b->second;
        ++a;
        ++b;
      }
    }
    out.push_back(r, std::move(sum));
  }
  return out;
}

SparseVec Matrix::flatten() const {
  SparseVec out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r].entries()) out.push_back(r * cols_ + c, v);
  return out;
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
  std::vector<std::vector<Scalar>> out;
  out.reserve(rows_);
  for (const auto& row : data_) out.push_back(row.to_dense(cols_));
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidArgument("matrix shape mismatch in +");
  for (std::size_t r = 0; r < rows_; ++r) data_[r].axpy(1, other.data_[r]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidArgument("matrix shape mismatch in -");
  for (std::size_t r = 0; r < rows_; ++r) data_[r].axpy(-1, other.data_[r]);
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& factor) {
  for (auto& row : data_) row *= factor;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in *");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    const auto& row = a.data_[r];
    if (row.empty()) continue;
    if (row.nnz() == 1) {
      const auto& [k, v] = row.entries().front();
      out.data_[r] = b.data_[k].scaled(v);
      continue;
    }
    Accumulator acc;
    for (const auto& [k, v] : row.entries()) subtract_scaled(acc, -v, b.data_[k]);
    out.data_[r] = from_accumulator(acc);
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    if (a.row(ra).empty()) continue;
    for (std::size_t rb = 0; rb < b.rows(); ++rb) {
      if (b.row(rb).empty()) continue;
      out.set_row(ra * b.rows() + rb, kron(a.row(ra), b.row(rb), b.cols()));
    }
  }
  return out;
}

// --------------------------------------------------------------- elimination

RrefResult rref(const Matrix& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
    // Sparsest row with a nonzero in this column keeps fill-in down.
    std::optional<std::size_t> best;
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r].empty() || rows[r].leading_index() != col) continue;
      if (!best || rows[r].nnz() < rows[*best].nnz()) best = r;
    }
    if (!best) continue;
    std::swap(rows[next], rows[*best]);
    Scalar lead = rows[next].at(col);
    rows[next] *= Scalar(1 / lead);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      Scalar c = rows[r].at(col);
      if (c != 0) rows[r].axpy(-c, rows[next]);
    }
    pivots.push_back(col);
    ++next;
  }
  // Rows below `next` are zero once every column has been examined.
  Matrix reduced(m.rows(), m.cols());
  for (std::size_t r = 0; r < next; ++r) reduced.set_row(r, std::move(rows[r]));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool membership(const std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& span) {
  EchelonBasis basis(v.size());
  for (const auto& s : span) {
    if (s.size() != v.size()) throw InvalidArgument("membership: vector length mismatch");
    basis.insert(SparseVec::from_dense(s));
  }
  return basis.contains(SparseVec::from_dense(v));
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec reduced = normal_form(v);
  if (reduced.empty()) return false;
  std::size_t pivot = reduced.leading_index();
  Scalar lead = reduced.entries().front().second;
  reduced *= Scalar(1 / lead);
  rows_.emplace(pivot, std::move(reduced));
  return true;
}

SparseVec EchelonBasis::normal_form(const SparseVec& v) const {
  if (rows_.empty()) return v;
  Accumulator acc = to_accumulator(v);
  auto it = acc.begin();
  while (it != acc.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    std::size_t pivot = it->first;
    Scalar factor = it->second;
    // Rows only have entries at indices >= pivot, so the cursor never moves back.
    subtract_scaled(acc, factor, row->second);
    it = acc.upper_bound(pivot);
  }
  return from_accumulator(acc);
}

namespace {

// Column-by-column elimination that remembers how each reduced column was
// assembled from the original ones.
class TrackedReducer {
 public:
  // Reduces `value` (with provenance `combo`) against stored rows. Returns
  // true and stores the row when the result is nonzero.
  bool reduce_and_insert(SparseVec value, SparseVec combo, SparseVec* relation) {
    Accumulator val = to_accumulator(value);
    Accumulator com = to_accumulator(combo);
    auto it = val.begin();
    while (it != val.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      std::size_t pivot = it->first;
      Scalar factor = it->second;
      subtract_scaled(val, factor, row->second.value);
      subtract_scaled(com, factor, row->second.combo);
      it = val.upper_bound(pivot);
    }
    if (val.empty()) {
      if (relation) *relation = from_accumulator(com);
      return false;
    }
    SparseVec v = from_accumulator(val);
    SparseVec c = from_accumulator(com);
    Scalar inv = 1 / v.entries().front().second;
    std::size_t pivot = v.leading_index();
    v *= inv;
    c *= inv;
    rows_.emplace(pivot, Row{std::move(v), std::move(c)});
    return true;
  }

 private:
  struct Row {
    SparseVec value;
    SparseVec combo;
  };
  std::map<std::size_t, Row> rows_;
};

}  // namespace

std::vector<SparseVec> column_kernel(const std::vector<SparseVec>& columns) {
  TrackedReducer reducer;
  std::vector<SparseVec> kernel;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    SparseVec relation;
    if (!reducer.reduce_and_insert(columns[c], SparseVec::unit(c), &relation)) kernel.push_back(std::move(relation));
  }
  return kernel;
}

std::optional<SparseVec> solve_columns(const std::vector<SparseVec>& columns, const SparseVec& rhs) {
  TrackedReducer reducer;
  for (std::size_t c = 0; c < columns.size(); ++c) reducer.reduce_and_insert(columns[c], SparseVec::unit(c), nullptr);
  // rhs gets provenance index columns.size(); a relation with coefficient 1
  // there expresses rhs through the independent columns.
  SparseVec relation;
  if (reducer.reduce_and_insert(rhs, SparseVec::unit(columns.size()), &relation)) return std::nullopt;
  SparseVec solution;
  for (const auto& [i, c] : relation.entries())
    if (i < columns.size()) solution.push_back(i, -c);
  return solution;
}

std::size_t column_rank(const std::vector<SparseVec>& columns) {
  TrackedReducer reducer;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (reducer.reduce_and_insert(columns[c], SparseVec{}, nullptr)) ++r;
  return r;
}

}  // namespace hopfreal
