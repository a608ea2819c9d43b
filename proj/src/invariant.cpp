#include "hopfreal/invariant.hpp"

#include <algorithm>

#include "hopfreal/errors.hpp"

namespace hopfreal {

LinOp::LinOp(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_)
    if (b.rows() != b.cols()) throw InvalidArgument("LinOp blocks must be square");
}

LinOp LinOp::identity(const TensorContext& ctx) {
  std::vector<Matrix> blocks;
  for (std::size_t n = 0; n <= ctx.max_degree(); ++n) blocks.push_back(Matrix::identity(ctx.words_in_degree(n)));
  return LinOp(std::move(blocks));
}

LinOp LinOp::zero(const TensorContext& ctx) {
  std::vector<Matrix> blocks;
  for (std::size_t n = 0; n <= ctx.max_degree(); ++n) {
    const auto size = ctx.words_in_degree(n);
    blocks.emplace_back(size, size);
  }
  return LinOp(std::move(blocks));
}

bool LinOp::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& m) { return m.is_zero(); });
}

LinOp LinOp::compose(const LinOp& rhs) const {
  if (blocks_.size() != rhs.blocks_.size()) throw InvalidArgument("LinOp degree mismatch in composition");
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (std::size_t n = 0; n < blocks_.size(); ++n) out.push_back(blocks_[n] * rhs.blocks_[n]);
  return LinOp(std::move(out));
}

TensorElement LinOp::apply(const TensorContext& ctx, const TensorElement& t) const {
  TensorElement out;
  for (const auto& [w, c] : t) {
    if (w.degree() > max_degree()) throw InvalidArgument("word beyond the operator's truncation");
    const auto& block = blocks_[w.degree()];
    const auto col = ctx.word_index(w);
    for (std::size_t r = 0; r < block.rows(); ++r) {
      Scalar v = block.row(r).at(col);
      if (v != 0) out.add(ctx.word_at(w.degree(), r), c * v);
    }
  }
  return out;
}

SparseVec LinOp::flatten() const {
  SparseVec out;
  std::size_t offset = 0;
  for (const auto& b : blocks_) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, v] : b.row(r).entries()) out.push_back(offset + r * b.cols() + c, v);
    offset += b.rows() * b.cols();
  }
  return out;
}

std::size_t LinOp::flat_size() const {
  std::size_t size = 0;
  for (const auto& b : blocks_) size += b.rows() * b.cols();
  return size;
}

LinOp& LinOp::operator+=(const LinOp& other) {
  if (blocks_.size() != other.blocks_.size()) throw InvalidArgument("LinOp degree mismatch in +");
  for (std::size_t n = 0; n < blocks_.size(); ++n) blocks_[n] += other.blocks_[n];
  return *this;
}

LinOp& LinOp::operator-=(const LinOp& other) {
  if (blocks_.size() != other.blocks_.size()) throw InvalidArgument("LinOp degree mismatch in -");
  for (std::size_t n = 0; n < blocks_.size(); ++n) blocks_[n] -= other.blocks_[n];
  return *this;
}

LinOp& LinOp::operator*=(const Scalar& factor) {
  for (auto& b : blocks_) b *= factor;
  return *this;
}

// -------------------------------------------------------------------- forms

Matrix op_from_form(const Coalgebra& f, const Form& omega) {
  std::vector<Scalar> weight(f.dim());
  for (const auto& [id, c] : omega) weight[f.index_of(id)] = c;
  Matrix m(f.dim(), f.dim());
  for (std::size_t col = 0; col < f.dim(); ++col)
    for (const auto& t : f.delta(col)) m.add_to(t.right, col, weight[t.left] * t.coeff);
  return m;
}

Matrix op_from_form(const Coalgebra& f, const RIOp& x) {
  Matrix m = op_from_form(f, x.form);
  if (x.identity != 0) m += x.identity * Matrix::identity(f.dim());
  return m;
}

Form counit_form(const Coalgebra& f) {
  Form out;
  for (std::size_t k = 0; k < f.dim(); ++k) out.add(f.id(k), f.epsilon(k));
  return out;
}

Form evaluation_form(const Coalgebra& f, const AlgebraElement& e) {
  if (!f.dual_of()) throw Unsupported("evaluation forms need F built as the dual of an algebra");
  Form out;
  for (const auto& [k, c] : e) {
    if (k >= f.dim()) throw InvalidArgument("algebra element outside the basis");
    out.add(f.id(k), c);
  }
  return out;
}

namespace {

Matrix coproduct_on_f(const Coalgebra& f) {
  const std::size_t n = f.dim();
  Matrix d(n * n, n);
  for (std::size_t col = 0; col < n; ++col)
    for (const auto& t : f.delta(col)) d.add_to(t.left * n + t.right, col, t.coeff);
  return d;
}

}  // namespace

InvarianceCheck verify_right_invariance(const Coalgebra& f, const Matrix& x) {
  if (x.rows() != f.dim() || x.cols() != f.dim()) throw InvalidArgument("operator shape does not match F");
  const Matrix d = coproduct_on_f(f);
  const Matrix lhs = d * x;
  const Matrix rhs = kron(x, Matrix::identity(f.dim())) * d;
  InvarianceCheck check;
  check.degree = 1;
  if (lhs == rhs) return check;
  check.invariant = false;
  const auto lc = lhs.columns();
  const auto rc = rhs.columns();
  for (std::size_t k = 0; k < f.dim(); ++k) {
    if (!(lc[k] == rc[k])) {
      check.witness = k;
      check.witness_text = f.label(k);
      break;
    }
  }
  return check;
}

InvarianceCheck verify_right_invariance(const TensorContext& ctx, const LinOp& x) {
  InvarianceCheck check;
  for (std::size_t n = 0; n <= std::min(ctx.max_degree(), x.max_degree()); ++n) {
    const Matrix d = coproduct_matrix(ctx, n);
    const Matrix& block = x.block(n);
    const Matrix lhs = d * block;
    const Matrix rhs = kron(block, Matrix::identity(block.rows())) * d;
    if (lhs == rhs) continue;
    check.invariant = false;
    check.degree = n;
    const auto lc = lhs.columns();
    const auto rc = rhs.columns();
    for (std::size_t k = 0; k < lc.size(); ++k) {
      if (!(lc[k] == rc[k])) {
        check.witness = k;
        check.witness_text = ctx.format(ctx.word_at(n, k));
        break;
      }
    }
    return check;
  }
  return check;
}

Form form_of_op(const Coalgebra& f, const Matrix& x) {
  auto check = verify_right_invariance(f, x);
  if (!check.invariant)
    throw InvarianceViolation("operator is not right-invariant at " + check.witness_text, *check.witness);
  Form out;
  const auto columns = x.columns();
  for (std::size_t col = 0; col < f.dim(); ++col) {
    Scalar v = 0;
    for (const auto& [r, c] : columns[col].entries()) v += f.epsilon(r) * c;
    out.add(f.id(col), v);
  }
  return out;
}

Form convolution(const Coalgebra& f, const Form& a, const Form& b) {
  std::vector<Scalar> wa(f.dim());
  std::vector<Scalar> wb(f.dim());
  for (const auto& [id, c] : a) wa[f.index_of(id)] = c;
  for (const auto& [id, c] : b) wb[f.index_of(id)] = c;
  Form out;
  for (std::size_t k = 0; k < f.dim(); ++k) {
    Scalar v = 0;
    for (const auto& t : f.delta(k)) v += t.coeff * wa[t.left] * wb[t.right];
    out.add(f.id(k), v);
  }
  return out;
}

std::optional<Form> convolution_inverse(const Coalgebra& f, const Form& a) {
  const std::size_t n = f.dim();
  std::vector<Scalar> wa(n);
  for (const auto& [id, c] : a) wa[f.index_of(id)] = c;
  // Unknown b_u. Row k of block 0: (a*b)(f_k); row k of block 1: (b*a)(f_k).
  std::vector<std::vector<Scalar>> dense(2 * n, std::vector<Scalar>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& t : f.delta(k)) {
      dense[k][t.right] += t.coeff * wa[t.left];
      dense[n + k][t.left] += t.coeff * wa[t.right];
    }
  }
  Matrix system = Matrix::from_rows(dense);
  SparseVec rhs;
  for (std::size_t k = 0; k < 2 * n; ++k) rhs.push_back(k, f.epsilon(k % n));
  auto solution = solve_columns(system.columns(), rhs);
  if (!solution) return std::nullopt;
  Form out;
  for (const auto& [u, c] : solution->entries()) out.add(f.id(u), c);
  return out;
}

Matrix transpose_left_mult(const AlgebraPresentation& e, const AlgebraElement& element) {
  const std::size_t n = e.dim();
  // Left multiplication matrix: column m holds element . e^m.
  Matrix left(n, n);
  for (std::size_t m = 0; m < n; ++m)
    for (const auto& [i, c] : e.multiply(element, AlgebraElement::single(m))) left.add_to(i, m, c);
  Matrix transposed = left.transposed();
  const Coalgebra f = dual_coalgebra(e);
  if (!(transposed == op_from_form(f, evaluation_form(f, element))))
    throw InternalInconsistency("transposed left multiplication differs from the evaluation-form operator");
  return transposed;
}

}  // namespace hopfreal
