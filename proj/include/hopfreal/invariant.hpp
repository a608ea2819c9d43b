#pragma once

// Finite-support forms on a coalgebra, their convolution algebra, and the
// right-invariant operators they induce.
//
// An operator X on F is right-invariant when Delta o X = (X (x) id) o Delta.
// Forms and right-invariant operators correspond through
//   omega  ->  X_omega = (omega (x) id) o Delta,   X -> eps o X,
// and composition of operators reverses convolution order:
//   X_a o X_b = X_{b * a}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfreal/coalgebra.hpp"
#include "hopfreal/exactlin.hpp"
#include "hopfreal/free_tensor.hpp"

namespace hopfreal {

using Form = LinComb<BasisId>;

/// c * id + X_omega. The identity part is kept separate from the form.
struct RIOp {
  Scalar identity = 0;
  Form form;
};

/// Grade-preserving operator on T(F)_{<=N}: one square block per degree.
class LinOp {
 public:
  LinOp() = default;
  explicit LinOp(std::vector<Matrix> blocks);
  static LinOp identity(const TensorContext& ctx);
  static LinOp zero(const TensorContext& ctx);

  std::size_t max_degree() const { return blocks_.empty() ? 0 : blocks_.size() - 1; }
  const Matrix& block(std::size_t degree) const { return blocks_.at(degree); }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  bool is_zero() const;

  /// this o rhs, blockwise.
  LinOp compose(const LinOp& rhs) const;
  TensorElement apply(const TensorContext& ctx, const TensorElement& t) const;
  /// All blocks' entries concatenated (row-major, degree 0 first).
  SparseVec flatten() const;
  std::size_t flat_size() const;

  LinOp& operator+=(const LinOp& other);
  LinOp& operator-=(const LinOp& other);
  LinOp& operator*=(const Scalar& factor);
  friend LinOp operator+(LinOp a, const LinOp& b) { return a += b; }
  friend LinOp operator-(LinOp a, const LinOp& b) { return a -= b; }
  friend LinOp operator*(const Scalar& f, LinOp a) { return a *= f; }
  friend bool operator==(const LinOp& a, const LinOp& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<Matrix> blocks_;
};

/// Matrix of c * id + (omega (x) id) o Delta on F.
Matrix op_from_form(const Coalgebra& f, const RIOp& x);
Matrix op_from_form(const Coalgebra& f, const Form& omega);

/// eps o X. Throws InvarianceViolation (with a witness basis position) when
/// X is not right-invariant.
Form form_of_op(const Coalgebra& f, const Matrix& x);

/// (a * b)(v) = sum a(v') b(v'').
Form convolution(const Coalgebra& f, const Form& a, const Form& b);

/// Two-sided convolution inverse by exact linear solve, or nullopt.
std::optional<Form> convolution_inverse(const Coalgebra& f, const Form& a);

/// The counit as a form; the unit of convolution.
Form counit_form(const Coalgebra& f);
/// Evaluation at an algebra element on F = dual(E): omega(f_i) = e_i.
Form evaluation_form(const Coalgebra& f, const AlgebraElement& e);

struct InvarianceCheck {
  bool invariant = true;
  std::size_t degree = 0;
  /// Failing basis position (degree 1) or word position within `degree`.
  std::optional<std::size_t> witness;
  std::string witness_text;
};

InvarianceCheck verify_right_invariance(const Coalgebra& f, const Matrix& x);
/// Checks Delta o X = (X (x) id) o Delta on every degree block <= N.
InvarianceCheck verify_right_invariance(const TensorContext& ctx, const LinOp& x);

/// Transpose of left multiplication by `element`, acting on F = dual(E).
/// Throws InternalInconsistency if it differs from op_from_form of the
/// evaluation form at `element`.
Matrix transpose_left_mult(const AlgebraPresentation& e, const AlgebraElement& element);

}  // namespace hopfreal
