#include <doctest.h>

#include "builders.hpp"
#include "hopfreal/errors.hpp"

using namespace hopfreal;

namespace {

Form basis_form(const Coalgebra& f, std::size_t k) { return Form::single(f.id(k)); }

std::vector<Scalar> coords(const Form& omega, const Coalgebra& f) {
  std::vector<Scalar> out(f.dim(), Scalar(0));
  for (const auto& [id, c] : omega) out[f.index_of(id)] = c;
  return out;
}

}  // namespace

TEST_CASE("op_from_form is the transpose of left multiplication") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto pres = upper_triangular_algebra(n);
    auto f = dual_coalgebra(pres);
    auto model = oracle::matrix_algebra(pres, n);
    for (std::size_t k = 0; k < f.dim(); ++k) {
      auto expected = oracle::transpose(model.left_mult(model.unit_vector(k)));
      CHECK(oracle::to_dense(op_from_form(f, basis_form(f, k))) == expected);
      CHECK(oracle::to_dense(transpose_left_mult(pres, AlgebraElement::single(k))) == expected);
    }
  }
}

TEST_CASE("composition reverses convolution on all 36 basis pairs of dual(M_3^+)") {
  auto pres = upper_triangular_algebra(3);
  auto f = dual_coalgebra(pres);
  auto model = oracle::matrix_algebra(pres, 3);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < f.dim(); ++a)
    for (std::size_t b = 0; b < f.dim(); ++b) {
      // oracle: X_a X_b = (L_b L_a)^T = (L_{e_b e_a})^T
      auto ba = model.multiply(model.unit_vector(b), model.unit_vector(a));
      auto expected = oracle::transpose(model.left_mult(ba));
      auto xa = op_from_form(f, basis_form(f, a));
      auto xb = op_from_form(f, basis_form(f, b));
      CHECK(oracle::to_dense(xa * xb) == expected);
      auto conv = convolution(f, basis_form(f, b), basis_form(f, a));
      CHECK(coords(conv, f) == ba);
      CHECK(xa * xb == op_from_form(f, conv));
      ++pairs;
    }
  CHECK(pairs == 36);
}

TEST_CASE("property: convolution is associative with the counit as unit") {
  build::Gen gen(606);
  for (auto f : {build::m_dual(2), build::m_dual(3), triangular_coalgebra(3),
                 dual_coalgebra(truncated_polynomial_algebra(3))}) {
    auto eps = counit_form(f);
    for (int trial = 0; trial < 15; ++trial) {
      auto a = gen.form(f), b = gen.form(f), c = gen.form(f);
      CHECK(convolution(f, convolution(f, a, b), c) == convolution(f, a, convolution(f, b, c)));
      CHECK(convolution(f, eps, a) == a);
      CHECK(convolution(f, a, eps) == a);
      CHECK(op_from_form(f, a) * op_from_form(f, b) == op_from_form(f, convolution(f, b, a)));
      CHECK(form_of_op(f, op_from_form(f, a)) == a);
      CHECK(verify_right_invariance(f, op_from_form(f, a)).invariant);
    }
  }
}

TEST_CASE("property: convolution inverses exist exactly for forms with invertible counit part") {
  build::Gen gen(707);
  auto f = dual_coalgebra(truncated_polynomial_algebra(3));
  auto eps = counit_form(f);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = gen.form(f);
    auto inv = convolution_inverse(f, a);
    // on dual(C[t]/t^3) a form is evaluation at a polynomial; it is
    // invertible iff the constant coefficient is nonzero
    const bool invertible = a.coeff(f.id(0)) != 0;
    CHECK(inv.has_value() == invertible);
    if (inv) {
      CHECK(convolution(f, a, *inv) == eps);
      CHECK(convolution(f, *inv, a) == eps);
    }
  }
}

TEST_CASE("right-invariance violations come with a witness") {
  auto f = build::m_dual(2);
  Matrix swap = Matrix::identity(3);
  swap.set(0, 0, 0);
  swap.set(0, 2, 1);
  swap.set(2, 2, 0);
  swap.set(2, 0, 1);
  auto check = verify_right_invariance(f, swap);
  CHECK_FALSE(check.invariant);
  CHECK(check.witness);
  CHECK_THROWS_AS(form_of_op(f, swap), InvarianceViolation);
}

TEST_CASE("evaluation forms read coordinates") {
  auto f = build::m_dual(2);
  AlgebraElement e;
  e.add(0, 2);
  e.add(2, Scalar(-1, 3));
  auto omega = evaluation_form(f, e);
  CHECK(omega.coeff(f.id(0)) == 2);
  CHECK(omega.coeff(f.id(1)) == 0);
  CHECK(omega.coeff(f.id(2)) == Scalar(-1, 3));
}
