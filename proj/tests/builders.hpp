#pragma once

// Realizations used across the tests, built directly through the library
// types, plus hand-rolled random generators for the property tests.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfreal/hopf.hpp"
#include "oracles.hpp"

namespace build {

using namespace hopfreal;

inline Coalgebra m_dual(std::size_t n) { return dual_coalgebra(upper_triangular_algebra(n)); }

inline BasisId f_id(const Coalgebra& f, const std::string& label) { return f.id(*f.find_label(label)); }

inline RIOp ident(const Scalar& c = 1) { return RIOp{c, {}}; }

inline RIOp form(const Coalgebra& f, const std::vector<std::pair<std::string, Scalar>>& terms) {
  RIOp out;
  for (const auto& [label, c] : terms) out.form.add(f_id(f, label), c);
  return out;
}

inline std::vector<std::pair<BasisId, BasisId>> self_pairs(const Coalgebra& l) {
  std::vector<std::pair<BasisId, BasisId>> out;
  for (const auto& id : l.basis())
    if (id.is_diagonal()) out.emplace_back(id, id);
  return out;
}

struct Case {
  RealizationSpec spec;
  oracle::Algebra algebra;  // model of the algebra F is dual to
};

// Diagonals act as the identity, l(2,1) by the operator dual to left
// multiplication by e(2,1).
inline Case example_w(std::size_t truncation = 3) {
  auto l = triangular_coalgebra(2);
  auto f = m_dual(2);
  std::vector<RIOp> x{ident(), form(f, {{"f(2,1)", 1}}), ident()};
  auto pairs = self_pairs(l);
  return {RealizationSpec{l, TensorContext(f, truncation), x, pairs},
          oracle::matrix_algebra(upper_triangular_algebra(2), 2)};
}

// x(l) = eps(l) id.
inline Case trivial(std::size_t truncation = 3) {
  auto l = triangular_coalgebra(2);
  auto f = m_dual(2);
  std::vector<RIOp> x{ident(), RIOp{}, ident()};
  auto pairs = self_pairs(l);
  return {RealizationSpec{l, TensorContext(f, truncation), x, pairs},
          oracle::matrix_algebra(upper_triangular_algebra(2), 2)};
}

// L_3^+ on dual(M_2^+): off-diagonal generators act by multiples of D.
inline Case triangular3(std::size_t truncation = 3) {
  auto l = triangular_coalgebra(3);
  auto f = m_dual(2);
  // basis order: l(1,1) l(2,1) l(2,2) l(3,1) l(3,2) l(3,3)
  std::vector<RIOp> x{ident(), form(f, {{"f(2,1)", 1}}), ident(), form(f, {{"f(2,1)", Scalar(1, 2)}}),
                      form(f, {{"f(2,1)", 1}}), ident()};
  auto pairs = self_pairs(l);
  return {RealizationSpec{l, TensorContext(f, truncation), x, pairs},
          oracle::matrix_algebra(upper_triangular_algebra(2), 2)};
}

// Two grouplikes acting by evaluation at 1 + t and 1 - t on dual(C[t]/t^2).
inline Case grouplike_pair(std::size_t truncation = 3) {
  auto g = triangular_coalgebra(1);
  auto l = direct_sum({g, g});
  auto f = dual_coalgebra(truncated_polynomial_algebra(2));
  std::vector<RIOp> x{form(f, {{"f_1", 1}, {"f_t", 1}}), form(f, {{"f_1", 1}, {"f_t", -1}})};
  std::vector<std::pair<BasisId, BasisId>> pairs{{l.id(0), l.id(1)}, {l.id(1), l.id(0)}};
  return {RealizationSpec{l, TensorContext(f, truncation), x, pairs}, oracle::truncated_polynomials(2)};
}

// A grouplike realized as the projection dual to multiplication by e(1,1).
inline Case projection(std::size_t truncation = 3) {
  auto l = triangular_coalgebra(1);
  auto f = m_dual(2);
  std::vector<RIOp> x{form(f, {{"f(1,1)", 1}})};
  return {RealizationSpec{l, TensorContext(f, truncation), x, std::nullopt},
          oracle::matrix_algebra(upper_triangular_algebra(2), 2)};
}

inline oracle::Representation oracle_of(const Case& c) {
  return oracle::representation(c.spec.l_coalg, c.spec.f_ctx.coalgebra(), c.algebra, c.spec.x_map,
                                c.spec.f_ctx.max_degree());
}

// ---------------------------------------------------------------- generators

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Small rationals, zero about a third of the time.
  Scalar scalar(bool nonzero = false) {
    for (;;) {
      const long num = std::uniform_int_distribution<long>(-4, 4)(rng_);
      const long den = std::uniform_int_distribution<long>(1, 3)(rng_);
      if (nonzero && num == 0) continue;
      Scalar out(num, den);
      out.canonicalize();
      return out;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols, double density = 0.5) {
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (coin(density)) out.set(r, c, scalar(true));
    return out;
  }

  // Columns with planted dependencies so kernels are usually nontrivial.
  Matrix dependent_matrix(std::size_t rows, std::size_t cols) {
    Matrix base = matrix(rows, cols);
    for (std::size_t c = 1; c < cols; ++c) {
      if (!coin(0.4)) continue;
      const std::size_t src = index(c);
      const Scalar f = scalar(true);
      for (std::size_t r = 0; r < rows; ++r) base.set(r, c, f * base.at(r, src));
    }
    return base;
  }

  SparseVec vec(std::size_t size, double density = 0.5) {
    SparseVec out;
    for (std::size_t k = 0; k < size; ++k)
      if (coin(density)) out.push_back(k, scalar(true));
    return out;
  }

  Form form(const Coalgebra& f) {
    Form out;
    for (const auto& id : f.basis())
      if (coin()) out.add(id, scalar(true));
    return out;
  }

  AlgebraElement algebra_element(std::size_t dim) {
    AlgebraElement out;
    for (std::size_t k = 0; k < dim; ++k)
      if (coin()) out.add(k, scalar(true));
    return out;
  }

  LWord lword(std::size_t letters, std::size_t degree) {
    LWord w;
    for (std::size_t k = 0; k < degree; ++k) w.letters.push_back(static_cast<std::uint32_t>(index(letters)));
    return w;
  }

  LPoly lpoly(std::size_t letters, std::size_t max_degree, std::size_t terms = 3) {
    LPoly out;
    for (std::size_t k = 0; k < terms; ++k) out.add(lword(letters, index(max_degree + 1)), scalar(true));
    return out;
  }

  Word word(std::size_t letters, std::size_t degree) {
    Word w;
    for (std::size_t k = 0; k < degree; ++k) w.letters.push_back(static_cast<std::uint32_t>(index(letters)));
    return w;
  }

  TensorElement tensor(std::size_t letters, std::size_t max_degree, std::size_t terms = 3) {
    TensorElement out;
    for (std::size_t k = 0; k < terms; ++k) out.add(word(letters, index(max_degree + 1)), scalar(true));
    return out;
  }

  // Cotriangular L_n^+ on dual(M_m^+) with random off-diagonal forms and
  // diagonals acting as +-id, so the triangular antipode always applies.
  Case triangular_case(std::size_t n, std::size_t m, std::size_t truncation) {
    auto l = triangular_coalgebra(n);
    auto f = m_dual(m);
    std::vector<RIOp> x;
    for (const auto& id : l.basis()) {
      if (id.is_diagonal()) {
        x.push_back(ident(coin(0.75) ? 1 : -1));
      } else {
        RIOp op;
        op.form = form(f);
        if (coin(0.3)) op.identity = scalar();
        x.push_back(op);
      }
    }
    auto pairs = self_pairs(l);
    return {RealizationSpec{l, TensorContext(f, truncation), x, pairs},
            oracle::matrix_algebra(upper_triangular_algebra(m), m)};
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace build
