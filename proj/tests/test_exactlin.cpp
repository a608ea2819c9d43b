#include <doctest.h>

#include "builders.hpp"
#include "hopfreal/errors.hpp"
#include "hopfreal/exactlin.hpp"

using namespace hopfreal;

TEST_CASE("scalars parse exactly and print canonically") {
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK(parse_scalar("-7") == Scalar(-7));
  CHECK(to_string(parse_scalar("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_scalar("0.5"), InvalidArgument);
  CHECK_THROWS_AS(parse_scalar("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_scalar(""), InvalidArgument);
}

TEST_CASE("sparse vectors never store zeros") {
  SparseVec v = SparseVec::from_dense({0, 2, 0, -1});
  CHECK(v.nnz() == 2);
  v.axpy(1, SparseVec::from_dense({0, -2, 0, 0}));
  CHECK(v.nnz() == 1);
  CHECK(v.at(3) == -1);
  CHECK(kron(SparseVec::unit(1), SparseVec::unit(2), 3) == SparseVec::unit(5));
}

TEST_CASE("kernel_basis on a small hand matrix") {
  // x + 2y + 3z = 0 and y + z = 0  =>  (-1, -1, 1)
  Matrix m = Matrix::from_rows({{1, 2, 3}, {0, 1, 1}});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Scalar>{-1, -1, 1});
}

TEST_CASE("property: kernels, rank and rref agree with a plain elimination") {
  build::Gen gen(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + gen.index(6), cols = 1 + gen.index(7);
    Matrix m = gen.dependent_matrix(rows, cols);
    const auto dense = oracle::to_dense(m);
    const std::size_t r = oracle::rank(dense);
    CHECK(rank(m) == r);

    auto k = kernel_basis(m);
    CHECK(k.size() == cols - r);
    for (const auto& v : k) {
      auto image = oracle::apply(dense, v);
      for (const auto& e : image) CHECK(e == 0);
    }
    // column_kernel is documented as the same canonical basis
    auto ck = column_kernel(m.columns());
    REQUIRE(ck.size() == k.size());
    for (std::size_t i = 0; i < k.size(); ++i) CHECK(ck[i] == SparseVec::from_dense(k[i]));
    CHECK(column_rank(m.columns()) == r);

    auto red = rref(m);
    CHECK(red.pivots.size() == r);
    CHECK(rref(red.reduced).reduced == red.reduced);
  }
}

TEST_CASE("property: solve_columns finds a preimage exactly when one exists") {
  build::Gen gen(202);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + gen.index(6), cols = 1 + gen.index(6);
    Matrix m = gen.dependent_matrix(rows, cols);
    SparseVec x = gen.vec(cols);
    SparseVec b = m.apply(x);
    auto s = solve_columns(m.columns(), b);
    REQUIRE(s);
    CHECK(m.apply(*s) == b);

    SparseVec c = gen.vec(rows);
    auto dense = oracle::to_dense(m);
    auto augmented = dense;
    for (std::size_t i = 0; i < rows; ++i) augmented[i].push_back(c.at(i));
    const bool solvable = oracle::rank(augmented) == oracle::rank(dense);
    CHECK(solve_columns(m.columns(), c).has_value() == solvable);
  }
}

TEST_CASE("property: echelon normal forms are canonical representatives of cosets") {
  build::Gen gen(303);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + gen.index(6);
    EchelonBasis e(n);
    std::vector<SparseVec> span;
    for (std::size_t k = 0; k < gen.index(n); ++k) {
      span.push_back(gen.vec(n));
      e.insert(span.back());
    }
    Matrix cols(n, span.size());
    for (std::size_t c = 0; c < span.size(); ++c)
      for (const auto& [i, v] : span[c].entries()) cols.set(i, c, v);
    CHECK(e.dimension() == oracle::rank(oracle::to_dense(cols)));

    SparseVec v = gen.vec(n);
    SparseVec nf = e.normal_form(v);
    CHECK(e.normal_form(nf) == nf);
    SparseVec shifted = v;
    for (const auto& s : span) shifted.axpy(gen.scalar(), s);
    CHECK(e.normal_form(shifted) == nf);
    CHECK(e.contains(v - nf));
    for (const auto& [pivot, row] : e.rows()) CHECK(nf.at(pivot) == 0);
  }
}

TEST_CASE("matrix products and kron follow the documented index conventions") {
  Matrix a = Matrix::from_rows({{1, 2}, {0, 1}});
  Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  CHECK(oracle::to_dense(a * b) == oracle::mul(oracle::to_dense(a), oracle::to_dense(b)));
  Matrix k = kron(a, b);
  // entry ((r1, r2), (c1, c2)) = a(r1, c1) b(r2, c2)
  CHECK(k.at(0 * 2 + 1, 1 * 2 + 0) == a.at(0, 1) * b.at(1, 0));
  CHECK(k.rows() == 4);
  CHECK(Matrix::identity(3).flatten().nnz() == 3);
}
