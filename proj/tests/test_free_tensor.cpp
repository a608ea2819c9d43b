#include <doctest.h>

#include "builders.hpp"
#include "hopfreal/errors.hpp"

using namespace hopfreal;

namespace {

// Delta of a word as the product of its letters' coproducts, expanded by brute force.
TensorPair word_coproduct_oracle(const Coalgebra& f, const Word& w) {
  std::vector<std::pair<std::pair<Word, Word>, Scalar>> acc{{{Word{}, Word{}}, Scalar(1)}};
  for (auto a : w.letters) {
    std::vector<std::pair<std::pair<Word, Word>, Scalar>> next;
    for (const auto& [legs, c] : acc)
      for (const auto& t : f.delta(a)) {
        auto l = legs.first, r = legs.second;
        l.letters.push_back(static_cast<std::uint32_t>(t.left));
        r.letters.push_back(static_cast<std::uint32_t>(t.right));
        next.push_back({{l, r}, c * t.coeff});
      }
    acc = std::move(next);
  }
  TensorPair out;
  for (const auto& [legs, c] : acc) out.add(legs, c);
  return out;
}

std::vector<Coalgebra> sample_coalgebras() {
  return {triangular_coalgebra(2), triangular_coalgebra(3), dual_coalgebra(truncated_polynomial_algebra(2)),
          build::m_dual(2)};
}

}  // namespace

TEST_CASE("verify_free_bialgebra passes on the standard coalgebras") {
  for (const auto& f : sample_coalgebras()) {
    TensorContext ctx(f, 3);
    auto report = verify_free_bialgebra(ctx);
    CHECK(report.passed());
    CHECK(report.checked_degree == 3);
    for (const auto& c : report.checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("word coproducts match the letterwise expansion and keep degree") {
  for (const auto& f : sample_coalgebras()) {
    TensorContext ctx(f, 3);
    for (std::size_t n = 0; n <= 3; ++n)
      for (const auto& letters : oracle::words(f.dim(), n)) {
        Word w(letters);
        auto delta = coproduct(ctx, w);
        CHECK(delta == word_coproduct_oracle(f, w));
        for (const auto& [legs, c] : delta) {
          CHECK(legs.first.degree() == n);
          CHECK(legs.second.degree() == n);
        }
      }
  }
}

TEST_CASE("property: Delta is multiplicative and counital on random elements") {
  build::Gen gen(505);
  auto f = triangular_coalgebra(2);
  TensorContext ctx(f, 4);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = gen.tensor(f.dim(), 2), b = gen.tensor(f.dim(), 2);
    auto ab = word_product(ctx, a, b);
    REQUIRE_FALSE(ab.truncated);
    // Delta(ab) = Delta(a) Delta(b) in T (x) T
    TensorPair expected;
    for (const auto& [pa, ca] : coproduct(ctx, a))
      for (const auto& [pb, cb] : coproduct(ctx, b))
        expected.add({pa.first * pb.first, pa.second * pb.second}, ca * cb);
    CHECK(coproduct(ctx, ab.value) == expected);

    // counit on either leg gives the element back
    TensorElement left, right;
    for (const auto& [legs, c] : coproduct(ctx, a)) {
      left.add(legs.second, c * counit(ctx, legs.first));
      right.add(legs.first, c * counit(ctx, legs.second));
    }
    CHECK(left == a);
    CHECK(right == a);
  }
}

TEST_CASE("coproduct matrices index pairs as documented") {
  auto f = triangular_coalgebra(2);
  TensorContext ctx(f, 2);
  const std::size_t n = 2, size = ctx.words_in_degree(n);
  Matrix m = coproduct_matrix(ctx, n);
  CHECK(m.rows() == size * size);
  CHECK(m.cols() == size);
  for (std::size_t c = 0; c < size; ++c) {
    Word w = ctx.word_at(n, c);
    CHECK(ctx.word_index(w) == c);
    CHECK(c == oracle::word_position(f.dim(), w.letters));
    for (const auto& [legs, v] : coproduct(ctx, w))
      CHECK(m.at(ctx.word_index(legs.first) * size + ctx.word_index(legs.second), c) == v);
  }
}

TEST_CASE("word products past N are dropped and flagged") {
  TensorContext ctx(triangular_coalgebra(1), 2);
  auto w = TensorElement::single(Word{0, 0});
  auto p = word_product(ctx, w, TensorElement::single(Word{0}));
  CHECK(p.truncated);
  CHECK(p.value.is_zero());
  CHECK_THROWS_AS(TensorContext(triangular_coalgebra(1), 0), InvalidArgument);
}

TEST_CASE("duality pairing against componentwise matrix products") {
  auto pres = upper_triangular_algebra(2);
  auto f = dual_coalgebra(pres);
  auto model = oracle::matrix_algebra(pres, 2);
  TensorContext ctx(f, 2);
  // <w, t> read off coordinates, <Delta w, t1 (x) t2> expanded over the coproduct
  auto pair = [&](const Word& w, const std::vector<std::vector<Scalar>>& t) {
    Scalar out = 1;
    for (std::size_t k = 0; k < w.degree(); ++k) out *= t[k][w.letters[k]];
    return out;
  };
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& letters : oracle::words(f.dim(), n)) {
      Word w(letters);
      auto delta = coproduct(ctx, w);
      for (const auto& t1 : oracle::words(f.dim(), n))
        for (const auto& t2 : oracle::words(f.dim(), n)) {
          std::vector<std::vector<Scalar>> a, b, ab;
          for (std::size_t k = 0; k < n; ++k) {
            a.push_back(model.unit_vector(t1[k]));
            b.push_back(model.unit_vector(t2[k]));
            ab.push_back(model.multiply(a.back(), b.back()));
          }
          Scalar lhs = 0;
          for (const auto& [legs, c] : delta) lhs += c * pair(legs.first, a) * pair(legs.second, b);
          CHECK(lhs == pair(w, ab));
          // and the library's own pairing agrees on the right-hand side
          PureTensor t(n);
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < ab[k].size(); ++i) t[k].add(i, ab[k][i]);
          CHECK(duality_pairing(ctx, w, t) == pair(w, ab));
          ++checked;
        }
    }
  CHECK(checked == 3 * 3 * 3 + 9 * 9 * 9);
  auto report = verify_duality(ctx, 2);
  CHECK(report.passed());
  CHECK(report.checked > 0);
}
