#include <doctest.h>

#include "builders.hpp"
#include "hopfreal/errors.hpp"

using namespace hopfreal;

namespace {

// Coproduct of l(i,j) in L_n^+ written out by hand from the defining sum.
std::map<std::pair<std::string, std::string>, Scalar> triangular_delta(std::size_t i, std::size_t j) {
  std::map<std::pair<std::string, std::string>, Scalar> out;
  auto name = [](std::size_t a, std::size_t b) { return "l(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  for (std::size_t k = j; k <= i; ++k) out[{name(k, j), name(i, k)}] = 1;
  return out;
}

std::map<std::pair<std::string, std::string>, Scalar> labelled_delta(const Coalgebra& c, std::size_t k) {
  std::map<std::pair<std::string, std::string>, Scalar> out;
  for (const auto& t : c.delta(k)) out[{c.label(t.left), c.label(t.right)}] += t.coeff;
  return out;
}

// Rebuilds a coalgebra with one coproduct coefficient replaced.
Coalgebra mutate(const Coalgebra& c, std::size_t k, std::size_t term, const Scalar& coeff) {
  std::vector<std::vector<CoproductTerm>> delta;
  std::vector<Scalar> eps;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < c.dim(); ++b) {
    delta.push_back(c.delta(b));
    eps.push_back(c.epsilon(b));
    labels.push_back(c.label(b));
  }
  delta[k][term].coeff = coeff;
  return Coalgebra(c.basis(), labels, delta, eps);
}

}  // namespace

TEST_CASE("L_n^+ has the triangular coproduct and passes the axioms") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto l = triangular_coalgebra(n);
    CHECK(l.dim() == n * (n + 1) / 2);
    CHECK(l.is_cotriangular());
    CHECK(verify_coalgebra(l).passed());
    for (std::size_t k = 0; k < l.dim(); ++k) {
      const auto& id = l.id(k);
      CHECK(labelled_delta(l, k) == triangular_delta(id.i(), id.j()));
      CHECK(l.epsilon(k) == (id.i() == id.j() ? 1 : 0));
    }
    CHECK(grouplikes(l).size() == n);
  }
}

TEST_CASE("dual coalgebras match coproducts read off from matrix products") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto pres = upper_triangular_algebra(n);
    CHECK(pres.violations().empty());
    auto f = dual_coalgebra(pres);
    auto model = oracle::matrix_algebra(pres, n);
    CHECK(verify_coalgebra(f).passed());
    for (std::size_t p = 0; p < f.dim(); ++p) {
      auto expected = oracle::dual_coproduct(model, p);
      std::map<std::pair<std::size_t, std::size_t>, Scalar> got;
      for (const auto& t : f.delta(p)) got[{t.left, t.right}] += t.coeff;
      CHECK(got == expected);
    }
  }
  auto poly = dual_coalgebra(truncated_polynomial_algebra(3));
  auto model = oracle::truncated_polynomials(3);
  for (std::size_t p = 0; p < 3; ++p) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> got;
    for (const auto& t : poly.delta(p)) got[{t.left, t.right}] += t.coeff;
    CHECK(got == oracle::dual_coproduct(model, p));
  }
}

TEST_CASE("dual(M_n^+) is L_n^+ after renaming f to l") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto f = build::m_dual(n);
    auto l = triangular_coalgebra(n);
    REQUIRE(f.dim() == l.dim());
    auto rename = [](std::string s) { return s.replace(0, 1, "l"); };
    for (std::size_t k = 0; k < f.dim(); ++k) {
      auto target = l.find_label(rename(f.label(k)));
      REQUIRE(target);
      std::map<std::pair<std::string, std::string>, Scalar> renamed;
      for (const auto& [pair, c] : labelled_delta(f, k)) renamed[{rename(pair.first), rename(pair.second)}] = c;
      CHECK(renamed == labelled_delta(l, *target));
      CHECK(f.epsilon(k) == l.epsilon(*target));
    }
  }
}

TEST_CASE("direct sums keep blocks apart") {
  auto s = direct_sum({triangular_coalgebra(2), triangular_coalgebra(1)});
  CHECK(s.dim() == 4);
  CHECK(s.block_count() == 2);
  CHECK(s.is_cotriangular());
  CHECK(verify_coalgebra(s).passed());
  CHECK(s.find_label("0.l(2,1)"));
  CHECK(s.find_label("1.l(1,1)"));
  CHECK(grouplikes(s).size() == 3);
}

TEST_CASE("property: damaging one coproduct coefficient is always detected") {
  build::Gen gen(404);
  for (int trial = 0; trial < 30; ++trial) {
    auto l = triangular_coalgebra(2 + gen.index(3));
    const std::size_t k = gen.index(l.dim());
    // mutate a term with a diagonal leg: one counit law then sees the change
    std::size_t term = 0;
    for (; term < l.delta(k).size(); ++term) {
      const auto& t = l.delta(k)[term];
      if (l.id(t.left).is_diagonal() || l.id(t.right).is_diagonal()) break;
    }
    REQUIRE(term < l.delta(k).size());
    Scalar coeff = 1 + gen.scalar(true);
    if (coeff == 1) coeff = 2;
    auto bad = mutate(l, k, term, coeff);
    auto report = verify_coalgebra(bad);
    CHECK_FALSE(report.passed());
    REQUIRE(report.first_failure());
    bool at_k = false;
    for (const auto& c : report.checks)
      if (c.index == k) at_k = !c.counit_left || !c.counit_right;
    CHECK(at_k);
    CHECK_FALSE(bad.is_cotriangular());
  }
}

TEST_CASE("coalgebra construction rejects malformed input") {
  auto l = triangular_coalgebra(2);
  std::vector<std::string> labels{"a", "a", "b"};
  std::vector<std::vector<CoproductTerm>> delta(3);
  CHECK_THROWS_AS(Coalgebra(l.basis(), labels, delta, {1, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(BasisId::triangular(0, 1, 2), InvalidArgument);
}

TEST_CASE("algebras breaking an axiom are refused") {
  AlgebraPresentation a;
  a.names = {"u", "v"};
  a.unit = AlgebraElement::single(0);
  a.products[{0, 0}] = AlgebraElement::single(0);
  a.products[{0, 1}] = AlgebraElement::single(1);
  a.products[{1, 0}] = AlgebraElement::single(1);
  a.products[{1, 1}] = AlgebraElement::single(1);
  CHECK(a.violations().empty());  // v idempotent: fine
  a.products[{1, 1}] = AlgebraElement::single(0);
  CHECK(a.violations().empty());  // v^2 = 1: fine
  a.products[{1, 0}] = AlgebraElement::single(0);  // unit law broken
  CHECK_FALSE(a.violations().empty());
  CHECK_THROWS_AS(dual_coalgebra(a), InvalidAlgebra);
}
