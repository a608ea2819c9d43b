#include <doctest.h>

#include "builders.hpp"
#include "checks.hpp"
#include "hopfreal/errors.hpp"

using namespace hopfreal;

namespace {

using checks::systems_hold;
using checks::y_coproduct_holds;

void check_reduced_words(const build::Case& c, const AntipodeTable& table) {
  auto rep = build::oracle_of(c);
  for (const auto& e : table.entries) {
    CHECK(rep.represent(e.reduced) == oracle::to_blocks(e.op));
    CHECK(rep.represent(e.expression) == oracle::to_blocks(e.op));
    CHECK(max_degree(e.reduced) <= max_degree(e.expression));
  }
}

LWord letter(const Realization& r, const char* label) { return LWord{static_cast<std::uint32_t>(*r.letter(label))}; }

}  // namespace

TEST_CASE("Example W: the triangular antipode is Y(l(2,1)) = -X(l(2,1))") {
  auto c = build::example_w(3);
  Realization r(c.spec);
  auto table = antipode_triangular(r);
  CHECK(table.method == "triangular");
  auto rep = build::oracle_of(c);
  const auto p21 = *r.letter("l(2,1)");
  CHECK(oracle::to_blocks(table.at(p21).op) == oracle::scaled(rep.letters[p21], -1));
  CHECK(table.at(*r.letter("l(1,1)")).op == LinOp::identity(c.spec.f_ctx));
  CHECK(systems_hold(c, table));
  CHECK_FALSE(antipode_system_defect(r, [&] {
    std::vector<LinOp> ops;
    for (const auto& e : table.entries) ops.push_back(e.op);
    return ops;
  }()));
  CHECK(y_coproduct_holds(c, table));
  auto report = verify_y_coproduct(r, table, 3);
  CHECK(report.passed);
  CHECK(report.checked == 3 + 9);
  check_reduced_words(c, table);
  CHECK(r.format(table.at(p21).reduced) == "-l(2,1)");
}

TEST_CASE("property: triangular antipodes of random realizations satisfy both systems") {
  build::Gen gen(1212);
  for (int trial = 0; trial < 8; ++trial) {
    auto c = gen.triangular_case(2 + gen.index(2), 2, 2);
    Realization r(c.spec);
    auto table = antipode_triangular(r);
    CHECK(systems_hold(c, table));
    CHECK(y_coproduct_holds(c, table));
    CHECK(verify_y_coproduct(r, table, 2).passed);
    check_reduced_words(c, table);
    // two-sided inverses are unique, so the general solver must land on the same operators
    auto general = antipode_general(r, 2);
    REQUIRE(general);
    for (std::size_t b = 0; b < r.l().dim(); ++b) CHECK(general->at(b).op == table.at(b).op);
  }
}

TEST_CASE("perturbing any Y breaks a system equation") {
  auto c = build::example_w(3);
  Realization r(c.spec);
  auto table = antipode_triangular(r);
  auto report = perturbation_uniqueness(r, table, 10, 20240601, 3);
  CHECK(report.trials == 10);
  CHECK(report.passed());
}

TEST_CASE("S extends S_1 as an anti-homomorphism") {
  auto c = build::example_w(3);
  Realization r(c.spec);
  auto table = antipode_triangular(r);
  auto l21 = letter(r, "l(2,1)"), l11 = letter(r, "l(1,1)");
  auto s = extend_antihom(r.l(), table, LPoly::single(l21 * l21), 3);
  CHECK_FALSE(s.truncated);
  CHECK(s.value == LPoly::single(l21 * l21));
  CHECK(extend_antihom(r.l(), table, LPoly::single(l11 * l21), 3).value == LPoly::single(l21, -1));
  // the result represents the composite in reverse order: pi(S(ab)) = Y(b) Y(a)
  build::Gen gen(1313);
  for (int trial = 0; trial < 10; ++trial) {
    auto w = gen.lword(3, 1 + gen.index(3));
    auto image = extend_antihom(r.l(), table, LPoly::single(w), 3);
    LinOp expected = LinOp::identity(c.spec.f_ctx);
    for (auto a : w.letters) expected = table.at(a).op.compose(expected);
    CHECK(r.represent(image.value) == expected);
  }
}

TEST_CASE("Example W: closure stabilizes and the quotient is Hopf") {
  auto c = build::example_w(3);
  Realization r(c.spec);
  auto table = antipode_triangular(r);
  auto r0 = certify_relations(r, 3, true);
  REQUIRE(r0.stable());
  auto closure = closure_iterate(r, table, r0.at_next.basis, 3, 3);
  CHECK(closure.stabilized);
  REQUIRE(closure.stable_at);
  CHECK(*closure.stable_at <= 3);
  for (const auto& stage : closure.stages) CHECK(stage.coideal_defect_contained);
  // l(1,1) and l(2,2) act as the identity and D is not nilpotent on T(F)_{<=3},
  // so the quotient in degree <= k is spanned by 1, l(2,1), ..., l(2,1)^k
  CHECK(closure.quotient_dims == std::map<std::size_t, std::size_t>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto hopf = verify_hopf_quotient(r, table, closure, 3, 2);
  CHECK(hopf.passed);
  CHECK(hopf.coideal);
  CHECK(hopf.checked == 1 + 3 + 9);
}

TEST_CASE("grouplike pair: S swaps the two generators") {
  auto c = build::grouplike_pair(3);
  Realization r(c.spec);
  auto table = antipode_triangular(r);
  CHECK(table.at(0).reduced == LPoly::single(LWord{1}));
  CHECK(table.at(1).reduced == LPoly::single(LWord{0}));
  CHECK(systems_hold(c, table));
  auto general = antipode_general(r, 2);
  REQUIRE(general);
  CHECK(general->at(0).op == table.at(0).op);
  auto r0 = certify_relations(r, 2, true);
  auto closure = closure_iterate(r, table, r0.at_next.basis, 3, 2);
  CHECK(closure.stabilized);
  CHECK(verify_hopf_quotient(r, table, closure, 2, 2).passed);
}

TEST_CASE("general solver: trivial realization gives eps id, the projection has no antipode") {
  Realization trivial(build::trivial(3).spec);
  auto table = antipode_general(trivial, 2);
  REQUIRE(table);
  CHECK(table->unique);
  for (std::size_t b = 0; b < trivial.l().dim(); ++b) {
    LinOp expected = trivial.l().epsilon(b) * LinOp::identity(trivial.ctx());
    CHECK(table->at(b).op == expected);
  }

  Realization proj(build::projection(3).spec);
  CHECK_FALSE(antipode_general(proj, 3));
  CHECK_THROWS_AS(antipode_triangular(proj), PreconditionError);
}

TEST_CASE("the triangular method refuses non-cotriangular coalgebras") {
  auto f = build::m_dual(2);
  auto l = dual_coalgebra(truncated_polynomial_algebra(2));
  RealizationSpec spec{l, TensorContext(f, 2), {build::ident(), RIOp{}}, std::nullopt};
  Realization r(spec);
  CHECK_THROWS_AS(antipode_triangular(r), Unsupported);
}
