#include "hopfreal/hopf.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "hopfreal/errors.hpp"

namespace hopfreal {

namespace {

LPoly multiply(const LPoly& a, const LPoly& b) {
  LPoly out;
  for (const auto& [u, c] : a)
    for (const auto& [v, e] : b) out.add(u * v, c * e);
  return out;
}

LPoly letter_poly(std::size_t position) { return LPoly::single(LWord{static_cast<std::uint32_t>(position)}); }

// Monomials of degree <= bound whose images are linearly independent, in
// ascending degree / lexicographic order.
std::vector<LWord> operator_algebra_basis(const Realization& r, std::size_t bound) {
  const MonomialSpace space(r.l().dim(), 0, bound);
  std::size_t flat = r.monomial(LWord{}).flat_size();
  EchelonBasis basis(flat);
  std::vector<LWord> out;
  for (const auto& w : space.words())
    if (basis.insert(r.monomial(w).flatten())) out.push_back(w);
  return out;
}

// Lowest-degree word p with pi(p) = pi(fallback), certified one truncation
// degree higher; degree-ascending columns and zero free variables make the
// choice deterministic. Falls back to `fallback` itself.
LPoly lowest_degree_word(const Realization& r, const Realization& next, const LPoly& fallback) {
  const std::size_t top = std::min(max_degree(fallback), r.truncation());
  const SparseVec target = r.represent(fallback).flatten();
  const LinOp target_next = next.represent(fallback);
  for (std::size_t e = 0; e <= top; ++e) {
    const MonomialSpace space(r.l().dim(), 0, e);
    std::vector<SparseVec> columns;
    columns.reserve(space.size());
    for (const auto& w : space.words()) columns.push_back(r.monomial(w).flatten());
    auto solution = solve_columns(columns, target);
    if (!solution) continue;
    LPoly candidate = space.to_poly(*solution);
    if (next.represent(candidate) == target_next) return candidate;
  }
  return fallback;
}

void fill_reduced(const Realization& r, AntipodeTable& table) {
  const Realization next = r.with_truncation(r.truncation() + 1);
  for (auto& entry : table.entries) entry.reduced = lowest_degree_word(r, next, entry.expression);
}

std::string degree_note(const LinOp& diff) {
  for (std::size_t n = 0; n <= diff.max_degree(); ++n)
    if (!diff.block(n).is_zero()) return "degree " + std::to_string(n);
  return "degree ?";
}

}  // namespace

// ---------------------------------------------------------------- triangular

std::optional<std::string> antipode_system_defect(const Realization& r, const std::vector<LinOp>& y) {
  const auto& l = r.l();
  if (y.size() != l.dim()) throw InvalidArgument("one operator per basis element of L expected");
  const LinOp id = LinOp::identity(r.ctx());
  for (std::size_t b = 0; b < l.dim(); ++b) {
    LinOp left = LinOp::zero(r.ctx());
    LinOp right = LinOp::zero(r.ctx());
    for (const auto& t : l.delta(b)) {
      left += t.coeff * r.lifter().basis_lift(t.left).compose(y[t.right]);
      right += t.coeff * y[t.left].compose(r.lifter().basis_lift(t.right));
    }
    const LinOp expected = l.epsilon(b) * id;
    if (!(left == expected)) return "left system at " + l.label(b) + ", " + degree_note(left - expected);
    if (!(right == expected)) return "right system at " + l.label(b) + ", " + degree_note(right - expected);
  }
  return std::nullopt;
}

AntipodeTable antipode_triangular(const Realization& r) {
  const auto& l = r.l();
  if (!l.is_cotriangular()) throw Unsupported("triangular antipode needs a cotriangular L");
  const auto& pairs = r.spec().diag_pairs;
  if (!pairs) throw PreconditionError("triangular antipode needs diagonal inverse words (diag_pairs)");
  std::map<std::size_t, std::size_t> inverse_of;
  for (const auto& [a, b] : *pairs) inverse_of[l.index_of(a)] = l.index_of(b);

  std::map<std::size_t, std::size_t> block_size;
  for (const auto& id : l.basis()) block_size[id.block()] = std::max(block_size[id.block()], id.i());

  std::vector<std::optional<LinOp>> ops(l.dim());
  std::vector<LPoly> expr(l.dim());
  for (const auto& [block, n] : block_size) {
    auto pos = [&, blk = block](std::size_t i, std::size_t j) { return l.index_of(BasisId::triangular(blk, i, j)); };
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j >= 1; --j) {
        const std::size_t p = pos(i, j);
        if (i == j) {
          auto it = inverse_of.find(p);
          if (it == inverse_of.end()) throw PreconditionError("no diagonal inverse word for " + l.label(p));
          ops[p] = r.lifter().basis_lift(it->second);
          expr[p] = letter_poly(it->second);
          continue;
        }
        LinOp sum = LinOp::zero(r.ctx());
        LPoly sum_expr;
        for (std::size_t k = j + 1; k <= i; ++k) {
          sum += r.lifter().basis_lift(pos(k, j)).compose(*ops[pos(i, k)]);
          sum_expr += multiply(letter_poly(pos(k, j)), expr[pos(i, k)]);
        }
        ops[p] = Scalar(-1) * ops[pos(j, j)]->compose(sum);
        expr[p] = -multiply(expr[pos(j, j)], sum_expr);
      }
    }
  }

  AntipodeTable table;
  table.method = "triangular";
  table.truncation = r.truncation();
  table.diag_pairs = *pairs;
  std::vector<LinOp> y;
  for (std::size_t b = 0; b < l.dim(); ++b) {
    table.entries.push_back({l.id(b), expr[b], {}, *ops[b]});
    y.push_back(*ops[b]);
  }
  if (auto defect = antipode_system_defect(r, y))
    throw InternalInconsistency("triangular antipode fails its own system: " + *defect);
  fill_reduced(r, table);
  return table;
}

// ----------------------------------------------------------- coproduct law

YCoproductReport verify_y_coproduct(const Realization& r, const AntipodeTable& table, std::size_t bound) {
  const auto& l = r.l();
  YCoproductReport report;
  report.bound = std::min(bound, r.truncation());
  auto y = [&](std::size_t b) -> const LinOp& { return table.at(b).op; };

  for (std::size_t b = 0; b < l.dim(); ++b) {
    std::vector<SplitTerm> terms;
    for (const auto& t : l.delta(b)) terms.push_back({t.coeff, y(t.right), y(t.left)});
    ++report.checked;
    if (auto defect = splitting_defect(r.ctx(), y(b), terms, report.bound)) {
      report.passed = false;
      report.witness = "Y(" + l.label(b) + ") at " + *defect;
      return report;
    }
  }
  for (std::size_t a = 0; a < l.dim(); ++a) {
    for (std::size_t b = 0; b < l.dim(); ++b) {
      std::vector<SplitTerm> terms;
      for (const auto& ta : l.delta(a)) {
        for (const auto& tb : l.delta(b)) {
          terms.push_back({ta.coeff * tb.coeff, y(tb.right).compose(y(ta.right)), y(tb.left).compose(y(ta.left))});
        }
      }
      ++report.checked;
      if (auto defect = splitting_defect(r.ctx(), y(b).compose(y(a)), terms, report.bound)) {
        report.passed = false;
        report.witness = "Y(" + l.label(a) + " " + l.label(b) + ") at " + *defect;
        return report;
      }
    }
  }
  return report;
}

// ------------------------------------------------------- anti-homomorphism

AntihomResult extend_antihom(const Coalgebra& l, const AntipodeTable& table, const LPoly& w, std::size_t cap) {
  if (table.entries.size() != l.dim()) throw InvalidArgument("antipode table does not match L");
  AntihomResult out;
  for (const auto& [word, c] : w) {
    LPoly acc = LPoly::single(LWord{}, c);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
      LPoly next;
      for (const auto& [u, a] : acc) {
        for (const auto& [v, e] : table.at(*it).reduced) {
          if (u.degree() + v.degree() > cap) {
            out.truncated = true;
            continue;
          }
          next.add(u * v, a * e);
        }
      }
      acc = std::move(next);
    }
    out.value += acc;
  }
  return out;
}

// ------------------------------------------------------------------ closure

ClosureResult closure_iterate(const Realization& r, const AntipodeTable& table, const std::vector<LPoly>& r0,
                              std::size_t max_stages, std::size_t d) {
  const auto& l = r.l();
  const MonomialSpace space(l.dim(), 0, d);
  EchelonBasis current(space.size());
  for (const auto& p : r0) {
    if (max_degree(p) > d) throw InvalidArgument("initial relation above the degree bound");
    current.insert(space.to_vec(p));
  }
  auto basis_of = [&](const EchelonBasis& e) {
    std::vector<LPoly> out;
    for (const auto& [pivot, row] : e.rows()) out.push_back(space.to_poly(row));
    return out;
  };

  ClosureResult result;
  result.bound = d;
  std::vector<LPoly> basis = basis_of(current);
  IdealSpan ideal(l.dim(), d, basis);
  for (std::size_t n = 0;; ++n) {
    ClosureStage stage;
    stage.basis = basis;
    stage.ideal_dimension = ideal.dimension();
    std::vector<LPoly> fresh;
    for (const auto& g : basis) {
      auto image = extend_antihom(l, table, g, d);
      stage.truncated = stage.truncated || image.truncated;
      if (!ideal.contains(image.value)) fresh.push_back(std::move(image.value));
    }
    if (fresh.empty()) {
      stage.coideal_defect_contained = verify_coideal_in(l, basis, ideal).passed;
      result.stages.push_back(std::move(stage));
      result.stabilized = true;
      result.stable_at = n;
      break;
    }
    if (n == max_stages) {
      stage.coideal_defect_contained = verify_coideal_in(l, basis, ideal).passed;
      result.stages.push_back(std::move(stage));
      break;
    }
    for (const auto& p : fresh) current.insert(space.to_vec(p));
    std::vector<LPoly> next_basis = basis_of(current);
    IdealSpan next_ideal(l.dim(), d, next_basis);
    stage.coideal_defect_contained = verify_coideal_in(l, basis, next_ideal).passed;
    result.stages.push_back(std::move(stage));
    basis = std::move(next_basis);
    ideal = std::move(next_ideal);
  }

  std::size_t monomials = 0;
  for (std::size_t k = 0; k <= d; ++k) {
    monomials += monomials_of_degree(l.dim(), k).size();
    result.quotient_dims[k] = monomials - ideal.dimension_up_to(k);
  }
  return result;
}

// -------------------------------------------------------- quotient checks

HopfReport verify_hopf_quotient(const Realization& r, const AntipodeTable& table, const ClosureResult& closure,
                                std::size_t d, std::size_t sample_degree) {
  const auto& l = r.l();
  HopfReport report;
  report.bound = d;
  if (!closure.stabilized) {
    report.passed = false;
    report.witness = "closure did not stabilize";
    return report;
  }
  constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();
  struct Pending {
    LWord w;
    LPoly left;
    LPoly right;
  };
  std::vector<Pending> pending;
  std::size_t needed = d;
  for (std::size_t n = 0; n <= sample_degree; ++n) {
    for (const auto& w : monomials_of_degree(l.dim(), n)) {
      Pending item{w, {}, {}};
      for (const auto& [legs, c] : coproduct_l(l, LPoly::single(w))) {
        const LPoly s_left = extend_antihom(l, table, LPoly::single(legs.first), unbounded).value;
        const LPoly s_right = extend_antihom(l, table, LPoly::single(legs.second), unbounded).value;
        item.left += c * multiply(s_left, LPoly::single(legs.second));
        item.right += c * multiply(LPoly::single(legs.first), s_right);
      }
      const LPoly target = LPoly::single(LWord{}, counit_l(l, LPoly::single(w)));
      item.left -= target;
      item.right -= target;
      needed = std::max({needed, max_degree(item.left), max_degree(item.right)});
      pending.push_back(std::move(item));
    }
  }
  report.ideal_bound = needed;
  const IdealSpan ideal(l.dim(), needed, closure.generators());
  for (const auto& item : pending) {
    ++report.checked;
    if (!ideal.contains(item.left) || !ideal.contains(item.right)) {
      report.passed = false;
      if (report.witness.empty()) {
        report.witness = "w = " + r.format(item.w) + (ideal.contains(item.left) ? " (right identity)" : " (left identity)");
      }
    }
  }
  report.coideal = verify_coideal(l, closure.generators(), d).passed;
  if (!report.coideal) {
    report.passed = false;
    if (report.witness.empty()) report.witness = "J is not a coideal at the bound";
  }
  return report;
}

// ------------------------------------------------------------------ general

std::optional<AntipodeTable> antipode_general(const Realization& r, std::size_t bound) {
  const auto& l = r.l();
  const std::vector<LWord> basis = operator_algebra_basis(r, bound);
  const std::size_t rank = basis.size();
  const std::size_t flat = r.monomial(LWord{}).flat_size();
  const std::size_t dim = l.dim();

  // Unknown (u, t): coefficient of pi(basis[t]) in Y(u). Equation blocks:
  // b for the left system at b, dim + b for the right system at b.
  std::vector<SparseVec> columns(dim * rank);
  SparseVec rhs;
  const SparseVec id = LinOp::identity(r.ctx()).flatten();
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t left_offset = b * flat;
    const std::size_t right_offset = (dim + b) * flat;
    for (const auto& t : l.delta(b)) {
      for (std::size_t k = 0; k < rank; ++k) {
        const LWord left_word = LWord{static_cast<std::uint32_t>(t.left)} * basis[k];
        const LWord right_word = basis[k] * LWord{static_cast<std::uint32_t>(t.right)};
        columns[t.right * rank + k] = columns[t.right * rank + k] + r.monomial(left_word).flatten().scaled(t.coeff).shifted(left_offset);
        columns[t.left * rank + k] = columns[t.left * rank + k] + r.monomial(right_word).flatten().scaled(t.coeff).shifted(right_offset);
      }
    }
  }
  for (std::size_t b = 0; b < dim; ++b) {
    if (l.epsilon(b) == 0) continue;
    rhs = rhs + id.scaled(l.epsilon(b)).shifted(b * flat);
  }
  for (std::size_t b = 0; b < dim; ++b) {
    if (l.epsilon(b) == 0) continue;
    rhs = rhs + id.scaled(l.epsilon(b)).shifted((dim + b) * flat);
  }
  auto solution = solve_columns(columns, rhs);
  if (!solution) return std::nullopt;

  AntipodeTable table;
  table.method = "general";
  table.truncation = r.truncation();
  if (r.spec().diag_pairs) table.diag_pairs = *r.spec().diag_pairs;
  table.unique = column_rank(columns) == columns.size();
  std::vector<LPoly> words(dim);
  for (const auto& [k, c] : solution->entries()) words[k / rank].add(basis[k % rank], c);
  std::vector<LinOp> y;
  for (std::size_t b = 0; b < dim; ++b) {
    LinOp op = r.represent(words[b]);
    table.entries.push_back({l.id(b), words[b], words[b], op});
    y.push_back(std::move(op));
  }
  if (auto defect = antipode_system_defect(r, y))
    throw InternalInconsistency("solved antipode fails its own system: " + *defect);
  return table;
}

PerturbationReport perturbation_uniqueness(const Realization& r, const AntipodeTable& table, std::size_t trials,
                                           std::uint32_t seed, std::size_t degree) {
  const std::vector<LWord> basis = operator_algebra_basis(r, degree);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_entry(0, table.entries.size() - 1);
  std::uniform_int_distribution<int> pick_coeff(-3, 3);
  PerturbationReport report;
  std::vector<LinOp> y;
  for (const auto& e : table.entries) y.push_back(e.op);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    LPoly p;
    while (p.is_zero())
      for (const auto& w : basis) p.add(w, pick_coeff(rng));
    const std::size_t target = pick_entry(rng);
    std::vector<LinOp> perturbed = y;
    perturbed[target] += r.represent(p);
    ++report.trials;
    if (antipode_system_defect(r, perturbed)) ++report.broken;
  }
  return report;
}

}  // namespace hopfreal
