#include "hopfreal/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hopfreal/errors.hpp"

namespace hopfreal {

// ------------------------------------------------------------ specification

std::vector<std::string> RealizationSpec::violations() const {
  std::vector<std::string> out;
  const auto& l = l_coalg;
  const auto& f = f_ctx.coalgebra();
  if (x_map.size() != l.dim()) {
    out.push_back("x is defined on " + std::to_string(x_map.size()) + " of " + std::to_string(l.dim()) +
                  " basis elements of L");
    return out;
  }
  for (std::size_t b = 0; b < l.dim(); ++b) {
    for (const auto& [id, c] : x_map[b].form)
      if (!f.find(id)) out.push_back("x(" + l.label(b) + ") uses a form outside F");
  }
  if (!diag_pairs) return out;
  const auto group = grouplikes(l);
  const std::set<BasisId> grouplike_set(group.begin(), group.end());
  for (const auto& [a, b] : *diag_pairs) {
    auto ia = l.find(a);
    auto ib = l.find(b);
    if (!ia || !ib) {
      out.push_back("diagonal pair references a basis id outside L");
      continue;
    }
    if (!grouplike_set.count(a) || !grouplike_set.count(b)) {
      out.push_back("diagonal pair (" + l.label(*ia) + ", " + l.label(*ib) + ") is not grouplike");
      continue;
    }
    if (!(x_matrix(*ia) * x_matrix(*ib) == Matrix::identity(f.dim())))
      out.push_back("x(" + l.label(*ia) + ") o x(" + l.label(*ib) + ") is not the identity on F");
  }
  return out;
}

void RealizationSpec::validate() const {
  auto problems = violations();
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

Matrix RealizationSpec::x_matrix(std::size_t l) const { return op_from_form(f_ctx.coalgebra(), x_map.at(l)); }

RealizationSpec RealizationSpec::with_truncation(std::size_t n) const {
  RealizationSpec out = *this;
  out.f_ctx = f_ctx.with_max_degree(n);
  return out;
}

// ------------------------------------------------------- iterated coproduct

namespace {

LPoly split_last(const Coalgebra& l, const LPoly& acc) {
  LPoly out;
  for (const auto& [w, c] : acc) {
    for (const auto& t : l.delta(w.letters.back())) {
      LWord next = w;
      next.letters.back() = static_cast<std::uint32_t>(t.left);
      next.letters.push_back(static_cast<std::uint32_t>(t.right));
      out.add(next, c * t.coeff);
    }
  }
  return out;
}

LPoly split_first(const Coalgebra& l, const LPoly& acc) {
  LPoly out;
  for (const auto& [w, c] : acc) {
    for (const auto& t : l.delta(w.letters.front())) {
      LWord next;
      next.letters.reserve(w.letters.size() + 1);
      next.letters.push_back(static_cast<std::uint32_t>(t.left));
      next.letters.push_back(static_cast<std::uint32_t>(t.right));
      next.letters.insert(next.letters.end(), w.letters.begin() + 1, w.letters.end());
      out.add(next, c * t.coeff);
    }
  }
  return out;
}

LPoly as_degree_one(const Coalgebra& l, const Vect& v) {
  LPoly out;
  for (const auto& [id, c] : v) out.add(LWord{static_cast<std::uint32_t>(l.index_of(id))}, c);
  return out;
}

}  // namespace

LPoly iterated_coproduct(const Coalgebra& l, const Vect& v, std::size_t n) {
  LPoly by_last = as_degree_one(l, v);
  LPoly by_first = by_last;
  for (std::size_t k = 0; k < n; ++k) {
    by_last = split_last(l, by_last);
    by_first = split_first(l, by_first);
  }
  if (!(by_last == by_first))
    throw InternalInconsistency("iterated coproduct depends on parenthesization (L is not coassociative)");
  return by_last;
}

// ------------------------------------------------------------------- Lifter

Lifter::Lifter(std::shared_ptr<const RealizationSpec> spec) : spec_(std::move(spec)) {
  if (spec_->x_map.size() != spec_->l_coalg.dim()) throw InvalidArgument("x must be defined on every basis element of L");
  for (std::size_t b = 0; b < spec_->l_coalg.dim(); ++b) x_.push_back(spec_->x_matrix(b));
  cache_.resize(spec_->l_coalg.dim());
}

const LinOp& Lifter::basis_lift(std::size_t b) const {
  {
    std::lock_guard lock(mutex_);
    if (cache_.at(b)) return *cache_[b];
  }
  LinOp value = compute(b);
  std::lock_guard lock(mutex_);
  if (!cache_[b]) cache_[b] = std::move(value);
  return *cache_[b];
}

LinOp Lifter::compute(std::size_t b) const {
  const auto& l = spec_->l_coalg;
  const auto& ctx = spec_->f_ctx;
  std::vector<Matrix> blocks;
  Matrix unit(1, 1);
  unit.set(0, 0, l.epsilon(b));
  blocks.push_back(std::move(unit));
  LPoly terms = LPoly::single(LWord{static_cast<std::uint32_t>(b)});
  for (std::size_t n = 1; n <= ctx.max_degree(); ++n) {
    if (n > 1) terms = split_last(l, terms);
    const std::size_t size = ctx.words_in_degree(n);
    Matrix block(size, size);
    for (const auto& [w, c] : terms) {
      Matrix product = x_[w.letters.front()];
      for (std::size_t k = 1; k < w.letters.size(); ++k) product = kron(product, x_[w.letters[k]]);
      block += c * product;
    }
    blocks.push_back(std::move(block));
  }
  return LinOp(std::move(blocks));
}

LinOp Lifter::lift(const LinComb<std::size_t>& l) const {
  LinOp out = LinOp::zero(ctx());
  for (const auto& [b, c] : l) out += c * basis_lift(b);
  return out;
}

LinOp Lifter::lift(const Vect& l) const {
  LinComb<std::size_t> positions;
  for (const auto& [id, c] : l) positions.add(spec_->l_coalg.index_of(id), c);
  return lift(positions);
}

LinOp lift_operator(const RealizationSpec& spec, const Vect& l) {
  return Lifter(std::make_shared<const RealizationSpec>(spec)).lift(l);
}

// ---------------------------------------------------------- splitting oracle

namespace {

class SplittingEvaluator {
 public:
  explicit SplittingEvaluator(const RealizationSpec& spec) : spec_(spec) {
    for (std::size_t b = 0; b < spec.l_coalg.dim(); ++b) x_.push_back(spec.x_matrix(b));
  }

  // X(b)(w) through X(b)(f . rest) = sum X(b')(f) . X(b'')(rest).
  const TensorElement& eval(std::size_t b, const Word& w) {
    auto key = std::make_pair(b, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TensorElement out;
    if (w.empty()) {
      out.add(Word{}, spec_.l_coalg.epsilon(b));
    } else {
      const Word rest(std::vector<std::uint32_t>(w.letters.begin() + 1, w.letters.end()));
      for (const auto& t : spec_.l_coalg.delta(b)) {
        const auto image = x_[t.left].columns()[w.letters.front()];
        const TensorElement tail = eval(t.right, rest);
        for (const auto& [letter, a] : image.entries()) {
          for (const auto& [tw, c] : tail) {
            Word joined{static_cast<std::uint32_t>(letter)};
            joined = joined * tw;
            out.add(joined, t.coeff * a * c);
          }
        }
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  const RealizationSpec& spec_;
  std::vector<Matrix> x_;
  std::map<std::pair<std::size_t, Word>, TensorElement> memo_;
};

}  // namespace

TensorElement lift_by_splitting(const RealizationSpec& spec, const Vect& l, const Word& w) {
  SplittingEvaluator eval(spec);
  TensorElement out;
  for (const auto& [id, c] : l) {
    auto part = eval.eval(spec.l_coalg.index_of(id), w);
    part *= c;
    out += part;
  }
  return out;
}

LinOp lift_operator_by_splitting(const RealizationSpec& spec, const Vect& l) {
  const auto& ctx = spec.f_ctx;
  SplittingEvaluator eval(spec);
  std::vector<Matrix> blocks;
  for (std::size_t n = 0; n <= ctx.max_degree(); ++n) {
    const std::size_t size = ctx.words_in_degree(n);
    Matrix block(size, size);
    for (std::size_t col = 0; col < size; ++col) {
      const Word w = ctx.word_at(n, col);
      for (const auto& [id, c] : l) {
        for (const auto& [image, a] : eval.eval(spec.l_coalg.index_of(id), w)) {
          // Images of other degrees cannot be stored in a block; they show up
          // as a grade-preservation failure in verify_lift.
          if (image.degree() == n) block.add_to(ctx.word_index(image), col, c * a);
        }
      }
    }
    blocks.push_back(std::move(block));
  }
  return LinOp(std::move(blocks));
}

// -------------------------------------------------------------- verification

std::optional<std::string> splitting_defect(const TensorContext& ctx, const LinOp& a,
                                            const std::vector<SplitTerm>& terms, std::size_t bound) {
  for (std::size_t total = 0; total <= bound; ++total) {
    for (std::size_t p = 0; p <= total; ++p) {
      const std::size_t q = total - p;
      const std::size_t size = ctx.words_in_degree(total);
      Matrix rhs(size, size);
      for (const auto& t : terms) {
        if (t.coeff == 0) continue;
        rhs += t.coeff * kron(t.left.block(p), t.right.block(q));
      }
      Matrix diff = a.block(total) - rhs;
      if (diff.is_zero()) continue;
      for (std::size_t r = 0; r < diff.rows(); ++r) {
        if (diff.row(r).empty()) continue;
        const std::size_t col = diff.row(r).leading_index();
        const std::size_t right_size = ctx.words_in_degree(q);
        const Word w1 = ctx.word_at(p, col / right_size);
        const Word w2 = ctx.word_at(q, col % right_size);
        return "w1 = " + ctx.format(w1) + ", w2 = " + ctx.format(w2);
      }
    }
  }
  return std::nullopt;
}

bool LiftReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const LiftProperty& p) { return p.passed; });
}

LiftReport verify_lift(const Lifter& lifter, const Vect& l) {
  const auto& spec = lifter.spec();
  const auto& ctx = spec.f_ctx;
  const auto& lc = spec.l_coalg;
  const LinOp x = lifter.lift(l);
  LiftReport report;

  LiftProperty unit{"unit"};
  if (x.block(0).at(0, 0) != lc.counit(l)) {
    unit.passed = false;
    unit.witness = "X(l)(1) = " + to_string(x.block(0).at(0, 0)) + " * 1";
  }
  report.properties.push_back(unit);

  LiftProperty extends{"extends-x"};
  Matrix expected(ctx.letters(), ctx.letters());
  for (const auto& [id, c] : l) expected += c * spec.x_matrix(lc.index_of(id));
  if (!(x.block(1) == expected)) {
    extends.passed = false;
    extends.witness = "degree-1 block differs from x(l)";
  }
  report.properties.push_back(extends);

  LiftProperty split{"splitting"};
  std::vector<SplitTerm> terms;
  for (const auto& [pair, c] : lc.coproduct(l)) {
    terms.push_back({c, lifter.basis_lift(lc.index_of(pair.first)), lifter.basis_lift(lc.index_of(pair.second))});
  }
  if (auto defect = splitting_defect(ctx, x, terms, ctx.max_degree())) {
    split.passed = false;
    split.witness = *defect;
  }
  report.properties.push_back(split);

  LiftProperty graded{"grade-preserving"};
  SplittingEvaluator eval(spec);
  for (std::size_t n = 0; n <= ctx.max_degree() && graded.passed; ++n) {
    for (std::size_t k = 0; k < ctx.words_in_degree(n) && graded.passed; ++k) {
      const Word w = ctx.word_at(n, k);
      for (const auto& [id, c] : l) {
        for (const auto& [image, a] : eval.eval(lc.index_of(id), w)) {
          if (image.degree() != n) {
            graded.passed = false;
            graded.witness = ctx.format(w);
          }
        }
      }
    }
  }
  report.properties.push_back(graded);

  LiftProperty invariant{"right-invariant"};
  auto check = verify_right_invariance(ctx, x);
  if (!check.invariant) {
    invariant.passed = false;
    invariant.witness = "degree " + std::to_string(check.degree) + ", word " + check.witness_text;
  }
  report.properties.push_back(invariant);

  LiftProperty oracle{"oracle-agreement"};
  const LinOp recursive = lift_operator_by_splitting(spec, l);
  for (std::size_t n = 0; n <= ctx.max_degree(); ++n) {
    if (!(recursive.block(n) == x.block(n))) {
      oracle.passed = false;
      oracle.witness = "degree " + std::to_string(n);
      break;
    }
  }
  report.properties.push_back(oracle);
  return report;
}

LiftReport verify_lift(const RealizationSpec& spec, const Vect& l) {
  return verify_lift(Lifter(std::make_shared<const RealizationSpec>(spec)), l);
}

}  // namespace hopfreal
