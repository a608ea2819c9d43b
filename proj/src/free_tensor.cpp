#include "hopfreal/free_tensor.hpp"

#include <algorithm>
#include <array>

#include "hopfreal/errors.hpp"

namespace hopfreal {

TensorContext::TensorContext(Coalgebra f, std::size_t max_degree) : f_(std::move(f)), max_degree_(max_degree) {
  if (max_degree_ < 1) throw InvalidArgument("truncation degree must be >= 1");
  if (f_.dim() == 0) throw InvalidArgument("tensor context needs a nonempty coalgebra");
}

std::size_t TensorContext::words_in_degree(std::size_t n) const {
  std::size_t out = 1;
  for (std::size_t k = 0; k < n; ++k) out *= f_.dim();
  return out;
}

std::size_t TensorContext::word_index(const Word& w) const {
  std::size_t idx = 0;
  for (auto letter : w.letters) {
    if (letter >= f_.dim()) throw InvalidArgument("word letter out of range");
    idx = idx * f_.dim() + letter;
  }
  return idx;
}

Word TensorContext::word_at(std::size_t degree, std::size_t index) const {
  Word w;
  w.letters.assign(degree, 0);
  for (std::size_t k = degree; k-- > 0;) {
    w.letters[k] = static_cast<std::uint32_t>(index % f_.dim());
    index /= f_.dim();
  }
  return w;
}

std::string TensorContext::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (auto letter : w.letters) {
    if (!out.empty()) out += " ";
    out += f_.label(letter);
  }
  return out;
}

std::string TensorContext::format(const TensorElement& t) const {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : t) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Scalar mag = abs(c);
    if (mag != 1) out += to_string(mag) + "*";
    out += format(w);
  }
  return out;
}

ProductResult word_product(const TensorContext& ctx, const TensorElement& a, const TensorElement& b) {
  ProductResult out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      if (wa.degree() + wb.degree() > ctx.max_degree()) {
        out.truncated = true;
        continue;
      }
      out.value.add(wa * wb, ca * cb);
    }
  }
  return out;
}

TensorPair coproduct(const TensorContext& ctx, const Word& w) {
  const auto& f = ctx.coalgebra();
  TensorPair acc = TensorPair::single({Word{}, Word{}});
  for (auto letter : w.letters) {
    TensorPair next;
    for (const auto& [legs, c] : acc) {
      for (const auto& t : f.delta(letter)) {
        Word left = legs.first;
        Word right = legs.second;
        left.letters.push_back(static_cast<std::uint32_t>(t.left));
        right.letters.push_back(static_cast<std::uint32_t>(t.right));
        next.add({std::move(left), std::move(right)}, c * t.coeff);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

TensorPair coproduct(const TensorContext& ctx, const TensorElement& w) {
  TensorPair out;
  for (const auto& [word, c] : w) {
    auto part = coproduct(ctx, word);
    part *= c;
    out += part;
  }
  return out;
}

Scalar counit(const TensorContext& ctx, const Word& w) {
  Scalar out = 1;
  for (auto letter : w.letters) out *= ctx.coalgebra().epsilon(letter);
  return out;
}

Scalar counit(const TensorContext& ctx, const TensorElement& w) {
  Scalar out = 0;
  for (const auto& [word, c] : w) out += c * counit(ctx, word);
  return out;
}

Matrix coproduct_matrix(const TensorContext& ctx, std::size_t degree) {
  const std::size_t n = ctx.words_in_degree(degree);
  Matrix m(n * n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (const auto& [legs, c] : coproduct(ctx, ctx.word_at(degree, col)))
      m.add_to(ctx.word_index(legs.first) * n + ctx.word_index(legs.second), col, c);
  }
  return m;
}

// ------------------------------------------------------------- verification

namespace {

using WordTriple = std::array<Word, 3>;

std::vector<Word> words_up_to(const TensorContext& ctx, std::size_t degree) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= degree; ++n)
    for (std::size_t k = 0; k < ctx.words_in_degree(n); ++k) out.push_back(ctx.word_at(n, k));
  return out;
}

void record(BialgebraCheck& check, bool ok, const std::string& witness) {
  if (ok || !check.passed) return;
  check.passed = false;
  check.witness = witness;
}

}  // namespace

bool FreeBialgebraReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const BialgebraCheck& c) { return c.passed; });
}

FreeBialgebraReport verify_free_bialgebra(const TensorContext& ctx) {
  FreeBialgebraReport report;
  report.checked_degree = std::min<std::size_t>(ctx.max_degree(), 3);
  const auto words = words_up_to(ctx, report.checked_degree);

  BialgebraCheck multiplicative{"multiplicativity"};
  BialgebraCheck coassociative{"coassociativity"};
  BialgebraCheck counit_left{"counit-left"};
  BialgebraCheck counit_right{"counit-right"};
  BialgebraCheck grading{"grading"};

  for (const auto& w : words) {
    const auto d = coproduct(ctx, w);
    bool graded = true;
    for (const auto& [legs, c] : d) graded = graded && legs.first.degree() == w.degree() && legs.second.degree() == w.degree();
    record(grading, graded, ctx.format(w));

    LinComb<WordTriple> left;
    LinComb<WordTriple> right;
    TensorElement eps_left;
    TensorElement eps_right;
    for (const auto& [legs, c] : d) {
      for (const auto& [inner, e] : coproduct(ctx, legs.first)) left.add({inner.first, inner.second, legs.second}, c * e);
      for (const auto& [inner, e] : coproduct(ctx, legs.second)) right.add({legs.first, inner.first, inner.second}, c * e);
      eps_left.add(legs.second, c * counit(ctx, legs.first));
      eps_right.add(legs.first, c * counit(ctx, legs.second));
    }
    record(coassociative, left == right, ctx.format(w));
    const auto self = TensorElement::single(w);
    record(counit_left, eps_left == self, ctx.format(w));
    record(counit_right, eps_right == self, ctx.format(w));
  }

  for (const auto& a : words) {
    const auto da = coproduct(ctx, a);
    for (const auto& b : words) {
      if (a.degree() + b.degree() > report.checked_degree) continue;
      const auto db = coproduct(ctx, b);
      TensorPair product;
      for (const auto& [x, cx] : da)
        for (const auto& [y, cy] : db) product.add({x.first * y.first, x.second * y.second}, cx * cy);
      record(multiplicative, coproduct(ctx, a * b) == product, "(" + ctx.format(a) + ")*(" + ctx.format(b) + ")");
    }
  }

  report.checks = {multiplicative, coassociative, counit_left, counit_right, grading};
  return report;
}

Scalar duality_pairing(const TensorContext& ctx, const Word& w, const PureTensor& t) {
  const auto& algebra = ctx.coalgebra().dual_of();
  if (!algebra) throw Unsupported("duality pairing needs F built as the dual of an algebra");
  if (w.degree() != t.size())
    throw InvalidArgument("pairing rank mismatch: word of degree " + std::to_string(w.degree()) + " against rank " +
                          std::to_string(t.size()));
  Scalar out = 1;
  for (std::size_t k = 0; k < t.size(); ++k) out *= t[k].coeff(w.letters[k]);
  return out;
}

DualityReport verify_duality(const TensorContext& ctx, std::size_t max_degree) {
  const auto& algebra = ctx.coalgebra().dual_of();
  if (!algebra) throw Unsupported("duality check needs F built as the dual of an algebra");
  DualityReport report;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::size_t count = ctx.words_in_degree(n);
    auto basis_tensor = [&](std::size_t index) {
      PureTensor t;
      for (auto letter : ctx.word_at(n, index).letters) t.push_back(AlgebraElement::single(letter));
      return t;
    };
    for (std::size_t wi = 0; wi < count; ++wi) {
      const Word w = ctx.word_at(n, wi);
      const auto dw = coproduct(ctx, w);
      for (std::size_t a = 0; a < count; ++a) {
        const auto t1 = basis_tensor(a);
        for (std::size_t b = 0; b < count; ++b) {
          const auto t2 = basis_tensor(b);
          Scalar lhs = 0;
          for (const auto& [legs, c] : dw) lhs += c * duality_pairing(ctx, legs.first, t1) * duality_pairing(ctx, legs.second, t2);
          PureTensor prod;
          for (std::size_t k = 0; k < n; ++k) prod.push_back(algebra->multiply(t1[k], t2[k]));
          Scalar rhs = duality_pairing(ctx, w, prod);
          ++report.checked;
          if (lhs != rhs && !report.witness) report.witness = "w = " + ctx.format(w);
        }
      }
    }
  }
  return report;
}

}  // namespace hopfreal
