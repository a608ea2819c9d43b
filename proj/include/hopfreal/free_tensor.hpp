#pragma once

// The truncated free tensor bialgebra T(F)_{<=N} over a coalgebra F.
//
// Words are letter sequences over F's basis positions. The coproduct is
// the multiplicative extension of F's coproduct, so a degree-n word maps
// into (degree n) (x) (degree n). Operators of interest are grade
// preserving, which is why cutting at degree N is exact below N.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfreal/coalgebra.hpp"
#include "hopfreal/exactlin.hpp"

namespace hopfreal {

/// Letter sequence; the tag keeps words over F and over L apart.
template <class Tag>
struct BasicWord {
  std::vector<std::uint32_t> letters;

  BasicWord() = default;
  BasicWord(std::initializer_list<std::uint32_t> l) : letters(l) {}
  explicit BasicWord(std::vector<std::uint32_t> l) : letters(std::move(l)) {}

  std::size_t degree() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend BasicWord operator*(const BasicWord& a, const BasicWord& b) {
    BasicWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }
  friend auto operator<=>(const BasicWord&, const BasicWord&) = default;
};

struct FLetters;
using Word = BasicWord<FLetters>;
using TensorElement = LinComb<Word>;
using TensorPair = LinComb<std::pair<Word, Word>>;

class TensorContext {
 public:
  /// Throws InvalidArgument if max_degree < 1 or F is empty.
  TensorContext(Coalgebra f, std::size_t max_degree);

  const Coalgebra& coalgebra() const { return f_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t letters() const { return f_.dim(); }
  /// Number of words of degree n: dim(F)^n.
  std::size_t words_in_degree(std::size_t n) const;
  /// Position of a word inside its degree, base-dim(F) lexicographic.
  std::size_t word_index(const Word& w) const;
  Word word_at(std::size_t degree, std::size_t index) const;
  TensorContext with_max_degree(std::size_t n) const { return TensorContext(f_, n); }

  std::string format(const Word& w) const;
  std::string format(const TensorElement& t) const;

 private:
  Coalgebra f_;
  std::size_t max_degree_;
};

struct ProductResult {
  TensorElement value;
  bool truncated = false;
};

/// Concatenation product; words past degree N are dropped and flagged.
ProductResult word_product(const TensorContext& ctx, const TensorElement& a, const TensorElement& b);

TensorPair coproduct(const TensorContext& ctx, const TensorElement& w);
TensorPair coproduct(const TensorContext& ctx, const Word& w);
Scalar counit(const TensorContext& ctx, const TensorElement& w);
Scalar counit(const TensorContext& ctx, const Word& w);

/// Delta restricted to degree n as a (dim^2n x dim^n) matrix. Row index of
/// the pair (w', w'') is word_index(w') * dim^n + word_index(w'').
Matrix coproduct_matrix(const TensorContext& ctx, std::size_t degree);

struct BialgebraCheck {
  std::string name;
  bool passed = true;
  std::optional<std::string> witness;
};

struct FreeBialgebraReport {
  std::size_t checked_degree = 0;
  std::vector<BialgebraCheck> checks;
  bool passed() const;
};

/// Exhaustive check over all words of degree <= min(N, 3): multiplicativity
/// of Delta, coassociativity, both counit laws and the (n, n) grading of
/// coproduct legs.
FreeBialgebraReport verify_free_bialgebra(const TensorContext& ctx);

/// A pure tensor e_1 (x) ... (x) e_n of algebra elements.
using PureTensor = std::vector<AlgebraElement>;

/// <f_{i1} ... f_{in}, e_1 (x) ... (x) e_n> = prod_k coordinate_{ik}(e_k).
/// Throws InvalidArgument on rank mismatch, Unsupported when F is not a dual.
Scalar duality_pairing(const TensorContext& ctx, const Word& w, const PureTensor& t);

struct DualityReport {
  std::size_t checked = 0;
  std::optional<std::string> witness;
  bool passed() const { return !witness; }
};

/// Checks <Delta w, t1 (x) t2> = <w, t1 . t2> for every word of degree
/// <= max_degree and every pair of basis tensors t1, t2 of that rank.
DualityReport verify_duality(const TensorContext& ctx, std::size_t max_degree);

}  // namespace hopfreal
