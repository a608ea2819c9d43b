#pragma once

// Lifting x : L -> right-invariant operators on F to grade-preserving
// operators X(l) on T(F)_{<=N}.
//
// X(l) is the unique family with
//   X(l)(1)       = eps_L(l) 1
//   X(l)(f)       = x(l)(f)                       for f in F
//   X(l)(w1 . w2) = sum X(l')(w1) . X(l'')(w2)    over Delta_L(l) = sum l' (x) l''
// On a degree-n word it is  sum x(l_(1))(f_1) (x) ... (x) x(l_(n))(f_n)
// over the iterated coproduct Delta^(n-1)(l).

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfreal/coalgebra.hpp"
#include "hopfreal/free_tensor.hpp"
#include "hopfreal/invariant.hpp"

namespace hopfreal {

struct LLetters;
/// Monomial of T(L); letters are basis positions of L.
using LWord = BasicWord<LLetters>;
/// Element of T(L).
using LPoly = LinComb<LWord>;

struct RealizationSpec {
  Coalgebra l_coalg;
  TensorContext f_ctx;
  /// x(l) for every basis position of L.
  std::vector<RIOp> x_map;
  /// (l, l') pairs of grouplikes with x(l) o x(l') = id on F.
  std::optional<std::vector<std::pair<BasisId, BasisId>>> diag_pairs;

  std::vector<std::string> violations() const;
  /// Throws ValidationError listing every violated invariant.
  void validate() const;
  Matrix x_matrix(std::size_t l) const;
  RealizationSpec with_truncation(std::size_t n) const;
};

/// Delta^(n)(v) in (x)^{n+1} L, keyed by tuples of basis positions. Built by
/// splitting the last factor and cross-checked against splitting the first;
/// throws InternalInconsistency if they differ.
LPoly iterated_coproduct(const Coalgebra& l, const Vect& v, std::size_t n);

/// Memoized lifts of the basis elements of L. Thread-safe.
class Lifter {
 public:
  explicit Lifter(std::shared_ptr<const RealizationSpec> spec);

  const RealizationSpec& spec() const { return *spec_; }
  const TensorContext& ctx() const { return spec_->f_ctx; }
  /// X(b) for basis position b, all degrees <= N.
  const LinOp& basis_lift(std::size_t b) const;
  LinOp lift(const Vect& l) const;
  LinOp lift(const LinComb<std::size_t>& l) const;

 private:
  LinOp compute(std::size_t b) const;

  std::shared_ptr<const RealizationSpec> spec_;
  std::vector<Matrix> x_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<LinOp>> cache_;
};

LinOp lift_operator(const RealizationSpec& spec, const Vect& l);

/// Independent evaluation of X(l) on a word: peel off the first letter and
/// apply the splitting rule recursively. Used as the uniqueness oracle.
TensorElement lift_by_splitting(const RealizationSpec& spec, const Vect& l, const Word& w);
LinOp lift_operator_by_splitting(const RealizationSpec& spec, const Vect& l);

/// One term c * (B (x) C) of a splitting identity A(w1 w2) = sum c B(w1) C(w2).
struct SplitTerm {
  Scalar coeff;
  LinOp left;
  LinOp right;
};

/// Checks A_{p+q} = sum c * kron(B_p, C_q) for all p + q <= bound. Returns
/// the first failing pair (w1, w2), formatted, or nullopt.
std::optional<std::string> splitting_defect(const TensorContext& ctx, const LinOp& a,
                                            const std::vector<SplitTerm>& terms, std::size_t bound);

struct LiftProperty {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct LiftReport {
  std::vector<LiftProperty> properties;
  bool passed() const;
};

/// Unit, agreement with x on F, splitting, grade preservation,
/// right-invariance on T(F), and agreement with the splitting oracle, all
/// exhaustively up to degree N.
LiftReport verify_lift(const Lifter& lifter, const Vect& l);
LiftReport verify_lift(const RealizationSpec& spec, const Vect& l);

}  // namespace hopfreal
