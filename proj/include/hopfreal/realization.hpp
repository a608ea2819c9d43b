#pragma once

// The representation pi : T(L) -> End(T(F)_{<=N}), pi(l1 ... ln) =
// X(l1) o ... o X(ln), its kernel (the relations of U_x), and degree-bounded
// ideal and coideal arithmetic in T(L).

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfreal/lifting.hpp"

namespace hopfreal {

using LPair = LinComb<std::pair<LWord, LWord>>;

class Realization {
 public:
  /// Validates the spec (throws ValidationError).
  explicit Realization(RealizationSpec spec);

  const RealizationSpec& spec() const { return *spec_; }
  const Coalgebra& l() const { return spec_->l_coalg; }
  const TensorContext& ctx() const { return spec_->f_ctx; }
  std::size_t truncation() const { return spec_->f_ctx.max_degree(); }
  const Lifter& lifter() const { return *lifter_; }

  /// pi(w), memoized by prefix.
  const LinOp& monomial(const LWord& w) const;
  LinOp represent(const LPoly& p) const;
  Realization with_truncation(std::size_t n) const;

  std::string format(const LWord& w) const;
  std::string format(const LPoly& p) const;
  /// Parses a generator label ("l(2,1)") into a basis position.
  std::optional<std::size_t> letter(const std::string& label) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<LWord, LinOp> ops;
  };

  std::shared_ptr<const RealizationSpec> spec_;
  std::shared_ptr<const Lifter> lifter_;
  std::shared_ptr<Memo> memo_;
};

std::string format_lpoly(const Coalgebra& l, const LPoly& p);

enum class DegreeOrder { ascending, descending };

/// Monomials of T(L) with min_degree <= degree <= max_degree, grouped by
/// degree in the given order, lexicographic (by BasisId) within a degree.
class MonomialSpace {
 public:
  MonomialSpace(std::size_t letters, std::size_t min_degree, std::size_t max_degree,
                DegreeOrder order = DegreeOrder::ascending);

  std::size_t size() const { return words_.size(); }
  std::size_t min_degree() const { return min_degree_; }
  std::size_t max_degree() const { return max_degree_; }
  const LWord& word(std::size_t k) const { return words_.at(k); }
  const std::vector<LWord>& words() const { return words_; }
  std::optional<std::size_t> find(const LWord& w) const;
  /// Throws InvalidArgument for monomials outside the space.
  SparseVec to_vec(const LPoly& p) const;
  LPoly to_poly(const SparseVec& v) const;

 private:
  std::size_t min_degree_;
  std::size_t max_degree_;
  std::vector<LWord> words_;
  std::map<LWord, std::size_t> index_;
};

/// Lexicographic monomials of exactly `degree` letters.
std::vector<LWord> monomials_of_degree(std::size_t letters, std::size_t degree);

struct RelationSpace {
  /// Homogeneous degree, or the degree bound of a filtered space.
  std::size_t degree = 0;
  bool filtered = false;
  /// Canonical kernel basis (one vector per free column of the pi-matrix).
  std::vector<LPoly> basis;
  /// Truncation N of T(F) the kernel was computed at.
  std::size_t truncation = 0;

  std::size_t dimension() const { return basis.size(); }
};

/// ker pi restricted to the degree-d homogeneous part of T(L).
RelationSpace relation_kernel(const Realization& r, std::size_t d);
/// ker pi restricted to T(L)_{<=d}; contains inhomogeneous relations such
/// as l - 1 for a grouplike l realized as the identity.
RelationSpace relation_kernel_filtered(const Realization& r, std::size_t d);

/// True when span(a) contains span(b), all inside `space`.
bool span_contains(const MonomialSpace& space, const std::vector<LPoly>& a, const std::vector<LPoly>& b);
bool same_span(const MonomialSpace& space, const std::vector<LPoly>& a, const std::vector<LPoly>& b);

struct RelationCertificate {
  RelationSpace at_n;
  RelationSpace at_next;
  /// at_next is contained in at_n (more constraints only shrink the kernel).
  bool monotone = true;
  /// Kernel elements at N that stop being relations at N + 1.
  std::vector<LPoly> sensitive;
  bool stable() const { return monotone && sensitive.empty(); }
};

/// Kernels at N and N + 1; the stable relations are at_next.
RelationCertificate certify_relations(const Realization& r, std::size_t d, bool filtered = false);
/// Same, with the truncation N + 1 realization supplied by the caller.
RelationCertificate certify_relations(const Realization& r, const Realization& next, std::size_t d, bool filtered);

/// pi(w)(w1 w2) = sum pi(w')(w1) pi(w'')(w2) for deg w1 + deg w2 <= bound.
bool verify_splitting(const Realization& r, const LWord& w, std::size_t bound);
std::optional<std::string> splitting_witness(const Realization& r, const LWord& w, std::size_t bound);

/// Letterwise coproduct and multiplicative counit on T(L).
LPair coproduct_l(const Coalgebra& l, const LPoly& p);
Scalar counit_l(const Coalgebra& l, const LPoly& p);

/// pi(w) applied to the unit word, read off as a scalar.
Scalar counit_check(const Realization& r, const LPoly& w);

/// Highest degree of a monomial in p (0 for constants and zero).
std::size_t max_degree(const LPoly& p);

/// span{a r b : r a generator, a, b monomials, deg a + deg r + deg b <= bound}
/// inside T(L)_{<=bound}. Columns run from high to low degree, so the rows
/// whose pivot has degree <= k span the part of the ideal inside T(L)_{<=k}.
class IdealSpan {
 public:
  IdealSpan(std::size_t letters, std::size_t bound, const std::vector<LPoly>& generators);

  /// Adds a generator; generators of degree above the bound are ignored.
  void add(const LPoly& g);

  std::size_t bound() const { return bound_; }
  const MonomialSpace& space() const { return space_; }
  bool contains(const LPoly& p) const;
  LPoly normal_form(const LPoly& p) const;
  std::size_t dimension() const { return echelon_.dimension(); }
  /// dim (ideal intersected with T(L)_{<=k}).
  std::size_t dimension_up_to(std::size_t k) const;
  /// Echelon basis of the span, high-degree pivots first.
  std::vector<LPoly> basis() const;

 private:
  std::size_t bound_;
  MonomialSpace space_;
  EchelonBasis echelon_;
  std::vector<std::vector<LWord>> by_degree_;
};

/// Greedy subset, lowest degree first, generating the same ideal up to `bound`.
std::vector<LPoly> minimal_generators(std::size_t letters, std::size_t bound, const std::vector<LPoly>& generators);

struct CoidealReport {
  bool passed = true;
  std::size_t bound = 0;
  std::size_t checked = 0;
  std::optional<LPoly> witness;
  std::string reason;
};

/// For every relation r (of degree <= d): eps(r) = 0 and
/// Delta(r) in I (x) T + T (x) I, where I is the ideal generated by all of
/// `relations` truncated at degree d. Membership is tested by projecting
/// both legs onto a complement of I.
CoidealReport verify_coideal(const Coalgebra& l, const std::vector<LPoly>& relations, std::size_t d);
CoidealReport verify_coideal(const Realization& r, const RelationSpace& space, std::size_t d);
/// Same test against a given ideal span (relations above its bound are skipped).
CoidealReport verify_coideal_in(const Coalgebra& l, const std::vector<LPoly>& relations, const IdealSpan& ideal);

}  // namespace hopfreal
