#pragma once

// Finite-dimensional coalgebras given by structure constants.
//
// All coalgebras here are finite-dimensional, so the finiteness and
// regularity conditions needed by the lifting and antipode constructions
// hold automatically and are not modelled separately.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfreal/exactlin.hpp"

namespace hopfreal {

enum class BasisKind : std::uint8_t { plain = 0, triangular = 1 };

/// Basis element identifier. Triangular ids name l_i^j (j <= i) inside a
/// block of a cotriangular coalgebra; plain ids are indexed.
class BasisId {
 public:
  static BasisId plain(std::size_t index, std::size_t block = 0);
  /// Throws InvalidArgument unless 1 <= j <= i.
  static BasisId triangular(std::size_t block, std::size_t i, std::size_t j);

  BasisKind kind() const { return static_cast<BasisKind>(kind_); }
  std::size_t block() const { return block_; }
  std::size_t index() const { return i_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  bool is_triangular() const { return kind() == BasisKind::triangular; }
  bool is_diagonal() const { return is_triangular() && i_ == j_; }
  BasisId with_block(std::size_t block) const;

  // Order: block, then kind, then (i, j) lexicographically.
  friend auto operator<=>(const BasisId&, const BasisId&) = default;

 private:
  std::uint32_t block_ = 0;
  std::uint32_t kind_ = 0;
  std::uint32_t i_ = 0;
  std::uint32_t j_ = 0;
};

std::string to_string(const BasisId& id);

using Vect = LinComb<BasisId>;
/// Coordinates over an algebra basis, keyed by basis position.
using AlgebraElement = LinComb<std::size_t>;

/// Associative unital algebra by structure constants e^l . e^m = sum_i c_i e^i.
struct AlgebraPresentation {
  std::vector<std::string> names;
  std::map<std::pair<std::size_t, std::size_t>, AlgebraElement> products;
  AlgebraElement unit;

  std::size_t dim() const { return names.size(); }
  AlgebraElement product(std::size_t l, std::size_t m) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  /// Human-readable list of violated axioms; empty when the presentation is valid.
  std::vector<std::string> violations() const;
};

/// The ground field: one basis element "1" with 1 . 1 = 1.
AlgebraPresentation ground_field();
/// C[t]/(t^k) with basis 1, t, ..., t^(k-1).
AlgebraPresentation truncated_polynomial_algebra(std::size_t k);
/// Upper-triangular n x n matrices. Basis e(i,j), 1 <= j <= i <= n, is the
/// matrix unit with row j and column i; e(i,j) . e(m,k) = [i == k] e(m,j).
AlgebraPresentation upper_triangular_algebra(std::size_t n);

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};

/// Coalgebra on a sorted list of basis ids. Delta and epsilon are stored by
/// basis position.
class Coalgebra {
 public:
  Coalgebra() = default;
  /// `basis` must be strictly increasing; `labels` unique. Throws InvalidArgument.
  Coalgebra(std::vector<BasisId> basis, std::vector<std::string> labels,
            std::vector<std::vector<CoproductTerm>> delta, std::vector<Scalar> epsilon);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisId>& basis() const { return basis_; }
  const BasisId& id(std::size_t k) const { return basis_.at(k); }
  std::optional<std::size_t> find(const BasisId& id) const;
  std::size_t index_of(const BasisId& id) const;
  const std::string& label(std::size_t k) const { return labels_.at(k); }
  std::optional<std::size_t> find_label(const std::string& label) const;

  const std::vector<CoproductTerm>& delta(std::size_t k) const { return delta_.at(k); }
  const Scalar& epsilon(std::size_t k) const { return epsilon_.at(k); }

  LinComb<std::pair<std::size_t, std::size_t>> coproduct(std::size_t k) const;
  LinComb<std::pair<BasisId, BasisId>> coproduct(const Vect& v) const;
  Scalar counit(const Vect& v) const;

  std::size_t block_count() const;
  /// True when every basis id is triangular and every block is exactly the
  /// standard triangular coalgebra on its ids.
  bool is_cotriangular() const;

  /// Present when the coalgebra was built as the dual of an algebra; basis
  /// position k is then dual to algebra basis element k.
  const std::optional<AlgebraPresentation>& dual_of() const { return dual_of_; }
  void set_dual_of(AlgebraPresentation algebra) { dual_of_ = std::move(algebra); }

  std::string format(const Vect& v) const;

 private:
  std::vector<BasisId> basis_;
  std::vector<std::string> labels_;
  std::vector<std::vector<CoproductTerm>> delta_;
  std::vector<Scalar> epsilon_;
  std::map<BasisId, std::size_t> index_;
  std::optional<AlgebraPresentation> dual_of_;
};

/// Label of the dual basis element to algebra basis name `name`: "e(i,j)"
/// becomes "f(i,j)", anything else gets an "f_" prefix.
std::string dual_label(const std::string& name);

/// Dual coalgebra: Delta f_i = sum_{l,m} c_i^{l,m} f_l (x) f_m, eps(f_i) = unit_i.
/// Throws InvalidAlgebra if the presentation violates associativity or unit laws.
Coalgebra dual_coalgebra(const AlgebraPresentation& algebra);

/// L_n^+: basis l(i,j), Delta l(i,j) = sum_{j<=k<=i} l(k,j) (x) l(i,k), eps = [i == j].
Coalgebra triangular_coalgebra(std::size_t n, std::size_t block = 0);

/// Blockwise direct sum; blocks of the summands are renumbered consecutively.
Coalgebra direct_sum(const std::vector<Coalgebra>& parts);

struct CoalgebraCheck {
  std::size_t index;
  bool coassociative;
  bool counit_left;
  bool counit_right;
  bool ok() const { return coassociative && counit_left && counit_right; }
};

struct CoalgebraReport {
  std::vector<CoalgebraCheck> checks;
  bool passed() const;
  std::optional<CoalgebraCheck> first_failure() const;
};

CoalgebraReport verify_coalgebra(const Coalgebra& c);

/// Basis elements b with Delta b = b (x) b and eps(b) = 1, in basis order.
std::vector<BasisId> grouplikes(const Coalgebra& c);

}  // namespace hopfreal
