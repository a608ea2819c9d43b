#pragma once

// Antipodes for realizations: operators Y(l) on T(F)_{<=N} with
//   sum X(l') o Y(l'') = eps(l) id   and   sum Y(l') o X(l'') = eps(l) id
// over Delta(l) = sum l' (x) l''. For cotriangular L these are the systems
//   sum_k X(l(k,j)) o Y(i,k) = [i == j] id,   sum_k Y(k,j) o X(l(i,k)) = [i == j] id,
// solved by back-substitution. S_1 picks a word with pi(S_1(l)) = Y(l); S
// extends it to T(L) as an anti-homomorphism, and the closure of the
// relations under S gives the ideal J whose quotient is checked to be Hopf.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfreal/realization.hpp"

namespace hopfreal {

struct AntipodeEntry {
  BasisId id;
  /// Word obtained from the construction itself (back-substitution through
  /// the diagonal inverse words, or the solved combination).
  LPoly expression;
  /// Lowest-degree word with the same image; this is S_1(id).
  LPoly reduced;
  LinOp op;
};

struct AntipodeTable {
  std::string method;
  std::size_t truncation = 0;
  /// Indexed by basis position of L.
  std::vector<AntipodeEntry> entries;
  /// Diagonal inverse words used, as given by the input.
  std::vector<std::pair<BasisId, BasisId>> diag_pairs;
  /// General solver: the solution inside the operator algebra is unique.
  bool unique = true;

  const AntipodeEntry& at(std::size_t position) const { return entries.at(position); }
};

/// Back-substitution on a cotriangular L, decreasing j for fixed i.
/// Throws Unsupported (L not cotriangular), PreconditionError (diagonal
/// inverse words missing) and InternalInconsistency (systems fail).
AntipodeTable antipode_triangular(const Realization& r);

/// Both antipode systems for the given operators; the first failing
/// equation, or nullopt.
std::optional<std::string> antipode_system_defect(const Realization& r, const std::vector<LinOp>& y);

struct YCoproductReport {
  bool passed = true;
  std::size_t bound = 0;
  std::size_t checked = 0;
  std::string witness;
};

/// Y(l)(w1 w2) = sum Y(l'')(w1) Y(l')(w2) for every generator and every
/// ordered pair of generators (composites Y(a b) = Y(b) o Y(a)).
YCoproductReport verify_y_coproduct(const Realization& r, const AntipodeTable& table, std::size_t bound);

struct AntihomResult {
  LPoly value;
  bool truncated = false;
};

/// S(l1 ... ln) = S_1(ln) ... S_1(l1); terms above `cap` are dropped and flagged.
AntihomResult extend_antihom(const Coalgebra& l, const AntipodeTable& table, const LPoly& w, std::size_t cap);

struct ClosureStage {
  /// Echelon basis of R_n inside T(L)_{<=d}.
  std::vector<LPoly> basis;
  std::size_t ideal_dimension = 0;
  /// Delta(R_n) lies in I(R_{n+1}) (x) T + T (x) I(R_{n+1}).
  bool coideal_defect_contained = true;
  /// Some S-image left T(L)_{<=d} and was dropped.
  bool truncated = false;
};

struct ClosureResult {
  std::size_t bound = 0;
  std::vector<ClosureStage> stages;
  bool stabilized = false;
  std::optional<std::size_t> stable_at;
  /// k -> dim T(L)_{<=k} / (J intersected with T(L)_{<=k}).
  std::map<std::size_t, std::size_t> quotient_dims;

  const std::vector<LPoly>& generators() const { return stages.back().basis; }
};

/// R_{n+1} = R_n + S(R_n) until S(R_n) lies in the ideal generated by R_n.
ClosureResult closure_iterate(const Realization& r, const AntipodeTable& table, const std::vector<LPoly>& r0,
                              std::size_t max_stages, std::size_t d);

struct HopfReport {
  bool passed = true;
  std::size_t bound = 0;
  std::size_t ideal_bound = 0;
  std::size_t checked = 0;
  bool coideal = true;
  std::string witness;
};

/// sum S(w') w'' and sum w' S(w'') against eps(w) 1 modulo J, for every
/// monomial w of degree <= sample_degree; J is taken at the smallest bound
/// that holds both sides (at least d). Also re-checks that J is a coideal.
HopfReport verify_hopf_quotient(const Realization& r, const AntipodeTable& table, const ClosureResult& closure,
                                std::size_t d, std::size_t sample_degree);

/// Solves both antipode systems for Y(l) in span{pi(m) : deg m <= bound}.
/// nullopt means no solution at this bound.
std::optional<AntipodeTable> antipode_general(const Realization& r, std::size_t bound);

struct PerturbationReport {
  std::size_t trials = 0;
  std::size_t broken = 0;
  bool passed() const { return trials > 0 && broken == trials; }
};

/// Adds a random nonzero element of span{pi(m) : deg m <= degree} to a
/// random Y and checks that some system equation fails, `trials` times.
PerturbationReport perturbation_uniqueness(const Realization& r, const AntipodeTable& table, std::size_t trials,
                                           std::uint32_t seed, std::size_t degree);

}  // namespace hopfreal
