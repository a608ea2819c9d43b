#pragma once

// Dense re-evaluation of the antipode identities, shared by the unit tests
// and the acceptance run.

#include "builders.hpp"

namespace checks {

using namespace hopfreal;

inline oracle::Dense dense_kron(const oracle::Dense& a, const oracle::Dense& b) {
  oracle::Dense out = oracle::zeros(a.size() * b.size(), a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t m = 0; m < b.size(); ++m) out[i * b.size() + k][j * b.size() + m] = a[i][j] * b[k][m];
  return out;
}

// Both antipode systems, evaluated with dense blocks:
//   sum X(l') Y(l'') = eps(l) id = sum Y(l') X(l'').
inline bool systems_hold(const build::Case& c, const AntipodeTable& table) {
  auto rep = build::oracle_of(c);
  const auto& l = c.spec.l_coalg;
  auto id = oracle::identity_blocks(rep.f_dim, rep.truncation);
  for (std::size_t b = 0; b < l.dim(); ++b) {
    auto left = oracle::scaled(id, 0), right = oracle::scaled(id, 0);
    for (const auto& t : l.delta(b)) {
      left = oracle::combine(left, oracle::compose(rep.letters[t.left], oracle::to_blocks(table.at(t.right).op)), t.coeff);
      right = oracle::combine(right, oracle::compose(oracle::to_blocks(table.at(t.left).op), rep.letters[t.right]), t.coeff);
    }
    auto expected = oracle::scaled(id, l.epsilon(b));
    if (left != expected || right != expected) return false;
  }
  return true;
}

// Y(l)(w1 w2) = sum Y(l'')(w1) Y(l')(w2) on every pair of degrees p + q <= N.
inline bool y_coproduct_holds(const build::Case& c, const AntipodeTable& table) {
  const auto& l = c.spec.l_coalg;
  const std::size_t n = c.spec.f_ctx.max_degree();
  for (std::size_t b = 0; b < l.dim(); ++b) {
    auto y = oracle::to_blocks(table.at(b).op);
    for (std::size_t p = 0; p <= n; ++p)
      for (std::size_t q = 0; p + q <= n; ++q) {
        auto sum = oracle::zeros(y[p + q].size(), y[p + q].size());
        for (const auto& t : l.delta(b)) {
          auto yr = oracle::to_blocks(table.at(t.right).op), yl = oracle::to_blocks(table.at(t.left).op);
          sum = oracle::add(sum, dense_kron(yr[p], yl[q]), t.coeff);
        }
        if (sum != y[p + q]) return false;
      }
  }
  return true;
}

}  // namespace checks
