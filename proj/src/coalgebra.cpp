#include "hopfreal/coalgebra.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hopfreal/errors.hpp"

namespace hopfreal {

BasisId BasisId::plain(std::size_t index, std::size_t block) {
  BasisId id;
  id.block_ = static_cast<std::uint32_t>(block);
  id.kind_ = static_cast<std::uint32_t>(BasisKind::plain);
  id.i_ = static_cast<std::uint32_t>(index);
  return id;
}

BasisId BasisId::triangular(std::size_t block, std::size_t i, std::size_t j) {
  if (j < 1 || j > i) {
    throw InvalidArgument("triangular basis id needs 1 <= j <= i, got (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  }
  BasisId id;
  id.block_ = static_cast<std::uint32_t>(block);
  id.kind_ = static_cast<std::uint32_t>(BasisKind::triangular);
  id.i_ = static_cast<std::uint32_t>(i);
  id.j_ = static_cast<std::uint32_t>(j);
  return id;
}

BasisId BasisId::with_block(std::size_t block) const {
  BasisId id = *this;
  id.block_ = static_cast<std::uint32_t>(block);
  return id;
}

std::string to_string(const BasisId& id) {
  std::string prefix = id.block() == 0 ? "" : "#" + std::to_string(id.block()) + ":";
  if (id.is_triangular()) return prefix + "l(" + std::to_string(id.i()) + "," + std::to_string(id.j()) + ")";
  return prefix + "b" + std::to_string(id.index());
}

// ----------------------------------------------------------------- algebras

AlgebraElement AlgebraPresentation::product(std::size_t l, std::size_t m) const {
  auto it = products.find({l, m});
  return it == products.end() ? AlgebraElement{} : it->second;
}

AlgebraElement AlgebraPresentation::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [l, x] : a)
    for (const auto& [m, y] : b) out += (x * y) * product(l, m);
  return out;
}

std::vector<std::string> AlgebraPresentation::violations() const {
  std::vector<std::string> out;
  const std::size_t n = dim();
  for (const auto& [key, value] : products) {
    if (key.first >= n || key.second >= n) {
      out.push_back("product key out of range");
      continue;
    }
    for (const auto& [i, c] : value)
      if (i >= n) out.push_back("product of " + names[key.first] + " and " + names[key.second] + " leaves the basis");
  }
  for (const auto& [i, c] : unit)
    if (i >= n) out.push_back("unit coordinate out of range");
  if (!out.empty()) return out;

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        auto left = multiply(product(a, b), AlgebraElement::single(c));
        auto right = multiply(AlgebraElement::single(a), product(b, c));
        if (!(left == right))
          out.push_back("associativity fails on (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    auto e = AlgebraElement::single(a);
    if (!(multiply(unit, e) == e)) out.push_back("left unit law fails on " + names[a]);
    if (!(multiply(e, unit) == e)) out.push_back("right unit law fails on " + names[a]);
  }
  return out;
}

AlgebraPresentation ground_field() {
  AlgebraPresentation a;
  a.names = {"1"};
  a.products[{0, 0}] = AlgebraElement::single(0);
  a.unit = AlgebraElement::single(0);
  return a;
}

AlgebraPresentation truncated_polynomial_algebra(std::size_t k) {
  if (k == 0) throw InvalidArgument("truncated_polynomial_algebra needs k >= 1");
  AlgebraPresentation a;
  for (std::size_t p = 0; p < k; ++p) a.names.push_back(p == 0 ? "1" : p == 1 ? "t" : "t^" + std::to_string(p));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; p + q < k; ++q) a.products[{p, q}] = AlgebraElement::single(p + q);
  a.unit = AlgebraElement::single(0);
  return a;
}

AlgebraPresentation upper_triangular_algebra(std::size_t n) {
  if (n == 0) throw InvalidArgument("upper_triangular_algebra needs n >= 1");
  AlgebraPresentation a;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      pos[{i, j}] = a.names.size();
      a.names.push_back("e(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (const auto& [ij, p] : pos) {
    for (const auto& [mk, q] : pos) {
      // e(i,j) . e(m,k) = [i == k] e(m,j)
      if (ij.first == mk.second) a.products[{p, q}] = AlgebraElement::single(pos.at({mk.first, ij.second}));
    }
  }
  for (std::size_t i = 1; i <= n; ++i) a.unit.add(pos.at({i, i}), 1);
  return a;
}

// ---------------------------------------------------------------- coalgebra

Coalgebra::Coalgebra(std::vector<BasisId> basis, std::vector<std::string> labels,
                     std::vector<std::vector<CoproductTerm>> delta, std::vector<Scalar> epsilon)
    : basis_(std::move(basis)), labels_(std::move(labels)), delta_(std::move(delta)), epsilon_(std::move(epsilon)) {
  const std::size_t n = basis_.size();
  if (labels_.size() != n || delta_.size() != n || epsilon_.size() != n)
    throw InvalidArgument("coalgebra data has inconsistent sizes");
  for (std::size_t k = 1; k < n; ++k)
    if (!(basis_[k - 1] < basis_[k])) throw InvalidArgument("coalgebra basis must be strictly increasing");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw InvalidArgument("duplicate basis label '" + l + "'");
  for (const auto& terms : delta_)
    for (const auto& t : terms)
      if (t.left >= n || t.right >= n) throw InvalidArgument("coproduct term references a missing basis element");
  for (std::size_t k = 0; k < n; ++k) index_.emplace(basis_[k], k);
}

std::optional<std::size_t> Coalgebra::find(const BasisId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Coalgebra::index_of(const BasisId& id) const {
  auto k = find(id);
  if (!k) throw InvalidArgument("basis id " + to_string(id) + " not in coalgebra");
  return *k;
}

std::optional<std::size_t> Coalgebra::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

LinComb<std::pair<std::size_t, std::size_t>> Coalgebra::coproduct(std::size_t k) const {
  LinComb<std::pair<std::size_t, std::size_t>> out;
  for (const auto& t : delta_.at(k)) out.add({t.left, t.right}, t.coeff);
  return out;
}

LinComb<std::pair<BasisId, BasisId>> Coalgebra::coproduct(const Vect& v) const {
  LinComb<std::pair<BasisId, BasisId>> out;
  for (const auto& [id, c] : v)
    for (const auto& t : delta_.at(index_of(id))) out.add({basis_[t.left], basis_[t.right]}, c * t.coeff);
  return out;
}

Scalar Coalgebra::counit(const Vect& v) const {
  Scalar out = 0;
  for (const auto& [id, c] : v) out += c * epsilon_.at(index_of(id));
  return out;
}

std::size_t Coalgebra::block_count() const {
  std::size_t blocks = 0;
  for (const auto& id : basis_) blocks = std::max(blocks, id.block() + 1);
  return blocks;
}

bool Coalgebra::is_cotriangular() const {
  if (basis_.empty()) return false;
  std::map<std::size_t, std::size_t> size_of_block;
  for (const auto& id : basis_) {
    if (!id.is_triangular()) return false;
    size_of_block[id.block()] = std::max(size_of_block[id.block()], id.i());
  }
  std::size_t expected_dim = 0;
  for (const auto& [block, n] : size_of_block) expected_dim += n * (n + 1) / 2;
  if (expected_dim != dim()) return false;
  for (std::size_t k = 0; k < dim(); ++k) {
    const auto& id = basis_[k];
    if (epsilon_[k] != (id.i() == id.j() ? 1 : 0)) return false;
    LinComb<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t m = id.j(); m <= id.i(); ++m) {
      auto left = find(BasisId::triangular(id.block(), m, id.j()));
      auto right = find(BasisId::triangular(id.block(), id.i(), m));
      if (!left || !right) return false;
      expected.add({*left, *right}, 1);
    }
    if (!(coproduct(k) == expected)) return false;
  }
  return true;
}

std::string Coalgebra::format(const Vect& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [id, c] : v) {
    std::string coeff;
    if (c == 1) {
      coeff = out.empty() ? "" : " + ";
    } else if (c == -1) {
      coeff = out.empty() ? "-" : " - ";
    } else if (c < 0) {
      coeff = (out.empty() ? "-" : " - ") + to_string(Scalar(-c)) + "*";
    } else {
      coeff = (out.empty() ? "" : " + ") + to_string(c) + "*";
    }
    auto k = find(id);
    out += coeff + (k ? labels_[*k] : to_string(id));
  }
  return out;
}

std::string dual_label(const std::string& name) {
  if (name.size() > 1 && name[0] == 'e' && name[1] == '(') return "f" + name.substr(1);
  return "f_" + name;
}

Coalgebra dual_coalgebra(const AlgebraPresentation& algebra) {
  auto problems = algebra.violations();
  if (!problems.empty()) throw InvalidAlgebra("invalid algebra: " + problems.front());
  const std::size_t n = algebra.dim();
  std::vector<BasisId> basis;
  std::vector<std::string> labels;
  std::vector<std::vector<CoproductTerm>> delta(n);
  std::vector<Scalar> epsilon(n);
  for (std::size_t k = 0; k < n; ++k) {
    basis.push_back(BasisId::plain(k));
    labels.push_back(dual_label(algebra.names[k]));
    epsilon[k] = algebra.unit.coeff(k);
  }
  for (const auto& [lm, value] : algebra.products)
    for (const auto& [i, c] : value) delta[i].push_back({lm.first, lm.second, c});
  Coalgebra out(std::move(basis), std::move(labels), std::move(delta), std::move(epsilon));
  out.set_dual_of(algebra);
  return out;
}

Coalgebra triangular_coalgebra(std::size_t n, std::size_t block) {
  if (n == 0) throw InvalidArgument("triangular_coalgebra needs n >= 1");
  std::vector<BasisId> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      basis.push_back(BasisId::triangular(block, i, j));
      labels.push_back("l(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  auto pos = [](std::size_t i, std::size_t j) { return i * (i - 1) / 2 + (j - 1); };
  std::vector<std::vector<CoproductTerm>> delta(basis.size());
  std::vector<Scalar> epsilon(basis.size());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      for (std::size_t k = j; k <= i; ++k) delta[pos(i, j)].push_back({pos(k, j), pos(i, k), 1});
      epsilon[pos(i, j)] = i == j ? 1 : 0;
    }
  }
  return Coalgebra(std::move(basis), std::move(labels), std::move(delta), std::move(epsilon));
}

Coalgebra direct_sum(const std::vector<Coalgebra>& parts) {
  if (parts.empty()) throw InvalidArgument("direct_sum of an empty list");
  if (parts.size() == 1) return parts.front();
  std::vector<BasisId> basis;
  std::vector<std::string> labels;
  std::vector<std::vector<CoproductTerm>> delta;
  std::vector<Scalar> epsilon;
  std::size_t block_offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    const std::size_t offset = basis.size();
    for (std::size_t k = 0; k < part.dim(); ++k) {
      basis.push_back(part.id(k).with_block(part.id(k).block() + block_offset));
      labels.push_back(std::to_string(p) + "." + part.label(k));
      std::vector<CoproductTerm> terms;
      for (const auto& t : part.delta(k)) terms.push_back({t.left + offset, t.right + offset, t.coeff});
      delta.push_back(std::move(terms));
      epsilon.push_back(part.epsilon(k));
    }
    block_offset += part.block_count();
  }
  return Coalgebra(std::move(basis), std::move(labels), std::move(delta), std::move(epsilon));
}

// ------------------------------------------------------------- verification

namespace {

using Triple = std::array<std::size_t, 3>;

LinComb<Triple> delta_then_left(const Coalgebra& c, std::size_t k) {
  LinComb<Triple> out;  // (Delta (x) id) Delta
  for (const auto& t : c.delta(k))
    for (const auto& u : c.delta(t.left)) out.add({u.left, u.right, t.right}, t.coeff * u.coeff);
  return out;
}

LinComb<Triple> delta_then_right(const Coalgebra& c, std::size_t k) {
  LinComb<Triple> out;  // (id (x) Delta) Delta
  for (const auto& t : c.delta(k))
    for (const auto& u : c.delta(t.right)) out.add({t.left, u.left, u.right}, t.coeff * u.coeff);
  return out;
}

}  // namespace

bool CoalgebraReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CoalgebraCheck& c) { return c.ok(); });
}

std::optional<CoalgebraCheck> CoalgebraReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok()) return c;
  return std::nullopt;
}

CoalgebraReport verify_coalgebra(const Coalgebra& c) {
  CoalgebraReport report;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    CoalgebraCheck check{k, true, true, true};
    check.coassociative = delta_then_left(c, k) == delta_then_right(c, k);
    LinComb<std::size_t> left;
    LinComb<std::size_t> right;
    for (const auto& t : c.delta(k)) {
      left.add(t.right, t.coeff * c.epsilon(t.left));
      right.add(t.left, t.coeff * c.epsilon(t.right));
    }
    auto self = LinComb<std::size_t>::single(k);
    check.counit_left = left == self;
    check.counit_right = right == self;
    report.checks.push_back(check);
  }
  return report;
}

std::vector<BasisId> grouplikes(const Coalgebra& c) {
  std::vector<BasisId> out;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    if (c.epsilon(k) != 1) continue;
    if (c.coproduct(k) == LinComb<std::pair<std::size_t, std::size_t>>::single({k, k})) out.push_back(c.id(k));
  }
  return out;
}

}  // namespace hopfreal
