#include "hopfreal/realization.hpp"

#include <algorithm>

#include "hopfreal/errors.hpp"

namespace hopfreal {

// --------------------------------------------------------------- Realization

Realization::Realization(RealizationSpec spec) {
  spec.validate();
  spec_ = std::make_shared<const RealizationSpec>(std::move(spec));
  lifter_ = std::make_shared<const Lifter>(spec_);
  memo_ = std::make_shared<Memo>();
}

const LinOp& Realization::monomial(const LWord& w) const {
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->ops.find(w); it != memo_->ops.end()) return it->second;
  }
  LinOp value;
  if (w.empty()) {
    value = LinOp::identity(ctx());
  } else {
    const LWord prefix(std::vector<std::uint32_t>(w.letters.begin(), w.letters.end() - 1));
    value = monomial(prefix).compose(lifter_->basis_lift(w.letters.back()));
  }
  std::lock_guard lock(memo_->mutex);
  return memo_->ops.emplace(w, std::move(value)).first->second;
}

LinOp Realization::represent(const LPoly& p) const {
  LinOp out = LinOp::zero(ctx());
  for (const auto& [w, c] : p) out += c * monomial(w);
  return out;
}

Realization Realization::with_truncation(std::size_t n) const { return Realization(spec_->with_truncation(n)); }

std::string Realization::format(const LWord& w) const { return format_lpoly(l(), LPoly::single(w)); }

std::string Realization::format(const LPoly& p) const { return format_lpoly(l(), p); }

std::optional<std::size_t> Realization::letter(const std::string& label) const { return l().find_label(label); }

std::string format_lpoly(const Coalgebra& l, const LPoly& p) {
  if (p.is_zero()) return "0";
  auto word = [&](const LWord& w) {
    if (w.empty()) return std::string("1");
    std::string out;
    for (auto letter : w.letters) {
      if (!out.empty()) out += " ";
      out += l.label(letter);
    }
    return out;
  };
  std::string out;
  for (const auto& [w, c] : p) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Scalar mag = abs(c);
    if (w.empty()) out += to_string(mag);
    else out += (mag != 1 ? to_string(mag) + "*" : std::string()) + word(w);
  }
  return out;
}

// ------------------------------------------------------------ monomial space

std::vector<LWord> monomials_of_degree(std::size_t letters, std::size_t degree) {
  std::vector<LWord> out;
  std::size_t count = 1;
  for (std::size_t k = 0; k < degree; ++k) count *= letters;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    LWord w;
    w.letters.assign(degree, 0);
    std::size_t rest = idx;
    for (std::size_t k = degree; k-- > 0;) {
      w.letters[k] = static_cast<std::uint32_t>(rest % letters);
      rest /= letters;
    }
    out.push_back(std::move(w));
  }
  return out;
}

MonomialSpace::MonomialSpace(std::size_t letters, std::size_t min_degree, std::size_t max_degree, DegreeOrder order)
    : min_degree_(min_degree), max_degree_(max_degree) {
  if (min_degree > max_degree) throw InvalidArgument("empty degree range");
  std::vector<std::size_t> degrees;
  for (std::size_t n = min_degree; n <= max_degree; ++n) degrees.push_back(n);
  if (order == DegreeOrder::descending) std::reverse(degrees.begin(), degrees.end());
  for (auto n : degrees)
    for (auto& w : monomials_of_degree(letters, n)) words_.push_back(std::move(w));
  for (std::size_t k = 0; k < words_.size(); ++k) index_.emplace(words_[k], k);
}

std::optional<std::size_t> MonomialSpace::find(const LWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec MonomialSpace::to_vec(const LPoly& p) const {
  std::vector<std::pair<std::size_t, Scalar>> entries;
  for (const auto& [w, c] : p) {
    auto k = find(w);
    if (!k) throw InvalidArgument("monomial of degree " + std::to_string(w.degree()) + " outside the monomial space");
    entries.emplace_back(*k, c);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [k, c] : entries) out.push_back(k, c);
  return out;
}

LPoly MonomialSpace::to_poly(const SparseVec& v) const {
  LPoly out;
  for (const auto& [k, c] : v.entries()) out.add(words_.at(k), c);
  return out;
}

// ----------------------------------------------------------- relation kernel

namespace {

RelationSpace kernel_over(const Realization& r, const MonomialSpace& space, std::size_t d, bool filtered) {
  std::vector<SparseVec> columns;
  columns.reserve(space.size());
  for (const auto& w : space.words()) columns.push_back(r.monomial(w).flatten());
  RelationSpace out;
  out.degree = d;
  out.filtered = filtered;
  out.truncation = r.truncation();
  for (const auto& v : column_kernel(columns)) out.basis.push_back(space.to_poly(v));
  return out;
}

}  // namespace

RelationSpace relation_kernel(const Realization& r, std::size_t d) {
  if (d < 1) throw InvalidArgument("relation degree must be >= 1");
  return kernel_over(r, MonomialSpace(r.l().dim(), d, d), d, false);
}

RelationSpace relation_kernel_filtered(const Realization& r, std::size_t d) {
  if (d < 1) throw InvalidArgument("relation degree must be >= 1");
  return kernel_over(r, MonomialSpace(r.l().dim(), 0, d), d, true);
}

bool span_contains(const MonomialSpace& space, const std::vector<LPoly>& a, const std::vector<LPoly>& b) {
  EchelonBasis basis(space.size());
  for (const auto& p : a) basis.insert(space.to_vec(p));
  return std::all_of(b.begin(), b.end(), [&](const LPoly& p) { return basis.contains(space.to_vec(p)); });
}

bool same_span(const MonomialSpace& space, const std::vector<LPoly>& a, const std::vector<LPoly>& b) {
  return span_contains(space, a, b) && span_contains(space, b, a);
}

RelationCertificate certify_relations(const Realization& r, std::size_t d, bool filtered) {
  return certify_relations(r, r.with_truncation(r.truncation() + 1), d, filtered);
}

RelationCertificate certify_relations(const Realization& r, const Realization& next, std::size_t d, bool filtered) {
  if (next.truncation() != r.truncation() + 1) throw InvalidArgument("certification needs truncations N and N + 1");
  RelationCertificate cert;
  cert.at_n = filtered ? relation_kernel_filtered(r, d) : relation_kernel(r, d);
  cert.at_next = filtered ? relation_kernel_filtered(next, d) : relation_kernel(next, d);
  const MonomialSpace space(r.l().dim(), filtered ? 0 : d, d);
  cert.monotone = span_contains(space, cert.at_n.basis, cert.at_next.basis);
  EchelonBasis stable(space.size());
  for (const auto& p : cert.at_next.basis) stable.insert(space.to_vec(p));
  for (const auto& p : cert.at_n.basis)
    if (!stable.contains(space.to_vec(p))) cert.sensitive.push_back(p);
  return cert;
}

// ------------------------------------------------------------------ splitting

LPair coproduct_l(const Coalgebra& l, const LPoly& p) {
  LPair out;
  for (const auto& [w, c] : p) {
    LPair acc = LPair::single({LWord{}, LWord{}}, c);
    for (auto letter : w.letters) {
      LPair next;
      for (const auto& [legs, a] : acc) {
        for (const auto& t : l.delta(letter)) {
          LWord left = legs.first;
          LWord right = legs.second;
          left.letters.push_back(static_cast<std::uint32_t>(t.left));
          right.letters.push_back(static_cast<std::uint32_t>(t.right));
          next.add({std::move(left), std::move(right)}, a * t.coeff);
        }
      }
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

Scalar counit_l(const Coalgebra& l, const LPoly& p) {
  Scalar out = 0;
  for (const auto& [w, c] : p) {
    Scalar term = c;
    for (auto letter : w.letters) term *= l.epsilon(letter);
    out += term;
  }
  return out;
}

std::optional<std::string> splitting_witness(const Realization& r, const LWord& w, std::size_t bound) {
  if (bound > r.truncation()) throw InvalidArgument("splitting bound exceeds the truncation");
  std::vector<SplitTerm> terms;
  for (const auto& [legs, c] : coproduct_l(r.l(), LPoly::single(w)))
    terms.push_back({c, r.monomial(legs.first), r.monomial(legs.second)});
  return splitting_defect(r.ctx(), r.monomial(w), terms, bound);
}

bool verify_splitting(const Realization& r, const LWord& w, std::size_t bound) {
  return !splitting_witness(r, w, bound).has_value();
}

Scalar counit_check(const Realization& r, const LPoly& w) { return r.represent(w).block(0).at(0, 0); }

std::size_t max_degree(const LPoly& p) {
  std::size_t out = 0;
  for (const auto& [w, c] : p) out = std::max(out, w.degree());
  return out;
}

// ---------------------------------------------------------------- ideal span

IdealSpan::IdealSpan(std::size_t letters, std::size_t bound, const std::vector<LPoly>& generators)
    : bound_(bound), space_(letters, 0, bound, DegreeOrder::descending), echelon_(space_.size()) {
  for (std::size_t n = 0; n <= bound; ++n) by_degree_.push_back(monomials_of_degree(letters, n));
  for (const auto& g : generators) add(g);
}

void IdealSpan::add(const LPoly& g) {
  if (g.is_zero()) return;
  const std::size_t dg = max_degree(g);
  if (dg > bound_) return;
  const std::size_t room = bound_ - dg;
  for (std::size_t da = 0; da <= room; ++da) {
    for (const auto& a : by_degree_[da]) {
      for (std::size_t db = 0; da + db <= room; ++db) {
        for (const auto& b : by_degree_[db]) {
          LPoly product;
          for (const auto& [w, c] : g) product.add(a * w * b, c);
          echelon_.insert(space_.to_vec(product));
        }
      }
    }
  }
}

std::vector<LPoly> minimal_generators(std::size_t letters, std::size_t bound, const std::vector<LPoly>& generators) {
  std::vector<LPoly> sorted;
  for (const auto& g : generators)
    if (!g.is_zero() && max_degree(g) <= bound) sorted.push_back(g);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const LPoly& a, const LPoly& b) { return max_degree(a) < max_degree(b); });
  IdealSpan span(letters, bound, {});
  std::vector<LPoly> out;
  for (const auto& g : sorted) {
    if (span.contains(g)) continue;
    span.add(g);
    out.push_back(g);
  }
  return out;
}

bool IdealSpan::contains(const LPoly& p) const {
  if (max_degree(p) > bound_) throw InvalidArgument("element beyond the ideal's degree bound");
  return echelon_.contains(space_.to_vec(p));
}

LPoly IdealSpan::normal_form(const LPoly& p) const {
  if (max_degree(p) > bound_) throw InvalidArgument("element beyond the ideal's degree bound");
  return space_.to_poly(echelon_.normal_form(space_.to_vec(p)));
}

std::size_t IdealSpan::dimension_up_to(std::size_t k) const {
  std::size_t out = 0;
  for (const auto& [pivot, row] : echelon_.rows())
    if (space_.word(pivot).degree() <= k) ++out;
  return out;
}

std::vector<LPoly> IdealSpan::basis() const {
  std::vector<LPoly> out;
  for (const auto& [pivot, row] : echelon_.rows()) out.push_back(space_.to_poly(row));
  return out;
}

// ------------------------------------------------------------------- coideal

CoidealReport verify_coideal(const Coalgebra& l, const std::vector<LPoly>& relations, std::size_t d) {
  return verify_coideal_in(l, relations, IdealSpan(l.dim(), d, relations));
}

CoidealReport verify_coideal_in(const Coalgebra& l, const std::vector<LPoly>& relations, const IdealSpan& ideal) {
  CoidealReport report;
  const std::size_t d = ideal.bound();
  report.bound = d;
  for (const auto& r : relations) {
    if (r.is_zero() || max_degree(r) > d) continue;
    ++report.checked;
    if (counit_l(l, r) != 0) {
      report.passed = false;
      report.witness = r;
      report.reason = "counit does not vanish";
      return report;
    }
    LPair projected;
    for (const auto& [legs, c] : coproduct_l(l, r)) {
      const LPoly left = ideal.normal_form(LPoly::single(legs.first));
      if (left.is_zero()) continue;
      const LPoly right = ideal.normal_form(LPoly::single(legs.second));
      for (const auto& [u, a] : left)
        for (const auto& [v, b] : right) projected.add({u, v}, c * a * b);
    }
    if (!projected.is_zero()) {
      report.passed = false;
      report.witness = r;
      report.reason = "coproduct leaves I (x) T + T (x) I";
      return report;
    }
  }
  return report;
}

CoidealReport verify_coideal(const Realization& r, const RelationSpace& space, std::size_t d) {
  return verify_coideal(r.l(), space.basis, d);
}

}  // namespace hopfreal
