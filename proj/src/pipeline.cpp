#include "hopfreal/pipeline.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "hopfreal/errors.hpp"
#include "hopfreal/hopf.hpp"

namespace hopfreal {

const std::vector<Stage>& all_stages() {
  static const std::vector<Stage> stages = {
      Stage::verify_coalgebras, Stage::verify_free_bialgebra, Stage::verify_lift, Stage::relations,
      Stage::coideal_check,     Stage::antipode,              Stage::closure,     Stage::hopf_check,
  };
  return stages;
}

std::string stage_name(Stage s) {
  switch (s) {
    case Stage::verify_coalgebras: return "verify-coalgebras";
    case Stage::verify_free_bialgebra: return "verify-free-bialgebra";
    case Stage::verify_lift: return "verify-lift";
    case Stage::relations: return "relations";
    case Stage::coideal_check: return "coideal-check";
    case Stage::antipode: return "antipode";
    case Stage::closure: return "closure";
    case Stage::hopf_check: return "hopf-check";
  }
  return "?";
}

std::optional<Stage> parse_stage(const std::string& name) {
  for (auto s : all_stages())
    if (stage_name(s) == name) return s;
  return std::nullopt;
}

std::vector<Stage> parse_stage_list(const std::string& csv) {
  std::set<Stage> chosen;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (item == "all") {
      chosen.insert(all_stages().begin(), all_stages().end());
      continue;
    }
    auto s = parse_stage(item);
    if (!s) throw InvalidArgument("unknown stage '" + item + "'");
    chosen.insert(*s);
  }
  if (chosen.empty()) throw InvalidArgument("no stages selected");
  return {chosen.begin(), chosen.end()};
}

std::string status_name(StageStatus s) {
  switch (s) {
    case StageStatus::passed: return "pass";
    case StageStatus::failed: return "fail";
    case StageStatus::failed_precondition: return "failed-precondition";
    case StageStatus::skipped: return "skipped";
  }
  return "?";
}

bool Report::passed() const {
  // A stage is only skipped after a requested prerequisite failed, which
  // already makes the run fail.
  return std::all_of(sections.begin(), sections.end(), [](const StageSection& s) {
    return s.status == StageStatus::passed || s.status == StageStatus::skipped;
  });
}

int Report::exit_code() const { return passed() ? 0 : 1; }

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out.empty() ? "none" : out;
}

std::vector<std::string> stage_names(const std::vector<Stage>& stages) {
  std::vector<std::string> out;
  for (auto s : stages) out.push_back(stage_name(s));
  return out;
}

std::vector<Stage> not_requested(const std::vector<Stage>& requested) {
  std::vector<Stage> out;
  for (auto s : all_stages())
    if (std::find(requested.begin(), requested.end(), s) == requested.end()) out.push_back(s);
  return out;
}

// A prerequisite that could not be produced: either a requested stage that
// failed (dependent stages are skipped) or a silent computation that hit an
// unmet precondition.
struct Missing {
  Stage stage;
  std::string reason;
};

class Run {
 public:
  Run(const InputDocument& doc, const std::vector<Stage>& requested) : doc_(doc), requested_(requested) {
    p_ = doc.params;
  }

  Report execute() {
    Report report;
    report.l_name = doc_.l_name;
    report.f_name = doc_.f_name;
    report.params = p_;
    report.requested = requested_;
    for (auto s : all_stages()) {
      if (!requested(s)) continue;
      StageSection section{s};
      run_stage(section);
      report.sections.push_back(std::move(section));
      failed_[s] = report.sections.back().status != StageStatus::passed;
    }
    report.yaml = emit(report);
    return report;
  }

 private:
  bool requested(Stage s) const { return std::find(requested_.begin(), requested_.end(), s) != requested_.end(); }

  std::string tag_n() const { return "[N=" + std::to_string(p_.truncation) + "]"; }
  std::string tag_nd() const {
    return "[N=" + std::to_string(p_.truncation) + ", d=" + std::to_string(p_.max_degree) + "]";
  }
  std::string tag_d() const { return "[d=" + std::to_string(p_.max_degree) + "]"; }

  void run_stage(StageSection& section) {
    auto missing = [&](const Missing& m) {
      if (requested(m.stage) && failed_.count(m.stage) && failed_[m.stage]) {
        section.status = StageStatus::skipped;
        section.lines.push_back("skipped: prerequisite " + stage_name(m.stage) + " failed");
      } else {
        section.status = StageStatus::failed_precondition;
        section.lines.push_back("precondition unmet (" + stage_name(m.stage) + "): " + m.reason);
      }
    };
    switch (section.stage) {
      case Stage::verify_coalgebras: stage_coalgebras(section); break;
      case Stage::verify_free_bialgebra: stage_free_bialgebra(section); break;
      case Stage::verify_lift: stage_lift(section); break;
      case Stage::relations:
        if (auto m = need_relations(); m && m->stage != Stage::relations) return missing(*m);
        stage_relations(section);
        break;
      case Stage::coideal_check:
        if (auto m = need_relations()) return missing(*m);
        stage_coideal(section);
        break;
      case Stage::antipode:
        if (auto m = need_lift()) return missing(*m);
        stage_antipode(section);
        break;
      case Stage::closure:
        if (auto m = need_relations()) return missing(*m);
        if (auto m = need_antipode()) return missing(*m);
        stage_closure(section);
        break;
      case Stage::hopf_check:
        if (auto m = need_relations()) return missing(*m);
        if (auto m = need_antipode()) return missing(*m);
        if (auto m = need_closure()) return missing(*m);
        stage_hopf(section);
        break;
    }
  }

  // ---------------------------------------------------------- prerequisites

  const Realization& realization() {
    if (!real_) real_.emplace(doc_.realization());
    return *real_;
  }

  const Realization& next_realization() {
    if (!next_) next_.emplace(realization().with_truncation(p_.truncation + 1));
    return *next_;
  }

  std::optional<Missing> need_lift() {
    if (!lift_checked_) {
      lift_checked_ = true;
      const auto& r = realization();
      for (std::size_t b = 0; b < r.l().dim(); ++b) {
        auto report = verify_lift(r.lifter(), Vect::single(r.l().id(b)));
        lift_reports_.push_back(report);
        if (!report.passed() && lift_problem_.empty()) lift_problem_ = "lift of " + r.l().label(b) + " fails";
      }
    }
    if (!lift_problem_.empty()) return Missing{Stage::verify_lift, lift_problem_};
    return std::nullopt;
  }

  std::optional<Missing> need_relations() {
    if (auto m = need_lift()) return m;
    if (!homogeneous_) {
      const auto& r = realization();
      const auto& next = next_realization();
      homogeneous_.emplace();
      for (std::size_t k = 1; k <= p_.max_degree; ++k) homogeneous_->push_back(certify_relations(r, next, k, false));
      filtered_ = certify_relations(r, next, p_.max_degree, true);
      relations_ok_ = filtered_->monotone;
      for (const auto& c : *homogeneous_) relations_ok_ = relations_ok_ && c.monotone;
    }
    if (!relations_ok_) return Missing{Stage::relations, "kernel at N + 1 is not contained in the kernel at N"};
    return std::nullopt;
  }

  std::optional<Missing> need_antipode() {
    if (auto m = need_lift()) return m;
    if (!antipode_tried_) {
      antipode_tried_ = true;
      const auto& r = realization();
      method_ = p_.antipode;
      if (method_ == AntipodeMode::automatic)
        method_ = r.l().is_cotriangular() && r.spec().diag_pairs ? AntipodeMode::triangular : AntipodeMode::general;
      if (method_ == AntipodeMode::triangular) {
        try {
          table_ = antipode_triangular(r);
        } catch (const PreconditionError& e) {
          antipode_problem_ = e.what();
          antipode_precondition_ = true;
        } catch (const Unsupported& e) {
          antipode_problem_ = e.what();
          antipode_precondition_ = true;
        }
      } else {
        table_ = antipode_general(r, p_.max_degree);
        if (!table_) antipode_problem_ = "no antipode found at this bound " + tag_nd();
      }
    }
    if (!table_) return Missing{Stage::antipode, antipode_problem_};
    return std::nullopt;
  }

  std::optional<Missing> need_closure() {
    if (!closure_) {
      closure_ = closure_iterate(realization(), *table_, stable_filtered(), p_.max_stages, p_.max_degree);
      closure_ok_ = closure_->stabilized;
      for (const auto& s : closure_->stages) closure_ok_ = closure_ok_ && s.coideal_defect_contained;
    }
    if (!closure_ok_) return Missing{Stage::closure, "closure did not stabilize as a coideal"};
    return std::nullopt;
  }

  const std::vector<LPoly>& stable_filtered() const { return filtered_->at_next.basis; }

  // ----------------------------------------------------------------- stages

  void stage_coalgebras(StageSection& section) {
    for (const auto& [name, a] : doc_.algebras)
      section.lines.push_back("algebra " + name + " (dim " + std::to_string(a.dim()) + "): associative and unital");
    for (const auto& [name, c] : doc_.coalgebras) {
      auto report = verify_coalgebra(c);
      std::string line = "coalgebra " + name + " (dim " + std::to_string(c.dim()) +
                         (c.is_cotriangular() ? ", cotriangular" : "") + "): ";
      if (report.passed()) {
        line += "coassociative and counital";
      } else {
        section.status = StageStatus::failed;
        const auto bad = *report.first_failure();
        line += std::string(bad.coassociative ? "counit law" : "coassociativity") + " fails at " + c.label(bad.index);
      }
      section.lines.push_back(line);
    }
  }

  void stage_free_bialgebra(StageSection& section) {
    const auto& r = realization();
    auto report = verify_free_bialgebra(r.ctx());
    const std::string scope = "[words of degree <= " + std::to_string(report.checked_degree) + ", " + tag_n() + "]";
    for (const auto& c : report.checks) {
      section.lines.push_back(c.name + ": " + (c.passed ? std::string("pass") : "fail at " + c.witness.value_or("?")) + " " + scope);
      if (!c.passed) section.status = StageStatus::failed;
    }
    if (r.ctx().coalgebra().dual_of()) {
      const std::size_t degree = std::min<std::size_t>(p_.truncation, 2);
      auto duality = verify_duality(r.ctx(), degree);
      section.lines.push_back("duality pairing with the algebra: " +
                              (duality.passed() ? std::string("pass") : "fail at " + *duality.witness) + " (" +
                              std::to_string(duality.checked) + " pairings) [words of degree <= " +
                              std::to_string(degree) + "]");
      if (!duality.passed()) section.status = StageStatus::failed;
    }
  }

  void stage_lift(StageSection& section) {
    need_lift();
    const auto& r = realization();
    for (std::size_t b = 0; b < r.l().dim(); ++b) {
      const auto& report = lift_reports_[b];
      std::vector<std::string> bad;
      for (const auto& p : report.properties)
        if (!p.passed) bad.push_back(p.name + (p.witness.empty() ? "" : " (" + p.witness + ")"));
      std::string line = "X(" + r.l().label(b) + "): ";
      if (bad.empty()) {
        std::vector<std::string> names;
        for (const auto& p : report.properties) names.push_back(p.name);
        line += join(names, ", ") + ": pass";
      } else {
        section.status = StageStatus::failed;
        line += "fail: " + join(bad, ", ");
      }
      section.lines.push_back(line + " " + tag_n());
    }
  }

  void relation_lines(StageSection& section, const RelationCertificate& c, const std::string& title) {
    const auto& r = realization();
    std::string line = title + ": dim " + std::to_string(c.at_n.dimension()) + " at N=" +
                       std::to_string(c.at_n.truncation) + ", dim " + std::to_string(c.at_next.dimension()) +
                       " at N=" + std::to_string(c.at_next.truncation);
    if (!c.monotone) line += ", NOT MONOTONE";
    else if (c.stable()) line += ", stable";
    else line += ", " + std::to_string(c.sensitive.size()) + " truncation-sensitive";
    section.lines.push_back(line);
    for (const auto& p : c.at_next.basis) section.lines.push_back("  " + r.format(p));
    for (const auto& p : c.sensitive) section.lines.push_back("  truncation-sensitive: " + r.format(p));
  }

  void stage_relations(StageSection& section) {
    for (const auto& c : *homogeneous_)
      relation_lines(section, c, "homogeneous degree " + std::to_string(c.at_n.degree));
    relation_lines(section, *filtered_, "all degrees <= " + std::to_string(p_.max_degree));
    if (!relations_ok_) section.status = StageStatus::failed;
  }

  void coideal_line(StageSection& section, const std::string& title, const CoidealReport& report) {
    std::string line = title + ": ";
    if (report.passed) {
      line += "pass (" + std::to_string(report.checked) + " relations)";
    } else {
      section.status = StageStatus::failed;
      line += "fail at " + realization().format(*report.witness) + " (" + report.reason + ")";
    }
    section.lines.push_back(line + " [N=" + std::to_string(p_.truncation + 1) + ", d=" +
                            std::to_string(report.bound) + "]");
  }

  void stage_coideal(StageSection& section) {
    const auto& l = realization().l();
    std::vector<LPoly> homogeneous;
    for (const auto& c : *homogeneous_)
      homogeneous.insert(homogeneous.end(), c.at_next.basis.begin(), c.at_next.basis.end());
    coideal_line(section, "homogeneous relations", verify_coideal(l, homogeneous, p_.max_degree));
    coideal_line(section, "all relations", verify_coideal(l, stable_filtered(), p_.max_degree));
  }

  void stage_antipode(StageSection& section) {
    auto m = need_antipode();
    const auto& r = realization();
    section.lines.push_back("method: " + to_string(method_));
    if (m) {
      section.status = antipode_precondition_ ? StageStatus::failed_precondition : StageStatus::failed;
      section.lines.push_back(antipode_precondition_ ? "precondition unmet: " + m->reason : m->reason);
      return;
    }
    for (const auto& e : table_->entries) {
      std::string line = "S(" + r.l().label(r.l().index_of(e.id)) + ") = " + r.format(e.reduced);
      if (!(e.expression == e.reduced)) line += "    (construction: " + r.format(e.expression) + ")";
      section.lines.push_back(line);
    }
    section.lines.push_back("both antipode systems hold exactly " + tag_n());
    if (method_ == AntipodeMode::general) {
      section.lines.push_back(std::string("solution inside the operator algebra is ") +
                              (table_->unique ? "unique" : "not unique") + " " + tag_nd());
    }
    auto cop = verify_y_coproduct(r, *table_, p_.truncation);
    section.lines.push_back("coproduct law Y(l)(w1 w2) = sum Y(l'')(w1) Y(l')(w2): " +
                            (cop.passed ? "pass (" + std::to_string(cop.checked) + " generators and pairs)"
                                        : "fail at " + cop.witness) +
                            " " + tag_n());
    if (!cop.passed) section.status = StageStatus::failed;
    auto perturb = perturbation_uniqueness(r, *table_, 10, 20240601u, p_.max_degree);
    section.lines.push_back("random perturbations breaking a system equation: " + std::to_string(perturb.broken) +
                            "/" + std::to_string(perturb.trials) + " " + tag_nd());
    if (!perturb.passed()) section.status = StageStatus::failed;
    if (method_ == AntipodeMode::triangular) {
      auto general = antipode_general(r, p_.max_degree);
      std::string line = "linear solver inside span{pi(m) : deg m <= " + std::to_string(p_.max_degree) + "}: ";
      if (!general) {
        line += "no solution at this bound";
      } else {
        bool same = true;
        for (std::size_t b = 0; b < table_->entries.size(); ++b) same = same && general->at(b).op == table_->at(b).op;
        line += same ? "same operators" : "DIFFERENT operators";
        if (!same) section.status = StageStatus::failed;
      }
      section.lines.push_back(line + " " + tag_nd());
    }
  }

  void stage_closure(StageSection& section) {
    need_closure();
    const auto& r = realization();
    const auto& c = *closure_;
    for (std::size_t n = 0; n < c.stages.size(); ++n) {
      const auto& s = c.stages[n];
      section.lines.push_back("stage " + std::to_string(n) + ": dim R = " + std::to_string(s.basis.size()) +
                              ", dim ideal = " + std::to_string(s.ideal_dimension) + ", coideal defect " +
                              (s.coideal_defect_contained ? "contained" : "NOT contained") +
                              (s.truncated ? ", S-images truncated" : "") + " " + tag_d());
    }
    if (c.stabilized) {
      section.lines.push_back("closed under S at stage " + std::to_string(*c.stable_at) + " " + tag_nd());
    } else {
      section.lines.push_back("not stabilized after " + std::to_string(p_.max_stages) + " stages " + tag_nd());
    }
    for (const auto& [k, dim] : c.quotient_dims)
      section.lines.push_back("dim T(L)_{<=" + std::to_string(k) + "} / J = " + std::to_string(dim) + " " + tag_nd());
    section.lines.push_back("generators of J up to degree " + std::to_string(p_.max_degree) + ":");
    for (const auto& p : minimal_generators(r.l().dim(), p_.max_degree, c.generators()))
      section.lines.push_back("  " + r.format(p));
    if (!closure_ok_) section.status = StageStatus::failed;
  }

  void stage_hopf(StageSection& section) {
    const std::size_t sample = std::min<std::size_t>(p_.max_degree, 2);
    auto report = verify_hopf_quotient(realization(), *table_, *closure_, p_.max_degree, sample);
    section.lines.push_back("sum S(w') w'' = eps(w) 1 and sum w' S(w'') = eps(w) 1 modulo J: " +
                            (report.passed ? "pass" : "fail at " + report.witness) + " (" +
                            std::to_string(report.checked) + " monomials of degree <= " + std::to_string(sample) +
                            ", J spanned up to degree " + std::to_string(report.ideal_bound) + ") " + tag_nd());
    section.lines.push_back(std::string("J is a coideal: ") + (report.coideal ? "pass" : "fail") + " " + tag_d());
    if (!report.passed) section.status = StageStatus::failed;
  }

  // ------------------------------------------------------------------- YAML

  void emit_polys(YAML::Emitter& out, const std::vector<LPoly>& polys) {
    out << YAML::BeginSeq;
    for (const auto& p : polys) out << realization().format(p);
    out << YAML::EndSeq;
  }

  void emit_certificate(YAML::Emitter& out, const RelationCertificate& c) {
    out << YAML::BeginMap;
    out << YAML::Key << "degree" << YAML::Value << c.at_n.degree;
    out << YAML::Key << "filtered" << YAML::Value << c.at_n.filtered;
    out << YAML::Key << "truncation" << YAML::Value << c.at_n.truncation;
    out << YAML::Key << "dimension" << YAML::Value << c.at_n.dimension();
    out << YAML::Key << "dimension_next" << YAML::Value << c.at_next.dimension();
    out << YAML::Key << "stable" << YAML::Value << c.stable();
    out << YAML::Key << "basis" << YAML::Value;
    emit_polys(out, c.at_next.basis);
    out << YAML::Key << "truncation_sensitive" << YAML::Value;
    emit_polys(out, c.sensitive);
    out << YAML::EndMap;
  }

  std::string emit(const Report& report) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "L" << YAML::Value << report.l_name;
    out << YAML::Key << "F" << YAML::Value << report.f_name;
    out << YAML::Key << "bounds" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "truncation" << YAML::Value << p_.truncation;
    out << YAML::Key << "max_degree" << YAML::Value << p_.max_degree;
    out << YAML::Key << "max_stages" << YAML::Value << p_.max_stages;
    out << YAML::Key << "antipode" << YAML::Value << to_string(p_.antipode);
    out << YAML::EndMap;
    out << YAML::Key << "requested" << YAML::Value << YAML::Flow << stage_names(report.requested);
    out << YAML::Key << "skipped" << YAML::Value << YAML::Flow << stage_names(not_requested(report.requested));
    out << YAML::Key << "stages" << YAML::Value << YAML::BeginSeq;
    for (const auto& s : report.sections) {
      out << YAML::BeginMap;
      out << YAML::Key << "stage" << YAML::Value << stage_name(s.stage);
      out << YAML::Key << "status" << YAML::Value << status_name(s.status);
      out << YAML::Key << "lines" << YAML::Value << s.lines;
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    if (requested(Stage::relations) && homogeneous_) {
      out << YAML::Key << "relations" << YAML::Value << YAML::BeginSeq;
      for (const auto& c : *homogeneous_) emit_certificate(out, c);
      emit_certificate(out, *filtered_);
      out << YAML::EndSeq;
    }
    if (requested(Stage::antipode) && table_) {
      const auto& l = realization().l();
      out << YAML::Key << "antipode" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "method" << YAML::Value << table_->method;
      out << YAML::Key << "truncation" << YAML::Value << table_->truncation;
      out << YAML::Key << "unique" << YAML::Value << table_->unique;
      out << YAML::Key << "entries" << YAML::Value << YAML::BeginSeq;
      for (const auto& e : table_->entries) {
        out << YAML::BeginMap;
        out << YAML::Key << "generator" << YAML::Value << l.label(l.index_of(e.id));
        out << YAML::Key << "S" << YAML::Value << realization().format(e.reduced);
        out << YAML::Key << "construction" << YAML::Value << realization().format(e.expression);
        out << YAML::EndMap;
      }
      out << YAML::EndSeq << YAML::EndMap;
    }
    if (requested(Stage::closure) && closure_) {
      out << YAML::Key << "closure" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "bound" << YAML::Value << closure_->bound;
      out << YAML::Key << "stabilized" << YAML::Value << closure_->stabilized;
      if (closure_->stable_at) out << YAML::Key << "stable_at" << YAML::Value << *closure_->stable_at;
      out << YAML::Key << "stages" << YAML::Value << YAML::BeginSeq;
      for (const auto& s : closure_->stages) {
        out << YAML::BeginMap;
        out << YAML::Key << "dimension" << YAML::Value << s.basis.size();
        out << YAML::Key << "ideal_dimension" << YAML::Value << s.ideal_dimension;
        out << YAML::Key << "coideal_defect_contained" << YAML::Value << s.coideal_defect_contained;
        out << YAML::Key << "truncated" << YAML::Value << s.truncated;
        out << YAML::Key << "basis" << YAML::Value;
        emit_polys(out, s.basis);
        out << YAML::EndMap;
      }
      out << YAML::EndSeq;
      out << YAML::Key << "quotient_dims" << YAML::Value << YAML::BeginMap;
      for (const auto& [k, dim] : closure_->quotient_dims) out << YAML::Key << k << YAML::Value << dim;
      out << YAML::EndMap << YAML::EndMap;
    }
    out << YAML::Key << "result" << YAML::Value << (report.passed() ? "pass" : "fail");
    out << YAML::Key << "exit_code" << YAML::Value << report.exit_code();
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
  }

  const InputDocument& doc_;
  std::vector<Stage> requested_;
  Parameters p_;
  std::map<Stage, bool> failed_;

  std::optional<Realization> real_;
  std::optional<Realization> next_;

  bool lift_checked_ = false;
  std::vector<LiftReport> lift_reports_;
  std::string lift_problem_;

  std::optional<std::vector<RelationCertificate>> homogeneous_;
  std::optional<RelationCertificate> filtered_;
  bool relations_ok_ = false;

  bool antipode_tried_ = false;
  bool antipode_precondition_ = false;
  AntipodeMode method_ = AntipodeMode::automatic;
  std::optional<AntipodeTable> table_;
  std::string antipode_problem_;

  std::optional<ClosureResult> closure_;
  bool closure_ok_ = false;
};

}  // namespace

std::string Report::text() const {
  std::string out;
  out += "realization report\n";
  out += "L = " + l_name + ", F = " + f_name + "\n";
  out += "bounds: N = " + std::to_string(params.truncation) + ", d = " + std::to_string(params.max_degree) +
         ", max stages = " + std::to_string(params.max_stages) + ", antipode = " + to_string(params.antipode) + "\n";
  out += "requested: " + join(stage_names(requested), ", ") + "\n";
  out += "skipped: " + join(stage_names(not_requested(requested)), ", ") + "\n";
  for (const auto& s : sections) {
    out += "\n[" + stage_name(s.stage) + "] " + status_name(s.status) + "\n";
    for (const auto& line : s.lines) out += "  " + line + "\n";
  }
  out += "\nresult: " + std::string(passed() ? "pass" : "fail") + " (exit " + std::to_string(exit_code()) + ")\n";
  return out;
}

Report run_pipeline(const InputDocument& doc, const std::vector<Stage>& stages) {
  if (stages.empty()) throw InvalidArgument("no stages selected");
  return Run(doc, stages).execute();
}

}  // namespace hopfreal
