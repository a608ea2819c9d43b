#include "hopfreal/document.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "hopfreal/errors.hpp"

namespace hopfreal {

std::string to_string(AntipodeMode mode) {
  switch (mode) {
    case AntipodeMode::automatic: return "auto";
    case AntipodeMode::triangular: return "triangular";
    case AntipodeMode::general: return "general";
  }
  return "auto";
}

RealizationSpec InputDocument::realization() const {
  return RealizationSpec{l(), TensorContext(f(), params.truncation), x_map, diag_pairs};
}

namespace {

[[noreturn]] void fail(const YAML::Node& node, const std::string& what) {
  const auto mark = node.Mark();
  if (mark.is_null()) throw ParseError(what, 0, 0);
  throw ParseError(what, static_cast<std::size_t>(mark.line) + 1, static_cast<std::size_t>(mark.column) + 1);
}

void expect_map(const YAML::Node& node, const std::string& what) {
  if (!node.IsMap()) fail(node, what + " must be a mapping");
}

void expect_seq(const YAML::Node& node, const std::string& what) {
  if (!node.IsSequence()) fail(node, what + " must be a list");
}

void check_keys(const YAML::Node& node, const std::set<std::string>& allowed, const std::string& what) {
  for (const auto& entry : node) {
    const auto key = entry.first.as<std::string>();
    if (!allowed.count(key)) fail(entry.first, "unknown key '" + key + "' in " + what);
  }
}

const YAML::Node required(const YAML::Node& parent, const std::string& key, const std::string& what) {
  const YAML::Node node = parent[key];
  if (!node) fail(parent, what + " needs '" + key + "'");
  return node;
}

std::string text(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail(node, what + " must be a scalar");
  return node.Scalar();
}

Scalar rational(const YAML::Node& node) {
  try {
    return parse_scalar(text(node, "coefficient"));
  } catch (const InvalidArgument& e) {
    fail(node, e.what());
  }
}

long integer(const YAML::Node& node, const std::string& what) {
  const std::string s = text(node, what);
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(node, what + " must be an integer, got '" + s + "'");
  }
}

// ---------------------------------------------------------------- algebras

std::optional<AlgebraPresentation> explicit_algebra(const YAML::Node& node, const std::string& name,
                                                    std::vector<std::string>& failures) {
  check_keys(node, {"basis", "unit", "products"}, "algebra " + name);
  const YAML::Node basis = required(node, "basis", "algebra " + name);
  expect_seq(basis, "algebra basis");
  AlgebraPresentation a;
  std::map<std::string, std::size_t> index;
  for (const auto& b : basis) {
    const std::string label = text(b, "basis name");
    if (!index.emplace(label, a.names.size()).second) {
      failures.push_back("algebra " + name + ": duplicate basis name " + label);
      return std::nullopt;
    }
    a.names.push_back(label);
  }
  bool ok = true;
  auto element = [&](const YAML::Node& map, const std::string& what) {
    expect_map(map, what);
    AlgebraElement out;
    for (const auto& entry : map) {
      const std::string label = text(entry.first, "basis name");
      auto it = index.find(label);
      if (it == index.end()) {
        failures.push_back("algebra " + name + ": " + what + " uses unknown basis name " + label);
        ok = false;
        continue;
      }
      out.add(it->second, rational(entry.second));
    }
    return out;
  };
  a.unit = element(required(node, "unit", "algebra " + name), "unit");
  if (const YAML::Node products = node["products"]) {
    expect_seq(products, "products");
    for (const auto& p : products) {
      expect_seq(p, "product entry");
      if (p.size() != 3) fail(p, "product entry must be [left, right, {name: coefficient}]");
      const std::string l = text(p[0], "basis name");
      const std::string m = text(p[1], "basis name");
      if (!index.count(l) || !index.count(m)) {
        failures.push_back("algebra " + name + ": product of unknown basis names " + l + ", " + m);
        ok = false;
        continue;
      }
      a.products[{index[l], index[m]}] = element(p[2], "product " + l + "*" + m);
    }
  }
  if (!ok) return std::nullopt;
  for (const auto& v : a.violations()) failures.push_back("algebra " + name + ": " + v);
  return a;
}

std::optional<AlgebraPresentation> build_algebra(const YAML::Node& node, const std::string& name,
                                                 std::vector<std::string>& failures) {
  expect_map(node, "algebra " + name);
  auto size = [&](const char* key) {
    const long n = integer(node[key], key);
    if (n < 1) {
      failures.push_back("algebra " + name + ": " + key + " must be >= 1");
      return std::optional<std::size_t>{};
    }
    return std::optional<std::size_t>(static_cast<std::size_t>(n));
  };
  if (node["upper_triangular"]) {
    check_keys(node, {"upper_triangular"}, "algebra " + name);
    if (auto n = size("upper_triangular")) return upper_triangular_algebra(*n);
    return std::nullopt;
  }
  if (node["truncated_polynomial"]) {
    check_keys(node, {"truncated_polynomial"}, "algebra " + name);
    if (auto n = size("truncated_polynomial")) return truncated_polynomial_algebra(*n);
    return std::nullopt;
  }
  return explicit_algebra(node, name, failures);
}

// -------------------------------------------------------------- coalgebras

class CoalgebraResolver {
 public:
  CoalgebraResolver(const YAML::Node& nodes, const std::map<std::string, std::optional<AlgebraPresentation>>& algebras,
                    std::vector<std::string>& failures)
      : nodes_(nodes), algebras_(algebras), failures_(failures) {}

  // nullopt when the coalgebra is invalid (the failure is already recorded).
  std::optional<Coalgebra> get(const std::string& name, const YAML::Node& reference) {
    if (auto it = done_.find(name); it != done_.end()) return it->second;
    if (!nodes_ || !nodes_[name]) throw ResolutionError("unknown coalgebra '" + name + "'" + where(reference));
    if (active_.count(name)) throw ResolutionError("coalgebra '" + name + "' is defined in terms of itself");
    active_.insert(name);
    auto built = build(nodes_[name], name);
    active_.erase(name);
    done_[name] = built;
    return built;
  }

 private:
  static std::string where(const YAML::Node& node) {
    const auto mark = node.Mark();
    if (mark.is_null()) return "";
    return " (line " + std::to_string(mark.line + 1) + ", column " + std::to_string(mark.column + 1) + ")";
  }

  std::optional<Coalgebra> build(const YAML::Node& node, const std::string& name) {
    expect_map(node, "coalgebra " + name);
    if (node["triangular"]) {
      check_keys(node, {"triangular"}, "coalgebra " + name);
      const long n = integer(node["triangular"], "triangular");
      if (n < 1) {
        failures_.push_back("coalgebra " + name + ": triangular size must be >= 1");
        return std::nullopt;
      }
      return triangular_coalgebra(static_cast<std::size_t>(n));
    }
    if (node["dual_of"]) {
      check_keys(node, {"dual_of"}, "coalgebra " + name);
      const std::string algebra = text(node["dual_of"], "dual_of");
      auto it = algebras_.find(algebra);
      if (it == algebras_.end()) throw ResolutionError("unknown algebra '" + algebra + "'" + where(node["dual_of"]));
      if (!it->second) return std::nullopt;
      try {
        return dual_coalgebra(*it->second);
      } catch (const InvalidAlgebra& e) {
        failures_.push_back("coalgebra " + name + ": " + e.what());
        return std::nullopt;
      }
    }
    if (node["direct_sum"]) {
      check_keys(node, {"direct_sum"}, "coalgebra " + name);
      const YAML::Node parts = node["direct_sum"];
      expect_seq(parts, "direct_sum");
      std::vector<Coalgebra> built;
      bool ok = true;
      for (const auto& p : parts) {
        auto part = get(text(p, "coalgebra name"), p);
        if (part) built.push_back(std::move(*part));
        else ok = false;
      }
      if (!ok) return std::nullopt;
      if (built.empty()) {
        failures_.push_back("coalgebra " + name + ": direct_sum of an empty list");
        return std::nullopt;
      }
      return direct_sum(built);
    }
    if (node["explicit"]) {
      check_keys(node, {"explicit"}, "coalgebra " + name);
      return explicit_coalgebra(node["explicit"], name);
    }
    fail(node, "coalgebra " + name + " needs one of triangular, dual_of, direct_sum, explicit");
  }

  std::optional<Coalgebra> explicit_coalgebra(const YAML::Node& node, const std::string& name) {
    expect_map(node, "explicit coalgebra");
    check_keys(node, {"basis", "counit", "coproduct"}, "coalgebra " + name);
    const YAML::Node basis = required(node, "basis", "coalgebra " + name);
    expect_seq(basis, "coalgebra basis");
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    for (const auto& b : basis) {
      labels.push_back(text(b, "basis name"));
      if (!index.emplace(labels.back(), labels.size() - 1).second) {
        failures_.push_back("coalgebra " + name + ": duplicate basis name " + labels.back());
        return std::nullopt;
      }
    }
    bool ok = true;
    auto lookup = [&](const YAML::Node& n) -> std::optional<std::size_t> {
      const std::string label = text(n, "basis name");
      auto it = index.find(label);
      if (it == index.end()) {
        failures_.push_back("coalgebra " + name + ": unknown basis name " + label);
        ok = false;
        return std::nullopt;
      }
      return it->second;
    };
    std::vector<Scalar> epsilon(labels.size());
    if (const YAML::Node counit = node["counit"]) {
      expect_map(counit, "counit");
      for (const auto& entry : counit)
        if (auto k = lookup(entry.first)) epsilon[*k] = rational(entry.second);
    }
    std::vector<std::vector<CoproductTerm>> delta(labels.size());
    if (const YAML::Node coproduct = node["coproduct"]) {
      expect_map(coproduct, "coproduct");
      for (const auto& entry : coproduct) {
        auto k = lookup(entry.first);
        expect_seq(entry.second, "coproduct terms");
        for (const auto& t : entry.second) {
          expect_seq(t, "coproduct term");
          if (t.size() != 3) fail(t, "coproduct term must be [left, right, coefficient]");
          auto a = lookup(t[0]);
          auto b = lookup(t[1]);
          const Scalar c = rational(t[2]);
          if (k && a && b && c != 0) delta[*k].push_back({*a, *b, c});
        }
      }
    }
    if (!ok) return std::nullopt;
    std::vector<BasisId> ids;
    for (std::size_t k = 0; k < labels.size(); ++k) ids.push_back(BasisId::plain(k));
    try {
      return Coalgebra(std::move(ids), std::move(labels), std::move(delta), std::move(epsilon));
    } catch (const InvalidArgument& e) {
      failures_.push_back("coalgebra " + name + ": " + e.what());
      return std::nullopt;
    }
  }

  const YAML::Node& nodes_;
  const std::map<std::string, std::optional<AlgebraPresentation>>& algebras_;
  std::vector<std::string>& failures_;
  std::map<std::string, std::optional<Coalgebra>> done_;
  std::set<std::string> active_;
};

// -------------------------------------------------------------- parameters

void read_parameters(const YAML::Node& node, Parameters& params, std::vector<std::string>& failures) {
  expect_map(node, "parameters");
  check_keys(node, {"truncation", "max_degree", "max_stages", "antipode"}, "parameters");
  auto count = [&](const char* key, std::size_t& target) {
    if (!node[key]) return;
    const long v = integer(node[key], key);
    if (v < 1) failures.push_back(std::string("parameter ") + key + " must be >= 1");
    else target = static_cast<std::size_t>(v);
  };
  count("truncation", params.truncation);
  count("max_degree", params.max_degree);
  count("max_stages", params.max_stages);
  if (node["antipode"]) {
    const std::string mode = text(node["antipode"], "antipode");
    if (mode == "auto") params.antipode = AntipodeMode::automatic;
    else if (mode == "triangular") params.antipode = AntipodeMode::triangular;
    else if (mode == "general") params.antipode = AntipodeMode::general;
    else fail(node["antipode"], "antipode must be auto, triangular or general");
  }
}

}  // namespace

InputDocument parse_input(const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(source);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line) + 1, static_cast<std::size_t>(e.mark.column) + 1);
  }
  if (!root.IsMap()) throw ParseError("document must be a mapping", 1, 1);
  check_keys(root, {"algebras", "coalgebras", "realization", "parameters"}, "document");

  InputDocument doc;
  std::vector<std::string> failures;

  std::map<std::string, std::optional<AlgebraPresentation>> algebras;
  if (const YAML::Node nodes = root["algebras"]) {
    expect_map(nodes, "algebras");
    for (const auto& entry : nodes) {
      const std::string name = text(entry.first, "algebra name");
      algebras[name] = build_algebra(entry.second, name, failures);
    }
  }
  for (const auto& [name, a] : algebras)
    if (a) doc.algebras.emplace(name, *a);

  const YAML::Node coalgebra_nodes = root["coalgebras"];
  if (coalgebra_nodes) expect_map(coalgebra_nodes, "coalgebras");
  CoalgebraResolver resolver(coalgebra_nodes, algebras, failures);
  if (coalgebra_nodes) {
    for (const auto& entry : coalgebra_nodes) {
      const std::string name = text(entry.first, "coalgebra name");
      if (auto c = resolver.get(name, entry.first)) doc.coalgebras.emplace(name, std::move(*c));
    }
  }

  if (const YAML::Node params = root["parameters"]) read_parameters(params, doc.params, failures);

  const YAML::Node real = required(root, "realization", "document");
  expect_map(real, "realization");
  check_keys(real, {"L", "F", "x", "diag_pairs"}, "realization");
  const YAML::Node l_node = required(real, "L", "realization");
  const YAML::Node f_node = required(real, "F", "realization");
  doc.l_name = text(l_node, "L");
  doc.f_name = text(f_node, "F");
  const auto l = resolver.get(doc.l_name, l_node);
  const auto f = resolver.get(doc.f_name, f_node);
  if (!l || !f) throw ValidationError(failures);

  const YAML::Node x = required(real, "x", "realization");
  expect_map(x, "x");
  std::vector<std::optional<RIOp>> x_map(l->dim());
  bool x_ok = true;
  for (const auto& entry : x) {
    const std::string label = text(entry.first, "basis label");
    auto position = l->find_label(label);
    if (!position) {
      failures.push_back("x refers to " + label + ", which is not a basis element of " + doc.l_name);
      x_ok = false;
      continue;
    }
    expect_map(entry.second, "x entry");
    check_keys(entry.second, {"identity", "form"}, "x entry " + label);
    RIOp op;
    if (entry.second["identity"]) op.identity = rational(entry.second["identity"]);
    if (const YAML::Node form = entry.second["form"]) {
      expect_map(form, "form");
      for (const auto& term : form) {
        const std::string flabel = text(term.first, "basis label");
        auto fpos = f->find_label(flabel);
        if (!fpos) {
          failures.push_back("x(" + label + ") uses " + flabel + ", which is not a basis element of " + doc.f_name);
          x_ok = false;
          continue;
        }
        op.form.add(f->id(*fpos), rational(term.second));
      }
    }
    x_map[*position] = std::move(op);
  }
  for (std::size_t b = 0; b < l->dim(); ++b) {
    if (!x_map[b]) {
      failures.push_back("x is missing basis element " + l->label(b));
      x_ok = false;
    }
  }

  if (const YAML::Node pairs = real["diag_pairs"]) {
    expect_seq(pairs, "diag_pairs");
    std::vector<std::pair<BasisId, BasisId>> out;
    for (const auto& p : pairs) {
      expect_seq(p, "diagonal pair");
      if (p.size() != 2) fail(p, "diagonal pair must be [l, l']");
      auto a = l->find_label(text(p[0], "basis label"));
      auto b = l->find_label(text(p[1], "basis label"));
      if (!a || !b) {
        failures.push_back("diagonal pair [" + p[0].Scalar() + ", " + p[1].Scalar() + "] is not in " + doc.l_name);
        x_ok = false;
        continue;
      }
      out.emplace_back(l->id(*a), l->id(*b));
    }
    doc.diag_pairs = std::move(out);
  }

  if (x_ok) {
    for (auto& op : x_map) doc.x_map.push_back(std::move(*op));
    if (failures.empty()) {
      const RealizationSpec spec = doc.realization();
      for (const auto& v : spec.violations()) failures.push_back(v);
    }
  } else if (doc.diag_pairs) {
    // pairs whose x entries are present can still be checked
    for (const auto& [a, b] : *doc.diag_pairs) {
      const auto& xa = x_map[l->index_of(a)];
      const auto& xb = x_map[l->index_of(b)];
      if (!xa || !xb) continue;
      if (!(op_from_form(*f, *xa) * op_from_form(*f, *xb) == Matrix::identity(f->dim())))
        failures.push_back("x(" + l->label(l->index_of(a)) + ") o x(" + l->label(l->index_of(b)) +
                           ") is not the identity on F");
    }
  }
  if (!failures.empty()) throw ValidationError(failures);
  return doc;
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_input(buffer.str());
}

void set_parameter(InputDocument& doc, const std::string& name, long value) {
  std::size_t* target = nullptr;
  if (name == "truncation") target = &doc.params.truncation;
  else if (name == "max_degree") target = &doc.params.max_degree;
  else if (name == "max_stages") target = &doc.params.max_stages;
  else throw InvalidArgument("unknown parameter '" + name + "'");
  if (value < 1) throw ValidationError({"parameter " + name + " must be >= 1"});
  *target = static_cast<std::size_t>(value);
}

}  // namespace hopfreal
