// Command-line front end over the C interface.
//
//   hopfreal verify|relations|antipode|closure|report --input FILE
//            [--max-degree d] [--truncation N] [--max-stages k]
//            [--stages a,b,...] [--emit FILE]
//
// Exit codes: 0 every executed stage passed, 1 some stage failed,
// 2 the input (or the command line) is unusable.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "hopfreal/hopfreal.h"

namespace {

constexpr int kInputError = 2;

const std::map<std::string, std::string> kDefaultStages = {
    {"verify", "verify-coalgebras,verify-free-bialgebra,verify-lift"},
    {"relations", "relations,coideal-check"},
    {"antipode", "antipode"},
    {"closure", "closure,hopf-check"},
    {"report", "all"},
};

struct Options {
  std::string input;
  std::string emit;
  std::string stages;
  long max_degree = 0;
  long truncation = 0;
  long max_stages = 0;
};

int input_error(const std::string& message) {
  std::cerr << "hopfreal: " << message << "\n";
  return kInputError;
}

int run(const std::string& command, const Options& opt) {
  hr_document* doc = nullptr;
  if (hr_document_load(opt.input.c_str(), &doc) != HR_OK) return input_error(hr_last_error());

  const std::pair<const char*, long> overrides[] = {
      {"max_degree", opt.max_degree}, {"truncation", opt.truncation}, {"max_stages", opt.max_stages}};
  for (const auto& [name, value] : overrides) {
    if (value == 0) continue;
    if (hr_document_set_param(doc, name, value) != HR_OK) {
      hr_document_free(doc);
      return input_error(hr_last_error());
    }
  }

  const std::string stages = opt.stages.empty() ? kDefaultStages.at(command) : opt.stages;
  hr_report* report = nullptr;
  const hr_status status = hr_run(doc, stages.c_str(), &report);
  hr_document_free(doc);
  if (status != HR_OK) return input_error(hr_last_error());

  std::fputs(hr_report_text(report), stdout);
  int code = hr_report_exit_code(report);
  if (!opt.emit.empty() && hr_report_emit(report, opt.emit.c_str()) != HR_OK) code = input_error(hr_last_error());
  hr_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizations of bialgebras by right-invariant operators: relations, antipodes, Hopf closure"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hr_version());

  Options opt;
  std::string chosen;
  for (const auto& [name, stages] : kDefaultStages) {
    auto* sub = app.add_subcommand(name, "run stages: " + stages);
    sub->add_option("--input", opt.input, "realization description (YAML)")->required();
    sub->add_option("--max-degree", opt.max_degree, "relation degree bound d")->check(CLI::PositiveNumber);
    sub->add_option("--truncation", opt.truncation, "tensor truncation N")->check(CLI::PositiveNumber);
    sub->add_option("--max-stages", opt.max_stages, "closure stage limit")->check(CLI::PositiveNumber);
    sub->add_option("--stages", opt.stages, "comma-separated stage list overriding the default");
    sub->add_option("--emit", opt.emit, "also write the report as YAML to this path");
    sub->callback([&chosen, n = name] { chosen = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  return run(chosen, opt);
}
