#pragma once

// Runs the verification stages on an input document and assembles a
// deterministic report. Prerequisites of a requested stage are computed
// without appearing in the report; a prerequisite that cannot be computed
// marks the stage failed-precondition.

#include <optional>
#include <string>
#include <vector>

#include "hopfreal/document.hpp"

namespace hopfreal {

enum class Stage {
  verify_coalgebras,
  verify_free_bialgebra,
  verify_lift,
  relations,
  coideal_check,
  antipode,
  closure,
  hopf_check,
};

const std::vector<Stage>& all_stages();
std::string stage_name(Stage s);
std::optional<Stage> parse_stage(const std::string& name);
/// Comma-separated stage names; "all" selects every stage. Throws InvalidArgument.
std::vector<Stage> parse_stage_list(const std::string& csv);

enum class StageStatus { passed, failed, failed_precondition, skipped };

std::string status_name(StageStatus s);

struct StageSection {
  Stage stage;
  StageStatus status = StageStatus::passed;
  std::vector<std::string> lines;
};

struct Report {
  std::string l_name;
  std::string f_name;
  Parameters params;
  std::vector<Stage> requested;
  std::vector<StageSection> sections;
  /// The whole report as a YAML document: same content as text(), plus
  /// relation bases, antipode words and closure stages as data.
  std::string yaml;

  bool passed() const;
  /// 0 when every executed stage passed, 1 otherwise.
  int exit_code() const;
  std::string text() const;
};

/// Stages run in pipeline order regardless of the order given.
Report run_pipeline(const InputDocument& doc, const std::vector<Stage>& stages);

}  // namespace hopfreal
