#include "hopfreal/hopfreal.h"

#include <fstream>
#include <string>

#include "hopfreal/errors.hpp"
#include "hopfreal/pipeline.hpp"

struct hr_document {
  hopfreal::InputDocument doc;
};

struct hr_report {
  std::string text;
  std::string yaml;
  int exit_code = 0;
};

namespace {

thread_local std::string last_error;

hr_status record(hr_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps the library's exceptions onto status codes.
template <class F>
hr_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const hopfreal::ParseError& e) {
    return record(HR_ERR_PARSE, e.what());
  } catch (const hopfreal::ResolutionError& e) {
    return record(HR_ERR_RESOLUTION, e.what());
  } catch (const hopfreal::ValidationError& e) {
    return record(HR_ERR_VALIDATION, e.what());
  } catch (const hopfreal::InvalidArgument& e) {
    return record(HR_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return record(HR_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(HR_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* hr_version(void) { return "0.1.0"; }

const char* hr_last_error(void) { return last_error.c_str(); }

hr_status hr_document_parse(const char* text, size_t length, hr_document** out) {
  return guarded([&] {
    if (!text || !out) return record(HR_ERR_ARGUMENT, "null argument");
    *out = new hr_document{hopfreal::parse_input(std::string(text, length))};
    return HR_OK;
  });
}

hr_status hr_document_load(const char* path, hr_document** out) {
  return guarded([&] {
    if (!path || !out) return record(HR_ERR_ARGUMENT, "null argument");
    std::ifstream in(path);
    if (!in) return record(HR_ERR_IO, std::string("cannot read ") + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    *out = new hr_document{hopfreal::parse_input(text)};
    return HR_OK;
  });
}

void hr_document_free(hr_document* doc) { delete doc; }

hr_status hr_document_set_param(hr_document* doc, const char* name, long value) {
  return guarded([&] {
    if (!doc || !name) return record(HR_ERR_ARGUMENT, "null argument");
    hopfreal::set_parameter(doc->doc, name, value);
    return HR_OK;
  });
}

hr_status hr_run(const hr_document* doc, const char* stages, hr_report** out) {
  return guarded([&] {
    if (!doc || !stages || !out) return record(HR_ERR_ARGUMENT, "null argument");
    auto report = hopfreal::run_pipeline(doc->doc, hopfreal::parse_stage_list(stages));
    *out = new hr_report{report.text(), report.yaml, report.exit_code()};
    return HR_OK;
  });
}

const char* hr_report_text(const hr_report* report) { return report ? report->text.c_str() : ""; }

const char* hr_report_yaml(const hr_report* report) { return report ? report->yaml.c_str() : ""; }

hr_status hr_report_emit(const hr_report* report, const char* path) {
  return guarded([&] {
    if (!report || !path) return record(HR_ERR_ARGUMENT, "null argument");
    std::ofstream out(path, std::ios::binary);
    if (!out) return record(HR_ERR_IO, std::string("cannot write ") + path);
    out << report->yaml;
    if (!out) return record(HR_ERR_IO, std::string("cannot write ") + path);
    return HR_OK;
  });
}

int hr_report_exit_code(const hr_report* report) { return report ? report->exit_code : 1; }

void hr_report_free(hr_report* report) { delete report; }

}  // extern "C"
