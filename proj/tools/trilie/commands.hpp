#pragma once

#include "trilie/io.hpp"
#include "trilie/report.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace trilie::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kInputError = 2,
  kUnresolved = 3,
  kShape = 4,
};

/// What a command produced: the checks it ran, extra machine-readable data,
/// and any constructed objects (written with --out).
struct Outcome {
  Report report;
  json result = json::object();
  Workspace produced;
};

struct VerifyArgs {
  std::string kind;
  std::string name;
  std::string algebra;
  std::string rep;
};
Outcome run_verify(const Workspace& ws, const VerifyArgs& args);

struct ConstructArgs {
  std::string what;  // semidirect, nijenhuis, induce, derive-ns, gauge, shift
  std::string op;
  std::string algebra;
  std::string rep;
  std::string cocycle;
  std::string map;
  std::string theta;
  std::string source;
  std::string trace;
  std::string trace_prime;
  std::string from;     // derive-ns source
  std::string induce;   // induce target: 3lie, rep, cocycle, twisted, 3ns, diagram
  std::string name;     // output object name (or prefix)
};
Outcome run_construct(const Workspace& ws, const ConstructArgs& args);

struct CohomologyArgs {
  std::string op;
  std::size_t degree = 0;
  std::size_t cap = 0;
  unsigned threads = 0;
};
Outcome run_cohomology(const Workspace& ws, const CohomologyArgs& args);

struct DeformArgs {
  std::string mode;  // check, equiv
  std::string family;
  std::string family2;
  std::string op;
  std::string term;
  std::string term2;
  std::string pair;
  std::optional<std::size_t> truncation;
};
Outcome run_deform(const Workspace& ws, const DeformArgs& args);

json report_json(const Report& report);
json vec_json(const Vec& v);

}  // namespace trilie::cli
