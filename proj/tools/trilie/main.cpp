#include "commands.hpp"

#include "trilie/errors.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace trilie;
using namespace trilie::cli;

struct GlobalArgs {
  std::vector<std::string> workspace;
  bool json = false;
  std::string out;
};

void emit(const GlobalArgs& g, const std::string& command, const Outcome& outcome) {
  if (g.json) {
    json j;
    j["command"] = command;
    const json report = report_json(outcome.report);
    for (const auto& [k, v] : report.items()) j[k] = v;
    j["result"] = outcome.result;
    j["produced"] = json::array();
    for (const auto& e : outcome.produced.entries()) j["produced"].push_back({{"name", e.name}, {"kind", kind_name(e.value)}});
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << outcome.report.summary() << '\n';
    for (const auto& n : outcome.report.notes()) std::cout << "  note: " << n << '\n';
    if (!outcome.result.empty()) std::cout << "  result: " << outcome.result.dump() << '\n';
    for (const auto& e : outcome.produced.entries()) std::cout << "  produced " << kind_name(e.value) << ' ' << e.name << '\n';
  }
  if (!g.out.empty()) {
    if (outcome.produced.empty()) {
      std::cerr << "warning: command produced no objects; " << g.out << " not written\n";
    } else {
      write_workspace(outcome.produced, g.out);
    }
  }
}

int report_error(const GlobalArgs& g, const std::string& command, const std::string& message, int code) {
  if (g.json) {
    json j;
    j["command"] = command;
    j["outcome"] = "error";
    j["error"] = message;
    j["exit_code"] = code;
    std::cout << j.dump(2) << '\n';
  }
  std::cerr << "error: " << message << '\n';
  return code;
}

Workspace load(const GlobalArgs& g) {
  std::vector<std::filesystem::path> files(g.workspace.begin(), g.workspace.end());
  return parse_workspace(files);
}

void add_construct_options(CLI::App* sub, ConstructArgs& a) {
  sub->add_option("--op", a.op, "twisted operator");
  sub->add_option("--algebra", a.algebra, "algebra");
  sub->add_option("--rep", a.rep, "representation");
  sub->add_option("--cocycle", a.cocycle, "cocycle");
  sub->add_option("--map", a.map, "linear map");
  sub->add_option("--theta", a.theta, "1-cochain g -> V");
  sub->add_option("--source", a.source, "source object");
  sub->add_option("--trace", a.trace, "trace form on the Lie algebra");
  sub->add_option("--trace-prime", a.trace_prime, "second trace form (diagram)");
  sub->add_option("--from", a.from, "derive-ns source: nijenhuis, twisted, compatible, subadjacent, left-mult");
  sub->add_option("--what", a.induce, "induce target: 3lie, rep, cocycle, twisted, 3ns, diagram");
  sub->add_option("--name", a.name, "name (or prefix) of the produced objects");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and construction of twisted operators on 3-Lie algebras"};
  app.require_subcommand(1);
  GlobalArgs g;
  app.add_option("-w,--workspace", g.workspace, "input file (repeatable)")->check(CLI::ExistingFile);
  app.add_flag("--json", g.json, "print the full report as JSON");
  app.add_option("--out", g.out, "write constructed objects to this file");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check the defining identities of an object");
  verify->add_option("kind", va.kind, "3lie, lie, rep3, rep_lie, cocycle3, cocycle_lie, twisted, twisted_lie, graph, 3ns, ns, "
                                      "nijenhuis, trace, family")
      ->required();
  verify->add_option("name", va.name, "object name")->required();
  verify->add_option("--algebra", va.algebra, "ambient algebra");
  verify->add_option("--rep", va.rep, "representation");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a derived structure");
  construct->add_option("construction", ca.what, "semidirect, nijenhuis, induce, derive-ns, gauge, shift")
      ->required()
      ->check(CLI::IsMember({"semidirect", "nijenhuis", "induce", "derive-ns", "gauge", "shift"}));
  add_construct_options(construct, ca);

  ConstructArgs ia;
  ia.what = "induce";
  auto* induce = app.add_subcommand("induce", "trace-map induction (same as construct induce)");
  add_construct_options(induce, ia);

  CohomologyArgs co;
  auto* cohomology = app.add_subcommand("cohomology", "twisted cohomology dimensions and representatives");
  cohomology->add_option("--op", co.op, "twisted operator")->required();
  cohomology->add_option("--degree", co.degree, "cochain degree")->required();
  cohomology->add_option("--cap", co.cap, "largest cochain dimension allowed");
  cohomology->add_option("--threads", co.threads, "worker threads (0 = all)");

  DeformArgs da;
  std::size_t truncation = 0;
  auto* deform = app.add_subcommand("deform", "deformation and equivalence conditions");
  deform->add_option("mode", da.mode, "check or equiv")->required()->check(CLI::IsMember({"check", "equiv"}));
  deform->add_option("--family", da.family, "deformation family");
  deform->add_option("--family2", da.family2, "second family (equiv)");
  deform->add_option("--op", da.op, "base operator (infinitesimal mode)");
  deform->add_option("--term", da.term, "first-order term");
  deform->add_option("--term2", da.term2, "second first-order term (equiv)");
  deform->add_option("--pair", da.pair, "equivalence pair");
  auto* trunc_opt = deform->add_option("--truncation", truncation, "highest order compared (equiv)");

  auto* dump = app.add_subcommand("dump", "re-serialize the loaded workspace");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInputError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    const Workspace ws = load(g);
    Outcome outcome;
    if (verify->parsed()) {
      command += " " + va.kind + " " + va.name;
      outcome = run_verify(ws, va);
    } else if (construct->parsed()) {
      command += " " + ca.what;
      outcome = run_construct(ws, ca);
    } else if (induce->parsed()) {
      command += " " + ia.induce;
      outcome = run_construct(ws, ia);
    } else if (cohomology->parsed()) {
      outcome = run_cohomology(ws, co);
    } else if (deform->parsed()) {
      command += " " + da.mode;
      if (trunc_opt->count() > 0) da.truncation = truncation;
      outcome = run_deform(ws, da);
    } else if (dump->parsed()) {
      const std::string text = serialize_workspace(ws);
      if (g.out.empty()) {
        std::cout << text;
      } else {
        write_workspace(ws, g.out);
      }
      return kPass;
    }
    emit(g, command, outcome);
    return outcome.report.passed() ? kPass : kFail;
  } catch (const ParseError& e) {
    return report_error(g, command, e.what(), kInputError);
  } catch (const TooLarge& e) {
    return report_error(g, command, e.what(), kInputError);
  } catch (const UnresolvedReference& e) {
    return report_error(g, command, e.what(), kUnresolved);
  } catch (const ShapeMismatch& e) {
    return report_error(g, command, e.what(), kShape);
  } catch (const Error& e) {
    return report_error(g, command, e.what(), kFail);
  } catch (const std::exception& e) {
    return report_error(g, command, e.what(), kInputError);
  }
}
