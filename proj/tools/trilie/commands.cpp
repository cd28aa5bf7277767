#include "commands.hpp"

#include "trilie/cohomology.hpp"
#include "trilie/deform.hpp"
#include "trilie/errors.hpp"
#include "trilie/induce.hpp"
#include "trilie/nslie.hpp"

namespace trilie::cli {

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json report_json(const Report& report) {
  json j;
  j["outcome"] = report.passed() ? "pass" : "fail";
  j["subject"] = report.subject();
  j["stats"] = {{"checked", report.checked()}, {"failed", report.failures()}};
  json details = json::array();
  for (const auto& v : report.violations()) {
    details.push_back({{"identity", v.identity}, {"indices", v.indices}, {"residual", vec_json(v.residual)}});
  }
  j["details"] = std::move(details);
  j["notes"] = report.notes();
  return j;
}

namespace {

const std::string& need(const std::string& value, const char* option) {
  if (value.empty()) throw ParseError(std::string("missing required option --") + option, "");
  return value;
}

/// Adds an operator with its context as four named objects.
void add_operator(Workspace& out, const std::string& name, const TwistedOperator& op) {
  out.add(name + "_algebra", op.algebra);
  out.add(name + "_rep", op.rep);
  out.add(name + "_cocycle", op.cocycle);
  out.add(name, op, {{"algebra", name + "_algebra"}, {"rep", name + "_rep"}, {"cocycle", name + "_cocycle"}});
}

Outcome verify_trace(const Workspace& ws, const VerifyArgs& a) {
  const auto& tau = ws.get<TraceMap>(a.name);
  const Entry& alg = ws.entry(need(a.algebra, "algebra"));
  Outcome out;
  if (const auto* g = std::get_if<LieAlgebra>(&alg.value)) {
    out.report = check_trace(*g, tau);
  } else {
    out.report = check_trace(ws.get<NSLieAlgebra>(a.algebra), tau);
  }
  return out;
}

}  // namespace

Outcome run_verify(const Workspace& ws, const VerifyArgs& a) {
  Outcome out;
  const std::string& k = a.kind;
  if (k == "3lie") {
    out.report = check_filippov(ws.get<ThreeLieAlgebra>(a.name));
  } else if (k == "lie") {
    out.report = check_jacobi(ws.get<LieAlgebra>(a.name));
  } else if (k == "rep3") {
    const auto& g = ws.get<ThreeLieAlgebra>(need(a.algebra, "algebra"));
    const auto& rho = ws.get<Representation3>(a.name);
    require_shapes(g, rho);
    out.report = check_rep3(g, rho);
  } else if (k == "rep_lie") {
    const auto& g = ws.get<LieAlgebra>(need(a.algebra, "algebra"));
    const auto& rho = ws.get<RepresentationLie>(a.name);
    require_shapes(g, rho);
    out.report = check_rep_lie(g, rho);
  } else if (k == "cocycle3") {
    const auto& g = ws.get<ThreeLieAlgebra>(need(a.algebra, "algebra"));
    const auto& rho = ws.get<Representation3>(need(a.rep, "rep"));
    const auto& theta = ws.get<TwoCocycle3>(a.name);
    require_shapes(g, rho, theta);
    out.report = check_cocycle3(g, rho, theta);
  } else if (k == "cocycle_lie") {
    const auto& g = ws.get<LieAlgebra>(need(a.algebra, "algebra"));
    const auto& rho = ws.get<RepresentationLie>(need(a.rep, "rep"));
    const auto& theta = ws.get<TwoCocycleLie>(a.name);
    require_shapes(g, rho, theta);
    out.report = check_cocycle_lie(g, rho, theta);
  } else if (k == "twisted") {
    const auto& op = ws.get<TwistedOperator>(a.name);
    out.report = check_twisted(op);
    out.report.merge(check_filippov(op.algebra), "context");
    out.report.merge(check_rep3(op.algebra, op.rep), "context");
    out.report.merge(check_cocycle3(op.algebra, op.rep, op.cocycle), "context");
  } else if (k == "twisted_lie") {
    const auto& op = ws.get<LieTwistedOperator>(a.name);
    out.report = check_twisted_lie(op);
    out.report.merge(check_jacobi(op.algebra), "context");
    out.report.merge(check_rep_lie(op.algebra, op.rep), "context");
    out.report.merge(check_cocycle_lie(op.algebra, op.rep, op.cocycle), "context");
  } else if (k == "graph") {
    out.report = check_graph_subalgebra(ws.get<TwistedOperator>(a.name));
  } else if (k == "3ns") {
    out.report = check_3ns(ws.get<ThreeNSLieAlgebra>(a.name));
  } else if (k == "ns") {
    out.report = check_ns_binary(ws.get<NSLieAlgebra>(a.name));
  } else if (k == "nijenhuis") {
    const auto& g = ws.get<ThreeLieAlgebra>(need(a.algebra, "algebra"));
    const auto& n = ws.get<LinearMap>(a.name);
    if (n.rows() != g.dim() || n.cols() != g.dim()) throw ShapeMismatch("Nijenhuis operator must be dim g x dim g");
    out.report = nijenhuis_check(g, n);
  } else if (k == "trace") {
    return verify_trace(ws, a);
  } else if (k == "family") {
    const FormalResult r = formal_check(ws.get<DeformationFamily>(a.name));
    out.report = r.report;
    out.report.merge(r.bracket_report, "bracket");
  } else {
    throw ParseError("unknown kind '" + k + "' for verify", "");
  }
  out.report.set_subject("verify " + k + " " + a.name);
  return out;
}

namespace {

Outcome construct_induce(const Workspace& ws, const ConstructArgs& a) {
  Outcome out;
  const std::string name = a.name.empty() ? "induced" : a.name;
  const auto& tau = ws.get<TraceMap>(need(a.trace, "trace"));
  const std::string& what = need(a.induce, "what");
  const std::string& src = need(a.source, "source");
  if (what == "3lie") {
    const auto g3 = induce_3lie(ws.get<LieAlgebra>(src), tau);
    out.report = check_filippov(g3);
    out.produced.add(name, g3);
  } else if (what == "rep") {
    const auto& g = ws.get<LieAlgebra>(need(a.algebra, "algebra"));
    const auto rho = induce_rep(g, ws.get<RepresentationLie>(src), tau);
    out.report = check_rep3(induce_3lie(g, tau), rho);
    out.produced.add(name, rho);
  } else if (what == "cocycle") {
    const auto& g = ws.get<LieAlgebra>(need(a.algebra, "algebra"));
    const auto& rho = ws.get<RepresentationLie>(need(a.rep, "rep"));
    const auto theta = induce_cocycle(g, rho, ws.get<TwoCocycleLie>(src), tau);
    out.report = check_cocycle3(induce_3lie(g, tau), induce_rep(g, rho, tau), theta);
    out.produced.add(name, theta);
  } else if (what == "twisted") {
    const auto op = induced_twisted(ws.get<LieTwistedOperator>(src), tau);
    out.report = check_twisted(op);
    add_operator(out.produced, name, op);
  } else if (what == "3ns") {
    const auto ns = induce_3ns(ws.get<NSLieAlgebra>(src), tau);
    out.report = check_3ns(ns);
    out.produced.add(name, ns);
  } else if (what == "diagram") {
    const auto& op = ws.get<LieTwistedOperator>(src);
    if (a.trace_prime.empty()) {
      out.report = diagram_check(op, tau);
    } else {
      const auto& tau2 = ws.get<TraceMap>(a.trace_prime);
      out.report = diagram_check(op, tau, tau2);
      out.result["discrepancy_formula_holds"] = diagram_discrepancy(op, tau, tau2).passed();
    }
  } else {
    throw ParseError("unknown induce target '" + what + "'", "");
  }
  out.report.set_subject("induce " + what + " " + src);
  return out;
}

Outcome construct_derive_ns(const Workspace& ws, const ConstructArgs& a) {
  Outcome out;
  const std::string& from = need(a.from, "from");
  const std::string name = a.name.empty() ? "derived" : a.name;
  if (from == "nijenhuis") {
    const auto ns = from_nijenhuis_ns(ws.get<ThreeLieAlgebra>(need(a.algebra, "algebra")),
                                      ws.get<LinearMap>(need(a.map, "map")));
    out.report = check_3ns(ns);
    out.produced.add(name, ns);
  } else if (from == "twisted") {
    const auto& op = ws.get<TwistedOperator>(need(a.op, "op"));
    const auto ns = from_twisted_ns(op);
    out.report = check_3ns(ns);
    out.report.merge(check_bracket_morphism(star_bracket(ns), induced_bracket_unchecked(op), Mat::identity(ns.dim())),
                     "subadjacent");
    out.produced.add(name, ns);
  } else if (from == "compatible") {
    const auto& op = ws.get<TwistedOperator>(need(a.op, "op"));
    const auto ns = compatible_from_invertible(op);
    out.report = check_3ns(ns);
    out.report.merge(check_bracket_morphism(star_bracket(ns), op.algebra, Mat::identity(ns.dim())), "subadjacent");
    out.produced.add(name, ns);
  } else if (from == "subadjacent") {
    const auto g = subadjacent(ws.get<ThreeNSLieAlgebra>(need(a.source, "source")));
    out.report = check_filippov(g);
    out.produced.add(name, g);
  } else if (from == "left-mult") {
    const auto pkg = left_mult_package(ws.get<ThreeNSLieAlgebra>(need(a.source, "source")));
    out.report.merge(pkg.rep_report);
    out.report.merge(pkg.cocycle_report);
    out.report.merge(pkg.twisted_report);
    add_operator(out.produced, name, pkg.identity);
  } else {
    throw ParseError("unknown derive-ns source '" + from + "'", "");
  }
  out.report.set_subject("derive-ns " + from);
  return out;
}

}  // namespace

Outcome run_construct(const Workspace& ws, const ConstructArgs& a) {
  Outcome out;
  const std::string& what = a.what;
  if (what == "semidirect") {
    ThreeLieAlgebra big;
    if (!a.op.empty()) {
      const auto& op = ws.get<TwistedOperator>(a.op);
      big = semidirect_twisted(op.algebra, op.rep, op.cocycle);
    } else {
      const auto& g = ws.get<ThreeLieAlgebra>(need(a.algebra, "algebra"));
      const auto& rho = ws.get<Representation3>(need(a.rep, "rep"));
      const auto& theta = ws.get<TwoCocycle3>(need(a.cocycle, "cocycle"));
      require_shapes(g, rho, theta);
      big = semidirect_twisted(g, rho, theta);
    }
    out.report = check_filippov(big);
    out.produced.add(a.name.empty() ? "semidirect" : a.name, big);
  } else if (what == "nijenhuis") {
    const auto& g = ws.get<ThreeLieAlgebra>(need(a.algebra, "algebra"));
    const auto pkg = nijenhuis_package(g, ws.get<LinearMap>(need(a.map, "map")));
    for (const auto& r : pkg.validation) out.report.merge(r);
    add_operator(out.produced, a.name.empty() ? "nijenhuis" : a.name, pkg.identity);
  } else if (what == "induce") {
    return construct_induce(ws, a);
  } else if (what == "derive-ns") {
    return construct_derive_ns(ws, a);
  } else if (what == "gauge" || what == "shift") {
    const auto& op = ws.get<TwistedOperator>(need(a.op, "op"));
    const auto& theta = ws.get<LinearMap>(need(a.theta, "theta"));
    const TwistedOperator res = what == "gauge" ? gauge_transform(op, theta) : coboundary_shift(op, theta);
    out.report = check_twisted(res);
    if (what == "shift") out.report.merge(check_cocycle3(res.algebra, res.rep, res.cocycle), "context");
    add_operator(out.produced, a.name.empty() ? what : a.name, res);
  } else {
    throw ParseError("unknown construction '" + what + "'", "");
  }
  out.report.set_subject("construct " + what);
  return out;
}

Outcome run_cohomology(const Workspace& ws, const CohomologyArgs& a) {
  const auto& op = ws.get<TwistedOperator>(a.op);
  Outcome out;
  out.report = check_twisted(op);
  out.report.set_subject("cohomology " + a.op + " degree " + std::to_string(a.degree));
  if (!out.report.passed()) return out;
  const CohomologyResult r = cohomology_dims(op, a.degree, a.cap == 0 ? kDefaultCochainCap : a.cap, a.threads);
  out.result["degree"] = r.degree;
  out.result["dim_cochains"] = r.dim_cochains;
  out.result["dim_cocycles"] = r.dim_cocycles;
  out.result["dim_coboundaries"] = r.dim_coboundaries;
  out.result["dim_cohomology"] = r.dim_cohomology;
  json reps = json::array();
  for (const auto& v : r.representatives) reps.push_back(vec_json(v));
  out.result["representatives"] = std::move(reps);
  out.report.note("H^" + std::to_string(r.degree) + " = " + std::to_string(r.dim_cohomology) + " (C " +
                  std::to_string(r.dim_cochains) + ", Z " + std::to_string(r.dim_cocycles) + ", B " +
                  std::to_string(r.dim_coboundaries) + ")");
  return out;
}

Outcome run_deform(const Workspace& ws, const DeformArgs& a) {
  Outcome out;
  if (a.mode == "check") {
    if (!a.family.empty()) {
      const FormalResult r = formal_check(ws.get<DeformationFamily>(a.family));
      out.report = r.report;
      out.report.merge(r.bracket_report, "bracket");
      out.result["bracket_degrees"] = r.brackets.size();
    } else {
      const auto& op = ws.get<TwistedOperator>(need(a.op, "op"));
      const auto& t1 = ws.get<LinearMap>(need(a.term, "term"));
      out.report = infinitesimal_check(op, t1);
      const bool closed = twisted_diff(op, Cochain::from_linear_map(t1)).is_zero();
      out.result["one_cocycle"] = closed;
      if (closed) out.result["class_representative"] = vec_json(flatten(one_cocycle_class(op, t1)));
    }
    out.report.set_subject("deform check");
  } else if (a.mode == "equiv") {
    const auto& pair = ws.get<EquivalencePair>(need(a.pair, "pair"));
    if (!a.family.empty()) {
      out.report = equivalence_check_formal(ws.get<DeformationFamily>(a.family),
                                            ws.get<DeformationFamily>(need(a.family2, "family2")), pair, a.truncation);
    } else {
      const auto& op = ws.get<TwistedOperator>(need(a.op, "op"));
      const auto& t1 = ws.get<LinearMap>(need(a.term, "term"));
      const auto& t2 = ws.get<LinearMap>(need(a.term2, "term2"));
      out.report = equivalence_check_infinitesimal(op, t1, t2, pair.x);
      if (out.report.passed()) {
        out.result["same_class"] = one_cocycle_class(op, t1) == one_cocycle_class(op, t2);
      }
    }
    out.report.set_subject("deform equiv");
  } else {
    throw ParseError("unknown deform mode '" + a.mode + "'", "");
  }
  return out;
}

}  // namespace trilie::cli
