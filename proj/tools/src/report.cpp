#include "toric/cli/report.hpp"

#include "toric/errors.hpp"

namespace toric::cli {

Json Report::to_json() const {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  Json prov;
  prov["version"] = provenance.version;
  prov["seed"] = provenance.seed ? Json(*provenance.seed) : Json(nullptr);
  prov["tolerances"] = provenance.tolerances;
  j["provenance"] = prov;
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

Report Report::from_json(const Json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion)
    throw InvalidArgument("unsupported report schema");
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  const auto& prov = j.at("provenance");
  r.provenance.version = prov.at("version").get<std::string>();
  if (!prov.at("seed").is_null()) r.provenance.seed = prov.at("seed").get<std::uint64_t>();
  r.provenance.tolerances = prov.at("tolerances");
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Quantity& q) {
  Json j;
  if (q.is_exact()) {
    j["exact"] = q.rational().str();
    j["value"] = q.value();
  } else {
    j["value"] = q.value();
    j["error_bar"] = q.error_bar();
  }
  return j;
}

Json to_json(const WeightSeq& w) {
  Json a = Json::array();
  for (const auto& x : w.entries()) a.push_back(to_json(x));
  return a;
}

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace

Json to_json(const PackingResult& r) {
  Json j;
  j["result"] = r.packs ? "Yes" : "No";
  j["reason"] = r.reason;
  j["criterion"] = PackingResult::criterion;
  j["initial"] = {{"t", to_json(r.reduction.t)}, {"vector", rationals(r.reduction.weights)}};
  Json steps = Json::array();
  for (const auto& s : r.reduction.trace) {
    steps.push_back({{"indices", s.indices},
                     {"t", to_json(s.t)},
                     {"vector", rationals(s.weights)},
                     {"legal_hypothesis", s.legal_hypothesis}});
  }
  j["steps"] = steps;
  j["final"] = {{"t", to_json(r.final_state.t)}, {"vector", rationals(r.final_state.weights)}};
  j["conserved"] = {{"linear", to_json(r.reduction.linear_invariant())},
                    {"quadratic", to_json(r.reduction.quadratic_invariant())}};
  return j;
}

Json to_json(const EmbeddingCertificate& c) {
  Json j;
  j["name"] = c.name;
  j["source"] = c.source;
  j["target"] = c.target;
  j["verified"] = c.verified;
  j["failed_hypotheses"] = c.failed_hypotheses;
  Json route = Json::array();
  for (const auto& step : c.route) {
    Json s;
    s["description"] = step.description;
    if (step.weights) s["weights"] = to_json(*step.weights);
    if (step.t) s["t"] = to_json(*step.t);
    if (step.packing) s["packing"] = to_json(*step.packing);
    route.push_back(s);
  }
  j["route"] = route;
  return j;
}

Json to_json(const DeltaEllBound& d) {
  Json j;
  j["delta_ell_upper"] = to_json(d.bound);
  j["route"] = d.route;
  j["witness"] = d.witness;
  j["certificate"] = d.certificate ? to_json(*d.certificate) : Json(nullptr);
  j["notes"] = d.notes;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["alpha_window"] =
      v.window ? Json::array({to_json(v.window->first), to_json(v.window->second)}) : Json(nullptr);
  j["delta_ell_upper"] = v.delta_ell_upper ? to_json(*v.delta_ell_upper) : Json(nullptr);
  j["delta_u_lower"] = v.delta_u_lower ? to_json(*v.delta_u_lower) : Json(nullptr);
  j["case"] = v.case_label;
  Json refs = Json::array(), certs = Json::array();
  for (const auto& c : v.certificates) {
    refs.push_back(c.name);
    certs.push_back(to_json(c));
  }
  j["certificate_refs"] = refs;
  j["certificates"] = certs;
  j["notes"] = v.notes;
  return j;
}

Json to_json(const torus::SpherePoint& p) { return Json::array({p.v1, p.v2, p.v3}); }

Json to_json(const torus::SpherePair& p) { return {{"v", to_json(p.v)}, {"w", to_json(p.w)}}; }

Json to_json(const torus::C2Point& p) {
  return {{"w", Json::array({p.w.real(), p.w.imag()})},
          {"z", Json::array({p.z.real(), p.z.imag()})}};
}

Json to_json(const torus::Tolerances& t) {
  return {{"unit_norm", t.unit_norm},
          {"agreement", t.agreement},
          {"symplectic", t.symplectic},
          {"fd_step", t.fd_step}};
}

}  // namespace toric::cli
