#include "genergy/report_json.hpp"

#include <cstdio>

namespace genergy {

Json to_json(const BoundReport& r) {
  Json diags = Json::array();
  for (const auto& d : r.diagnostics) {
    Json measured = Json::object();
    for (const auto& [key, value] : d.measured) measured[key] = value;
    diags.push_back(Json{{"label", d.label}, {"held", d.held}, {"measured", std::move(measured)}});
  }
  Json j;
  j["name"] = std::string(to_string(r.name));
  j["applicable"] = r.applicable;
  j["value"] = r.value ? Json(*r.value) : Json(nullptr);
  j["diagnostics"] = std::move(diags);
  return j;
}

Json to_json(const CertificationReport& r) {
  Json bounds = Json::array();
  for (const auto& b : r.reports) bounds.push_back(to_json(b));
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"name", std::string(to_string(v.name))},
                              {"bound", v.bound},
                              {"energy", v.energy},
                              {"excess", v.excess}});
  }
  Json j;
  j["energy"] = r.energy;
  j["bounds"] = std::move(bounds);
  j["violations"] = std::move(violations);
  j["tolerance"] = r.tolerance;
  return j;
}

Json to_json(const EnsembleStats& s) {
  Json trials = Json::array();
  for (const auto& t : s.per_trial) {
    trials.push_back(Json{{"energy", t.energy}, {"sigma1", t.sigma1}, {"sigma2", t.sigma2}});
  }
  Json j;
  j["n"] = s.n;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["mean_energy_ratio"] = s.mean_energy_ratio;
  j["mean_sigma1_ratio"] = s.mean_sigma1_ratio;
  j["max_sigma2_ratio"] = s.max_sigma2_ratio;
  j["per_trial"] = std::move(trials);
  return j;
}

std::string_view to_string(SearchMethod m) {
  return m == SearchMethod::exhaustive ? "exhaustive" : "local";
}

Json to_json(const SearchResult& r) {
  Json j;
  j["n"] = r.n;
  j["method"] = std::string(to_string(r.method));
  j["best_energy"] = r.best_energy;
  j["km_absolute"] = r.km_absolute;
  j["ratio"] = r.ratio;
  j["evaluations"] = r.evaluations;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["best_graph"] = serialize_edge_list(r.best_graph);
  return j;
}

std::string format_text(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s.find_first_of(".eni") == std::string::npos) s += ".0";
  return s;
}

}  // namespace genergy
