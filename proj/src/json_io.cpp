#include "degsplit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "degsplit/errors.hpp"

namespace degsplit {

double round_sig12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const VertexSet& s) { return Json(s.ids()); }

std::string case_name(Case c) { return c == Case::I ? "I" : "II"; }

Json structure_to_json(const Claim1Structure& s) {
  Json arcs = Json::array();
  for (auto [u, v] : s.D.arcs()) arcs.push_back({u, v});
  Json caps = Json::object();
  for (std::size_t v = 0; v < s.caps_at_stop.size(); ++v) caps[std::to_string(v)] = s.caps_at_stop[v];
  return Json{{"t", s.t},
              {"X", to_json(s.X)},
              {"Y", to_json(s.Y)},
              {"y_last", s.y_last},
              {"arcs", std::move(arcs)},
              {"caps_at_stop", std::move(caps)}};
}

Json calibration_to_json(const Calibration& cal) {
  return Json{{"p", round_sig12(cal.p)},
              {"residual", round_sig12(cal.residual)},
              {"second_condition_ok", cal.second_condition_ok},
              {"case", case_name(cal.which)}};
}

Json partition_to_json(const Graph& g, std::size_t k, const PartitionResult& r) {
  return Json{{"n", g.num_vertices()},
              {"k", k},
              {"case", case_name(r.which)},
              {"t", r.t},
              {"p", round_sig12(r.p)},
              {"trials", r.trials_used},
              {"seed", r.seed},
              {"S", to_json(r.partition.S)},
              {"T", to_json(r.partition.T)},
              {"verified", r.verification.pass()}};
}

Json failure_to_json(const FailureReport& f) {
  Json trials = Json::array();
  for (const auto& d : f.diagnostics) {
    trials.push_back({{"index", d.index}, {"B", d.size_B}, {"edges_B", d.edges_B}, {"L", d.size_L}});
  }
  return Json{{"failure", "no accepted trial"}, {"trials", f.trials}, {"diagnostics", std::move(trials)}};
}

Json report_to_json(const Report& r) {
  Json items = Json::array();
  for (const auto& item : r.items()) {
    items.push_back({{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
  }
  return Json{{"pass", r.pass()}, {"items", std::move(items)}};
}

VertexSet vertex_set_member(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
    throw InvalidArgument("missing id array '" + key + "'");
  }
  std::vector<Vertex> ids;
  for (const auto& v : j[key]) {
    if (!v.is_number_unsigned()) throw InvalidArgument("non-integer id in '" + key + "'");
    ids.push_back(v.get<Vertex>());
  }
  const auto count = ids.size();
  VertexSet s(std::move(ids));
  if (s.size() != count) throw InvalidArgument("duplicate id in '" + key + "'");
  return s;
}

}  // namespace degsplit
