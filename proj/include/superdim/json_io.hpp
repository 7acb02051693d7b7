#pragma once

// JSON emission with fixed key order; big integers travel as decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "superdim/cup_diagram.hpp"
#include "superdim/moves.hpp"
#include "superdim/multiplicity.hpp"
#include "superdim/reduction.hpp"
#include "superdim/weights.hpp"

namespace superdim {

using Json = nlohmann::ordered_json;

inline Json json_interval_list(const std::vector<Interval>& xs) {
  Json out = Json::array();
  for (const Interval& x : xs) out.push_back({x.lo, x.hi});
  return out;
}

inline Json diagram_json(const CupDiagram& d) {
  Json out;
  out["vees"] = d.vees;
  Json cups = Json::array();
  for (const Cup& c : d.cups) cups.push_back({c.open, c.close});
  out["cups"] = cups;
  out["sectors"] = json_interval_list(d.sectors);
  out["segments"] = json_interval_list(d.segments);
  return out;
}

inline Json diagram_json(const PosSet& vees) { return diagram_json(build(vees)); }

inline CupDiagram diagram_from_json(const Json& j) {
  return build(make_pos_set(j.at("vees").get<PosSet>()));
}

inline Json expansion_json(const MoveExpansion& e) {
  Json out;
  out["center"] = diagram_json(e.site.center);
  out["site"] = e.site.i;
  out["kind"] = site_kind_name(e.site.kind);
  Json middle = Json::array();
  for (const MoveConstituent& c : e.middle) {
    Json entry;
    entry["vees"] = c.vees;
    entry["move"] = move_kind_name(c.move);
    middle.push_back(std::move(entry));
  }
  out["middle"] = middle;
  return out;
}

inline Json trace_step_json(const TraceStep& step) {
  Json out;
  out["lhs"] = diagram_json(step.relation.lhs);
  out["site"] = step.relation.site;
  Json rhs = Json::array();
  for (const PosSet& x : step.relation.rhs) rhs.push_back(diagram_json(x));
  out["rhs"] = rhs;
  out["algorithm"] = algorithm_name(step.pivot.algorithm);
  return out;
}

inline Json sdim_json(const SdimResult& r) {
  Json out;
  out["maximal_atypical"] = r.maximal_atypical;
  out["p"] = r.p;
  out["m"] = r.multiplicity.str();
  out["rho"] = r.rho;
  out["det_twist"] = r.det_twist;
  out["dim_rho"] = r.dim_rho.str();
  out["sdim"] = r.sdim.str();
  return out;
}

inline SdimResult sdim_from_json(const Json& j) {
  SdimResult r;
  r.maximal_atypical = j.at("maximal_atypical").get<bool>();
  r.p = j.at("p").get<Pos>();
  r.p_mod2 = static_cast<int>(((r.p % 2) + 2) % 2);
  r.multiplicity = Int(j.at("m").get<std::string>());
  r.rho = j.at("rho").get<std::vector<Pos>>();
  r.det_twist = j.at("det_twist").get<Pos>();
  r.dim_rho = Int(j.at("dim_rho").get<std::string>());
  r.sdim = Int(j.at("sdim").get<std::string>());
  return r;
}

inline Json labeling_json(const SuperWeight& w) {
  Labeling lab = labeling(w);
  Json out;
  out["m"] = w.m;
  out["n"] = w.n;
  out["parts"] = w.parts;
  out["crosses"] = lab.crosses;
  out["circles"] = lab.circles;
  out["vees"] = lab.vees;
  out["atypicality"] = static_cast<int>(lab.vees.size());
  out["maximal_atypical"] = static_cast<int>(lab.vees.size()) == w.n;
  Parity par = parity(w);
  out["p"] = par.p;
  out["p_mod2"] = par.mod2;
  out["kostant"] = is_kostant(w);
  return out;
}

inline Json ext_profiles_json(const std::vector<ExtProfile>& xs) {
  Json out = Json::array();
  for (const ExtProfile& x : xs) {
    Json entry;
    entry["degree"] = x.degree;
    entry["dimension"] = x.dimension;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace superdim
