#include "rado/report.hpp"

namespace rado {

Json report_header(const std::string& command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

Json to_json(const SolutionWitness& w) { return Json(w.values); }

Json to_json(const ValidationResult& r) {
  Json j;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["color"] = r.color;
    j["witness"] = to_json(r.witness);
  }
  return j;
}

Json to_json(const ColorClassStats& s) {
  Json j;
  j["sizes"] = s.sizes;
  j["sigma"] = s.sigma;
  j["original_color"] = s.original_color;
  return j;
}

Json to_json(const ChainStep& s) {
  Json j;
  j["color"] = s.color;
  j["before"] = s.before;
  j["after"] = s.after;
  j["required"] = s.required;
  j["bound_held"] = s.bound_held;
  j["source"] = s.set_source;
  if (s.anchor != 0) j["anchor"] = s.anchor;
  j["next_set"] = s.next_set;
  return j;
}

Json to_json(const ExtractionOutcome& e) {
  Json j;
  j["equation"] = e.equation.text();
  j["initial_size"] = e.initial_set.size();
  Json steps = Json::array();
  for (const auto& s : e.steps) steps.push_back(to_json(s));
  j["steps"] = steps;
  if (e.witness) {
    j["witness"] = to_json(*e.witness);
    j["witness_color"] = e.witness_color;
    j["witness_source"] = e.witness_source;
  } else {
    j["witness"] = nullptr;
  }
  if (!e.cumulative.empty()) {
    Json rows = Json::array();
    for (const auto& r : e.cumulative) {
      Json row;
      row["m"] = r.m;
      row["set_size"] = r.set_size;
      row["bound"] = r.bound;
      row["held"] = r.held;
      rows.push_back(row);
    }
    j["cumulative"] = rows;
  }
  return j;
}

Json to_json(const ShiftIntersection& s) {
  Json j;
  j["shifts"] = s.shifts;
  j["intersection"] = s.intersection;
  j["required"] = s.required;
  j["avg_num"] = s.avg_num;
  j["avg_den"] = s.avg_den;
  j["exhaustive"] = s.exhaustive;
  j["samples"] = s.samples;
  return j;
}

Json to_json(const PipelineReport& p) {
  Json j;
  j["doubled_size"] = p.doubled_size;
  j["k"] = p.k;
  j["large_class_bound_holds"] = p.large_class_bound_holds;
  j["chosen_colors"] = p.chosen_colors;
  Json graphs = Json::array();
  for (const auto& g : p.graphs) {
    Json rec;
    rec["color"] = g.color;
    rec["connection_size"] = g.connection.size();
    rec["cycle_free"] = g.cycle_free;
    if (!g.cycle_free) rec["cycle"] = g.cycle;
    rec["independent_set"] = g.independent_set;
    rec["set_source"] = g.set_source;
    graphs.push_back(rec);
  }
  j["graphs"] = graphs;
  j["shift"] = p.shift ? to_json(*p.shift) : Json(nullptr);
  if (p.phase6) {
    Json ph;
    ph["difference_set"] = p.phase6->difference_set;
    ph["clean"] = p.phase6->clean;
    if (!p.phase6->clean) {
      ph["offending_element"] = p.phase6->offending_element;
      ph["offending_color"] = p.phase6->offending_color;
      ph["edge"] = Json::array({p.phase6->edge_u, p.phase6->edge_v});
    }
    j["phase6"] = ph;
  } else {
    j["phase6"] = nullptr;
  }
  Json chain = Json::array();
  for (const auto& s : p.chain) chain.push_back(to_json(s));
  j["chain"] = chain;
  if (p.witness) {
    j["witness"] = to_json(*p.witness);
    j["witness_color"] = p.witness_color;
    j["witness_phase"] = p.witness_phase;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const MoveRecord& m) {
  Json j;
  j["color"] = m.color;
  j["from_level"] = m.from_level;
  j["to_level"] = m.to_level;
  j["element"] = m.element;
  j["p1"] = m.p1;
  j["p2"] = m.p2;
  return j;
}

Json to_json(const WitnessReport& w) {
  Json j;
  j["equation"] = w.equation.text();
  j["outcome"] = w.stalled ? "stalled" : "witness";
  if (w.witness) {
    j["witness"] = to_json(*w.witness);
    j["witness_color"] = w.witness_color;
  } else {
    j["witness"] = nullptr;
  }
  j["moves"] = w.moves;
  Json log = Json::array();
  for (const auto& m : w.log) log.push_back(to_json(m));
  j["log"] = log;
  return j;
}

Json to_json(const SearchResult& s) {
  Json j;
  j["equation"] = s.equation.text();
  j["colors"] = s.num_colors;
  j["largest_valid_N"] = s.largest_valid_n;
  j["least_impossible_N"] =
      s.fail_certified ? Json(s.largest_valid_n + 1) : Json(nullptr);
  j["complete"] = s.complete;
  j["fail_certified"] = s.fail_certified;
  j["nodes"] = s.nodes;
  j["cap"] = s.cap;
  if (s.witness) {
    Json runs = Json::array();
    for (const auto& r : s.witness->runs())
      runs.push_back(Json::array({r.lo, r.hi, r.color}));
    j["witness_runs"] = runs;
  } else {
    j["witness_runs"] = nullptr;
  }
  return j;
}

Json to_json(const CandidateSetsResult& c) {
  Json j;
  Json fams = Json::array();
  for (const auto& f : c.families) {
    Json fam;
    fam["label"] = f.label;
    fam["members"] = f.members;
    fams.push_back(fam);
  }
  j["families"] = fams;
  j["best_index"] = c.best_index;
  j["guarantee"] = c.guarantee;
  if (c.violation) {
    Json v;
    v["family"] = c.violation->family;
    v["u"] = c.violation->u;
    v["v"] = c.violation->v;
    v["diff"] = c.violation->diff;
    v["relation"] = to_json(c.violation->relation);
    v["relation_form"] = Json::array({c.violation->relation_form.lhs, c.violation->relation_form.rhs});
    j["violation"] = v;
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

}  // namespace rado
