#include "ezdlab/json_io.hpp"

#include <sstream>

namespace ezdlab {

namespace {

Json optional_poly(const std::optional<HomogPoly>& p) { return p ? Json(to_string(*p)) : Json(nullptr); }

template <typename T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string join_values(const std::vector<std::size_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

Json to_json(const ComplementSearch& s) {
  Json j;
  j["degree"] = optional_value(s.degree);
  j["annihilator_dim"] = s.annihilator_dim;
  j["q"] = optional_poly(s.q);
  j["reason"] = s.reason;
  return j;
}

Json to_json(const InstanceRecord& rec) {
  Json j;
  j["index"] = rec.index;
  j["ideal"] = to_string(rec.ideal);
  j["kind"] = to_string(rec.ideal.kind);
  j["bound"] = rec.bound;
  j["hilbert"] = rec.hilbert;
  j["decision"] = to_string(rec.verdict.decision);
  j["exact"] = rec.verdict.exact;
  j["witness_q"] = optional_poly(rec.verdict.witness_q);
  j["d"] = optional_value(rec.d);
  j["dim_prev"] = optional_value(rec.dim_prev);
  j["dim_d"] = optional_value(rec.dim_d);
  j["counterexample"] = rec.counterexample;
  if (!rec.verdict.note.empty()) j["note"] = rec.verdict.note;
  if (rec.binomial) {
    const auto& b = *rec.binomial;
    Json bj;
    bj["f1"] = to_string(b.f1);
    bj["f2"] = to_string(b.f2);
    bj["dim_r2"] = b.dim_r2;
    bj["asserted"] = b.asserted;
    Json trials = Json::array();
    for (const auto& t : b.trials) {
      Json tj;
      tj["form"] = to_string(t.form);
      tj["annihilator_dim_1"] = t.annihilator_dim;
      tj["q"] = optional_poly(t.q);
      if (t.decomposition) {
        tj["q1"] = to_string(t.decomposition->q1);
        tj["q2"] = to_string(t.decomposition->q2);
        tj["alpha"] = to_string(t.decomposition->alpha);
        tj["fact_violations"] = t.fact_violations;
      }
      tj["dim_quotient_plus_ell_2"] = t.sequence.dim_quotient_plus_ell;
      tj["dim_colon_1"] = t.sequence.dim_colon;
      tj["identity_holds"] = t.sequence.identity_holds;
      tj["dim_initial_plus_ell_2"] = optional_value(t.sequence.dim_initial_plus_ell);
      trials.push_back(std::move(tj));
    }
    bj["trials"] = std::move(trials);
    j["binomial"] = std::move(bj);
  } else {
    j["support_violations"] = rec.support_violations;
  }
  return j;
}

Json to_json(const Counterexample& c) {
  return Json{{"index", c.index}, {"ideal", c.ideal}, {"description", c.description}};
}

}  // namespace

Json to_json(const HilbertFn& h) {
  Json j;
  j["values"] = h.values;
  j["artinian_within_bound"] = h.artinian_within_bound;
  j["top_degree"] = optional_value(h.top_degree);
  return j;
}

Json to_json(const EzdReport& r) {
  Json j;
  j["ring"] = r.ring_id;
  j["x"] = to_string(r.x);
  j["y"] = to_string(r.y);
  j["product_zero"] = r.product_zero;
  Json table = Json::array();
  for (const auto& row : r.table) {
    table.push_back(Json{{"degree", row.degree},
                         {"dim_r", row.dim_r},
                         {"dim_ann_x", row.dim_ann_x},
                         {"dim_ideal_y", row.dim_ideal_y},
                         {"ann_x_equals_ideal_y", row.ann_x_equals_ideal_y},
                         {"dim_ann_y", row.dim_ann_y},
                         {"dim_ideal_x", row.dim_ideal_x},
                         {"ann_y_equals_ideal_x", row.ann_y_equals_ideal_x}});
  }
  j["table"] = std::move(table);
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  return j;
}

Json to_json(const GenericVerdict& v) {
  Json j;
  j["decision"] = to_string(v.decision);
  j["exact"] = v.exact;
  j["witness_q"] = optional_poly(v.witness_q);
  j["witness_degree"] = optional_value(v.witness_degree);
  j["trials"] = v.trials;
  j["seed"] = v.seed;
  Json outcomes = Json::array();
  for (const auto& o : v.outcomes) {
    Json oj = to_json(o.search);
    oj["form"] = to_string(o.form);
    if (o.search.report) oj["report"] = to_json(*o.search.report);
    outcomes.push_back(std::move(oj));
  }
  j["outcomes"] = std::move(outcomes);
  j["note"] = v.note;
  return j;
}

Json to_json(const WlpReport& w) {
  Json j;
  j["holds"] = w.holds;
  j["truncated"] = w.truncated;
  Json degrees = Json::array();
  for (const auto& d : w.degrees)
    degrees.push_back(Json{{"degree", d.degree},
                           {"dim_from", d.dim_from},
                           {"dim_to", d.dim_to},
                           {"rank", d.rank},
                           {"maximal", d.maximal}});
  j["degrees"] = std::move(degrees);
  j["failing_degrees"] = w.failing_degrees;
  j["witness_form"] = optional_poly(w.witness_form);
  j["trials"] = w.trials;
  j["seed"] = w.seed;
  return j;
}

Json to_json(const SocleReport& s) {
  return Json{{"dims", s.dims}, {"total", s.total}, {"gorenstein", s.gorenstein}, {"truncated", s.truncated}};
}

Json to_json(const YoshinoConditions& y) {
  return Json{{"c1", y.c1}, {"c2", y.c2}, {"gorenstein", y.gorenstein}};
}

Json to_json(const ClosedFormExample& ex) {
  Json j;
  j["n"] = ex.n;
  j["d"] = ex.d;
  j["ideal"] = to_string(ex.ideal);
  j["L"] = to_string(ex.ell);
  j["Q"] = to_string(ex.q);
  j["canonical_q"] = optional_poly(ex.canonical_q);
  j["q_matches_canonical"] = ex.q_matches_canonical;
  j["report"] = to_json(ex.report);
  return j;
}

Json to_json(const PairProbeReport& p) {
  return Json{{"skipped", p.skipped},         {"reason", p.reason},   {"seed_form", optional_poly(p.seed_form)},
              {"seed_q", optional_poly(p.seed_q)}, {"samples", p.samples}, {"successes", p.successes}};
}

Json to_json(const ScanConfig& cfg) {
  return Json{{"nvars", cfg.nvars},
              {"max_degree", cfg.max_degree},
              {"bound", cfg.bound},
              {"require_artinian", cfg.require_artinian},
              {"symmetry_reduction", cfg.symmetry_reduction},
              {"seed", cfg.seed},
              {"trials", cfg.trials}};
}

Json to_json(const ScanReport& report, bool full, bool include_timing) {
  Json j;
  j["family"] = report.family;
  // worker count is left out: it must not change the output
  j["config"] = to_json(report.config);
  j["examined"] = report.examined;
  j["with_generic_ezd"] = report.with_generic_ezd;
  j["skipped"] = report.skipped.size();
  j["passed"] = report.passed();
  Json ce = Json::array();
  for (const auto& c : report.counterexamples) ce.push_back(to_json(c));
  j["counterexamples"] = std::move(ce);
  Json flags = Json::array();
  for (const auto& c : report.red_flags) flags.push_back(to_json(c));
  j["red_flags"] = std::move(flags);
  if (full) {
    Json instances = Json::array();
    for (const auto& rec : report.instances) instances.push_back(to_json(rec));
    j["instances"] = std::move(instances);
    Json skipped = Json::array();
    for (const auto& s : report.skipped) skipped.push_back(Json{{"ideal", s.ideal}, {"reason", s.reason}});
    j["skipped_instances"] = std::move(skipped);
  }
  if (include_timing) j["seconds"] = report.seconds;
  return j;
}

std::string scan_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "index,ideal,hilbert,decision,exact,witness_q,d,dim_prev,dim_d,counterexample\n";
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& rec : report.instances) {
    out << rec.index << ',' << csv_quote(to_string(rec.ideal)) << ',' << csv_quote(join_values(rec.hilbert, ' '))
        << ',' << to_string(rec.verdict.decision) << ',' << (rec.verdict.exact ? "true" : "false") << ','
        << csv_quote(rec.verdict.witness_q ? to_string(*rec.verdict.witness_q) : "") << ',' << opt(rec.d) << ','
        << opt(rec.dim_prev) << ',' << opt(rec.dim_d) << ',' << (rec.counterexample ? "true" : "false") << '\n';
  }
  return out.str();
}

Json envelope(const std::string& command, const Json& payload) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
  return j;
}

}  // namespace ezdlab
