// ezdlab command-line front end.
//
// Exit codes: 0 pass, 1 negative verdict or counterexample, 2 usage error.

#include "ezdlab/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace ezdlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RingOptions {
  std::size_t nvars = 0;
  unsigned bound = 0;
  bool bound_given = false;
  std::string ideal_text;
  std::string file;
  std::string format = "table";
};

struct Loaded {
  IdealSpec spec;
  unsigned bound;
};

std::size_t env_workers() {
  if (const char* v = std::getenv("EZDLAB_WORKERS")) {
    try {
      return std::max<std::size_t>(1, std::stoul(v));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void add_ring_options(CLI::App* cmd, RingOptions& o) {
  cmd->add_option("ideal", o.ideal_text, "Ideal generators, e.g. \"x1^2, x1*x2 + x2^2\"");
  cmd->add_option("-f,--file", o.file, "Read the ideal from a file")->check(CLI::ExistingFile);
  cmd->add_option("-n,--nvars", o.nvars, "Number of variables (default: largest index used)");
  cmd->add_option("-D,--bound", o.bound, "Degree bound (default: the exact top bound for Artinian inputs)");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
}

/// `extend` lets Artinian monomial ideals grow their bound so verdicts are not truncated.
Loaded load_ring(const RingOptions& o, bool extend) {
  if (o.ideal_text.empty() == o.file.empty()) throw UsageError("give exactly one of an inline ideal or --file");
  std::string text = o.ideal_text;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Loaded l{parse_ideal(text, o.nvars), 0};
  l.bound = o.bound_given ? o.bound : default_degree_bound(l.spec);
  if (extend) l.bound = effective_degree_bound(l.spec, l.bound);
  return l;
}

std::string join(const std::vector<std::size_t>& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

void print_json(const std::string& command, const Json& payload) {
  std::cout << envelope(command, payload).dump(2) << '\n';
}

void print_ezd_table(const EzdReport& r) {
  std::cout << "x = " << to_string(r.x) << "\ny = " << to_string(r.y) << '\n';
  std::cout << "x*y = 0 in R: " << (r.product_zero ? "yes" : "no") << '\n';
  std::cout << "degree  dim R_d  dim Ann(x)_d  dim (y)_d  equal  dim Ann(y)_d  dim (x)_d  equal\n";
  for (const auto& row : r.table)
    std::cout << std::setw(6) << row.degree << std::setw(9) << row.dim_r << std::setw(14) << row.dim_ann_x
              << std::setw(11) << row.dim_ideal_y << std::setw(7) << (row.ann_x_equals_ideal_y ? "yes" : "no")
              << std::setw(14) << row.dim_ann_y << std::setw(11) << row.dim_ideal_x << std::setw(7)
              << (row.ann_y_equals_ideal_x ? "yes" : "no") << '\n';
  std::cout << "verdict: " << to_string(r.verdict);
  if (!r.reason.empty()) std::cout << " (" << r.reason << ')';
  std::cout << '\n';
}

void print_ezd_csv(const EzdReport& r) {
  std::cout << "degree,dim_r,dim_ann_x,dim_ideal_y,ann_x_equals_ideal_y,dim_ann_y,dim_ideal_x,ann_y_equals_ideal_x\n";
  for (const auto& row : r.table)
    std::cout << row.degree << ',' << row.dim_r << ',' << row.dim_ann_x << ',' << row.dim_ideal_y << ','
              << row.ann_x_equals_ideal_y << ',' << row.dim_ann_y << ',' << row.dim_ideal_x << ','
              << row.ann_y_equals_ideal_x << '\n';
}

int cmd_hilbert(const RingOptions& o) {
  const auto l = load_ring(o, false);
  const auto ring = build_quotient(l.spec, l.bound);
  const auto h = hilbert_function(ring);
  const bool artinian = is_artinian_within(ring);
  if (o.format == "json") {
    Json p = to_json(h);
    p["ideal"] = to_string(l.spec);
    p["kind"] = to_string(l.spec.kind);
    p["nvars"] = l.spec.nvars;
    p["bound"] = l.bound;
    p["artinian"] = artinian;
    print_json("hilbert", p);
  } else if (o.format == "csv") {
    std::cout << "degree,dim\n";
    for (std::size_t d = 0; d < h.values.size(); ++d) std::cout << d << ',' << h.values[d] << '\n';
  } else {
    std::cout << join(h.values) << '\n';
    std::cout << "artinian: " << (artinian ? "yes" : "no");
    if (h.top_degree) std::cout << " (top degree " << *h.top_degree << ")";
    else if (artinian) std::cout << " (R does not vanish within bound " << l.bound << ")";
    std::cout << '\n';
  }
  return kExitPass;
}

int cmd_ezd(const RingOptions& o, const std::string& form, const std::string& partner, std::size_t trials,
            std::uint64_t seed) {
  const auto l = load_ring(o, true);
  const auto ring = build_quotient(l.spec, l.bound);
  if (!partner.empty() && form.empty()) throw UsageError("--partner needs --form");

  if (!form.empty()) {
    const HomogPoly ell = parse_poly(form, l.spec.nvars);
    std::optional<EzdReport> report;
    std::string reason;
    std::optional<HomogPoly> q;
    if (!partner.empty()) {
      report = is_ezd_pair(ring, ell, parse_poly(partner, l.spec.nvars));
    } else {
      auto s = search_ezd_complement(ring, ell);
      report = s.report;
      reason = s.reason;
      q = s.q;
    }
    const bool pass = report && report->verdict == EzdVerdict::ExactPair;
    if (o.format == "json") {
      Json p;
      p["ideal"] = to_string(l.spec);
      p["bound"] = l.bound;
      p["form"] = to_string(ell);
      p["q"] = q ? Json(to_string(*q)) : Json(nullptr);
      p["report"] = report ? to_json(*report) : Json(nullptr);
      p["reason"] = reason;
      print_json("ezd", p);
    } else if (o.format == "csv") {
      if (report) print_ezd_csv(*report);
    } else {
      std::cout << "ring: " << to_string(l.spec) << '\n';
      if (report) print_ezd_table(*report);
      if (!reason.empty()) std::cout << "no exact complement: " << reason << '\n';
    }
    return pass ? kExitPass : kExitFail;
  }

  const auto v = generic_ezd_decision(ring, trials, seed);
  if (o.format == "json") {
    Json p = to_json(v);
    p["ideal"] = to_string(l.spec);
    p["kind"] = to_string(l.spec.kind);
    p["bound"] = l.bound;
    print_json("ezd", p);
  } else if (o.format == "csv") {
    std::cout << "trial,form,degree,annihilator_dim,q,reason\n";
    for (std::size_t t = 0; t < v.outcomes.size(); ++t) {
      const auto& s = v.outcomes[t].search;
      std::cout << t << ",\"" << to_string(v.outcomes[t].form) << "\"," << (s.degree ? std::to_string(*s.degree) : "")
                << ',' << s.annihilator_dim << ",\"" << (s.q ? to_string(*s.q) : "") << "\",\"" << s.reason << "\"\n";
    }
  } else {
    std::cout << "ring: " << to_string(l.spec) << " (" << to_string(l.spec.kind) << ")\n";
    std::cout << "decision: " << to_string(v.decision) << (v.exact ? " (exact)" : " (sampled, " + std::to_string(v.trials) + " trials)") << '\n';
    if (v.witness_q) std::cout << "witness Q: " << to_string(*v.witness_q) << " (degree " << *v.witness_degree << ")\n";
    for (std::size_t t = 0; t < v.outcomes.size(); ++t) {
      const auto& s = v.outcomes[t].search;
      std::cout << "trial " << t + 1 << ": l = " << to_string(v.outcomes[t].form) << " -> "
                << (s.q ? "Q = " + to_string(*s.q) : s.reason) << '\n';
    }
    if (!v.note.empty()) std::cout << "note: " << v.note << '\n';
  }
  return v.decision == GenericDecision::GenericallyYes ? kExitPass : kExitFail;
}

int cmd_wlp(const RingOptions& o, std::size_t trials, std::uint64_t seed) {
  const auto l = load_ring(o, true);
  const auto ring = build_quotient(l.spec, l.bound);
  const auto w = wlp_check(ring, trials, seed);
  if (o.format == "json") {
    Json p = to_json(w);
    p["ideal"] = to_string(l.spec);
    p["bound"] = l.bound;
    print_json("wlp", p);
  } else if (o.format == "csv") {
    std::cout << "degree,dim_from,dim_to,rank,maximal\n";
    for (const auto& d : w.degrees)
      std::cout << d.degree << ',' << d.dim_from << ',' << d.dim_to << ',' << d.rank << ',' << d.maximal << '\n';
  } else {
    std::cout << "degree  R_{i-1} -> R_i  rank  maximal\n";
    for (const auto& d : w.degrees)
      std::cout << std::setw(6) << d.degree << std::setw(8) << d.dim_from << " -> " << std::setw(3) << d.dim_to
                << std::setw(6) << d.rank << "  " << (d.maximal ? "yes" : "no") << '\n';
    std::cout << "WLP: " << (w.holds ? "holds" : "fails") << (w.truncated ? " (truncated)" : "") << '\n';
  }
  return w.holds ? kExitPass : kExitFail;
}

int cmd_socle(const RingOptions& o) {
  const auto l = load_ring(o, true);
  const auto ring = build_quotient(l.spec, l.bound);
  const auto s = socle_dims(ring);
  if (o.format == "json") {
    Json p = to_json(s);
    p["ideal"] = to_string(l.spec);
    p["bound"] = l.bound;
    print_json("socle", p);
  } else if (o.format == "csv") {
    std::cout << "degree,socle_dim\n";
    for (std::size_t d = 0; d < s.dims.size(); ++d) std::cout << d << ',' << s.dims[d] << '\n';
  } else {
    std::cout << "socle dims: (" << join(s.dims, ",") << ")\n";
    std::cout << (s.gorenstein ? "Gorenstein" : "not Gorenstein") << (s.truncated ? " (truncated)" : "") << '\n';
  }
  return kExitPass;
}

int cmd_yoshino(const RingOptions& o) {
  const auto l = load_ring(o, true);
  const auto ring = build_quotient(l.spec, l.bound);
  const auto y = yoshino_conditions(ring);
  const std::size_t big_n = generator_count_N(l.spec.nvars);
  const std::size_t gens = minimal_generator_count(l.spec);
  if (o.format == "json") {
    Json p = to_json(y);
    p["ideal"] = to_string(l.spec);
    p["generator_count_N"] = big_n;
    p["minimal_generators"] = gens;
    print_json("yoshino", p);
  } else if (o.format == "csv") {
    std::cout << "c1,c2,gorenstein,generator_count_N,minimal_generators\n"
              << y.c1 << ',' << y.c2 << ',' << y.gorenstein << ',' << big_n << ',' << gens << '\n';
  } else {
    auto mark = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "c1 dim R_2 = dim R_1 - 1: " << mark(y.c1) << '\n'
              << "c2 generated in degree 2: " << mark(y.c2) << '\n'
              << "Gorenstein: " << mark(y.gorenstein) << '\n'
              << "N = " << big_n << ", minimal generators = " << gens << '\n';
  }
  return kExitPass;
}

struct ScanOptions {
  std::string family;
  ScanConfig cfg;
  bool no_symmetry = false;
  bool allow_non_artinian = false;
  bool full = false;
  bool timing = false;
  std::string format = "json";
  std::string output;
};

int cmd_scan(ScanOptions o) {
  o.cfg.symmetry_reduction = !o.no_symmetry;
  o.cfg.require_artinian = !o.allow_non_artinian;
  if (o.cfg.max_degree < 2) o.cfg.max_degree = 2;
  ScanReport report;
  try {
    report = o.family == "monomial" ? conjecture_scan_monomial(o.cfg) : conjecture_scan_binomial(o.cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream text;
  if (o.format == "csv") {
    text << scan_csv(report);
  } else if (o.format == "json") {
    text << envelope("scan", to_json(report, o.full, o.timing)).dump(2) << '\n';
  } else {
    text << "family: " << report.family << "\nexamined: " << report.examined
         << "\nwith generic linear EZD: " << report.with_generic_ezd << "\nskipped: " << report.skipped.size()
         << "\ncounterexamples: " << report.counterexamples.size() << "\nred flags: " << report.red_flags.size() << '\n';
    for (const auto& c : report.counterexamples) text << "  counterexample #" << c.index << ": " << c.ideal << ": " << c.description << '\n';
    for (const auto& c : report.red_flags) text << "  red flag #" << c.index << ": " << c.ideal << ": " << c.description << '\n';
    if (o.timing) text << "seconds: " << report.seconds << '\n';
  }
  if (o.output.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(o.output, std::ios::binary);
    out << text.str();
    if (!out) throw std::runtime_error("cannot write " + o.output);
  }
  return report.passed() && report.red_flags.empty() ? kExitPass : kExitFail;
}

int cmd_example(std::size_t n, unsigned d, const std::string& format) {
  ClosedFormExample ex;
  try {
    ex = closed_form_example(n, d);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    print_json("example", to_json(ex));
  } else if (format == "csv") {
    print_ezd_csv(ex.report);
  } else {
    std::cout << "R = k[x1..x" << n << "]/(" << to_string(ex.ideal) << ")\n";
    std::cout << "Q (closed form) = " << to_string(ex.q) << '\n';
    if (ex.canonical_q) std::cout << "Q (canonical)   = " << to_string(*ex.canonical_q) << '\n';
    std::cout << "closed form matches canonical: " << (ex.q_matches_canonical ? "yes" : "no") << '\n';
    print_ezd_table(ex.report);
  }
  return ex.report.verdict == EzdVerdict::ExactPair && ex.q_matches_canonical ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact zero divisors, Hilbert functions and the WLP for standard graded algebras"};
  app.require_subcommand(1);

  RingOptions ring;
  std::size_t trials = 3;
  std::uint64_t seed = 0;
  std::string form, partner;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function H(0..D)");
  add_ring_options(hilbert, ring);

  auto* ezd = app.add_subcommand("ezd", "Generic linear exact zero divisor decision, or an exact check with --form");
  add_ring_options(ezd, ring);
  ezd->add_option("--form", form, "Linear form to check, e.g. \"x1 + 2*x2\"");
  ezd->add_option("--partner", partner, "Check the pair (--form, --partner) instead of searching for Q");
  ezd->add_option("--trials", trials, "Sampled forms for non-monomial ideals");
  ezd->add_option("--seed", seed, "Random seed");

  auto* wlp = app.add_subcommand("wlp", "Weak Lefschetz Property check");
  add_ring_options(wlp, ring);
  wlp->add_option("--trials", trials, "Sampled forms");
  wlp->add_option("--seed", seed, "Random seed");

  auto* socle = app.add_subcommand("socle", "Socle dimensions and Gorenstein test");
  add_ring_options(socle, ring);

  auto* yoshino = app.add_subcommand("yoshino", "Necessary conditions for non-free totally reflexive modules");
  add_ring_options(yoshino, ring);

  ScanOptions scan;
  scan.cfg.workers = env_workers();
  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive scan of an ideal family");
  scan_cmd->add_option("family", scan.family, "monomial | binomial")
      ->required()
      ->check(CLI::IsMember({"monomial", "binomial"}));
  scan_cmd->add_option("-n,--nvars", scan.cfg.nvars, "Number of variables")->required();
  scan_cmd->add_option("--max-deg", scan.cfg.max_degree, "Largest generator degree (monomial family)");
  scan_cmd->add_option("-D,--bound", scan.cfg.bound, "Degree bound (default per instance)");
  scan_cmd->add_option("--trials", scan.cfg.trials, "Sampled forms per instance");
  scan_cmd->add_option("--seed", scan.cfg.seed, "Random seed");
  scan_cmd->add_option("--workers", scan.cfg.workers, "Worker threads (default $EZDLAB_WORKERS or 1)");
  scan_cmd->add_flag("--no-symmetry", scan.no_symmetry, "Do not reduce by variable permutations");
  scan_cmd->add_flag("--allow-non-artinian", scan.allow_non_artinian, "Keep non-Artinian instances");
  scan_cmd->add_flag("--full", scan.full, "Include per-instance records in JSON");
  scan_cmd->add_flag("--timing", scan.timing, "Report wall-clock time");
  scan_cmd->add_option("--format", scan.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  scan_cmd->add_option("-o,--output", scan.output, "Write the report to a file");

  std::size_t ex_n = 0;
  unsigned ex_d = 0;
  std::string ex_format = "table";
  auto* example = app.add_subcommand("example", "The (x1^d) + (x2..xn)^d exact zero divisor example");
  example->add_option("-n,--nvars", ex_n, "Number of variables")->required();
  example->add_option("-d,--degree", ex_d, "Degree d")->required();
  example->add_option("--format", ex_format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    for (auto* sub : {hilbert, ezd, wlp, socle, yoshino})
      if (sub->parsed()) ring.bound_given = sub->count("--bound") > 0;
    if (hilbert->parsed()) return cmd_hilbert(ring);
    if (ezd->parsed()) return cmd_ezd(ring, form, partner, trials, seed);
    if (wlp->parsed()) return cmd_wlp(ring, trials, seed);
    if (socle->parsed()) return cmd_socle(ring);
    if (yoshino->parsed()) return cmd_yoshino(ring);
    if (scan_cmd->parsed()) return cmd_scan(scan);
    if (example->parsed()) return cmd_example(ex_n, ex_d, ex_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // ParseError and NonHomogeneousError land here
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
