#include "ezdlab/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <functional>
#include <variant>

namespace ezdlab {

void validate(const ScanConfig& cfg) {
  if (cfg.nvars < 2) throw std::invalid_argument("scan: nvars must be at least 2");
  if (cfg.max_degree < 2) throw std::invalid_argument("scan: max degree must be at least 2");
  if (cfg.bound != 0 && cfg.bound < cfg.max_degree)
    throw std::invalid_argument("scan: degree bound must be at least the max generator degree");
}

namespace {

bool lex_less(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), GradedLexOrder{});
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Monomial> permute_sorted(const std::vector<Monomial>& gens, const std::vector<std::size_t>& perm) {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.permuted(perm));
  std::sort(out.begin(), out.end(), GradedLexOrder{});
  return out;
}

bool poly_in_monomial_ideal(const HomogPoly& p, const std::vector<Monomial>& gens) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return in_monomial_ideal(t.first, gens); });
}

/// Evaluates fn(i) for i in [0, count) on `workers` threads; results land at
/// their index so the output never depends on scheduling.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, std::size_t workers, Fn fn) {
  std::vector<Result> out(count);
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

void enumerate_antichains(const std::vector<Monomial>& candidates, std::size_t pos, std::vector<Monomial>& chosen,
                          const std::function<void(const std::vector<Monomial>&)>& emit) {
  if (pos == candidates.size()) {
    emit(chosen);
    return;
  }
  // candidates are sorted by degree, so a later candidate never divides an earlier one
  const Monomial& m = candidates[pos];
  if (!in_monomial_ideal(m, chosen)) {
    chosen.push_back(m);
    enumerate_antichains(candidates, pos + 1, chosen, emit);
    chosen.pop_back();
  }
  enumerate_antichains(candidates, pos + 1, chosen, emit);
}

}  // namespace

std::vector<Monomial> canonical_generators(const std::vector<Monomial>& generators) {
  if (generators.empty()) return {};
  std::vector<Monomial> best;
  bool first = true;
  for (const auto& perm : all_permutations(generators.front().nvars())) {
    auto cand = permute_sorted(generators, perm);
    if (first || lex_less(cand, best)) best = std::move(cand);
    first = false;
  }
  return best;
}

std::vector<IdealSpec> enumerate_monomial_ideals(const ScanConfig& cfg) {
  validate(cfg);
  std::vector<Monomial> candidates;
  for (unsigned d = 2; d <= cfg.max_degree; ++d)
    for (auto& m : monomials_of_degree(cfg.nvars, d)) candidates.push_back(std::move(m));

  const auto perms = all_permutations(cfg.nvars);
  std::vector<IdealSpec> out;
  std::vector<Monomial> chosen;
  enumerate_antichains(candidates, 0, chosen, [&](const std::vector<Monomial>& gens) {
    if (gens.empty()) return;
    if (cfg.require_artinian && !monomial_ideal_is_artinian(cfg.nvars, gens)) return;
    if (cfg.symmetry_reduction) {
      auto own = gens;
      std::sort(own.begin(), own.end(), GradedLexOrder{});
      for (const auto& perm : perms)
        if (lex_less(permute_sorted(gens, perm), own)) return;
    }
    out.push_back(monomial_ideal(cfg.nvars, gens));
  });
  return out;
}

// ------------------------------------------------------------------ oracles

SupportCheck monomial_support_check(const GradedQuotient& ring, const HomogPoly& ell, const HomogPoly& q) {
  const auto& spec = ring.ideal();
  if (spec.kind != IdealKind::Monomial) throw std::invalid_argument("monomial_support_check: needs a monomial ideal");
  SupportCheck r;
  r.precondition_holds = is_zero(ring.normal_form(ell * q));
  const auto gens = minimalize_monomial_gens(spec.monomial_generators());
  const unsigned d = q.degree() + 1;
  const auto multipliers = monomials_of_degree(spec.nvars, d);
  for (const auto& [mu, c] : q.terms()) {
    for (const auto& nu : multipliers) {
      Monomial big = mu * nu;
      if (!in_monomial_ideal(big, gens)) r.violations.push_back({mu, std::move(big)});
    }
  }
  return r;
}

std::optional<Decomposition> decompose_q(const IdealSpec& spec, const HomogPoly& ell, const HomogPoly& q) {
  if (ell.degree() != 1 || q.degree() != 1) throw std::invalid_argument("decompose_q: ell and Q must be linear");
  const auto parts = binomial_parts(spec);
  const std::size_t n = spec.nvars;

  auto mod_j = [&](const HomogPoly& p) {
    HomogPoly out(n, p.degree());
    for (const auto& [m, c] : p.terms())
      if (!in_monomial_ideal(m, parts.j)) out.add_term(m, c);
    return out;
  };

  const HomogPoly lq = mod_j(ell * q);
  const Rational alpha = lq.coefficient(parts.f1);
  const HomogPoly expected = (HomogPoly::monomial(parts.f1) + HomogPoly::monomial(parts.f2)) * alpha;
  if (lq != expected) throw std::invalid_argument("decompose_q: ell*Q is not a multiple of f1 + f2 modulo J");

  if (alpha == 0) return Decomposition{q, HomogPoly(n, 1), alpha};

  // (J + (f1)) : ell in degree 1: coefficients c with ell * sum c_j x_j having
  // no terms outside J other than f1
  std::vector<Monomial> constrained;
  for (const auto& m : monomials_of_degree(n, 2))
    if (!in_monomial_ideal(m, parts.j) && m != parts.f1) constrained.push_back(m);
  QMatrix system(constrained.size(), n);
  for (std::size_t r = 0; r < constrained.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      const Monomial xj = Monomial::variable(n, j);
      if (!divides(xj, constrained[r])) continue;
      std::vector<Exponent> e = constrained[r].exponents();
      --e[j];
      system(r, j) = ell.coefficient(Monomial(std::move(e)));
    }
  const Subspace colon = kernel_basis(system);

  for (const auto& v : colon.basis()) {
    const HomogPoly candidate = HomogPoly::linear_form(v);
    const Rational alpha1 = mod_j(ell * candidate).coefficient(parts.f1);
    if (alpha1 == 0) continue;
    HomogPoly q1 = candidate * Rational(alpha / alpha1);
    HomogPoly q2 = q - q1;
    auto i2 = parts.j;
    i2.push_back(parts.f2);
    if (!poly_in_monomial_ideal(ell * q2, i2)) return std::nullopt;
    return Decomposition{std::move(q1), std::move(q2), alpha};
  }
  return std::nullopt;
}

FactsResult split_support_check(const IdealSpec& spec, const HomogPoly& ell, const HomogPoly& q1,
                                const HomogPoly& q2) {
  const auto parts = binomial_parts(spec);
  const std::size_t n = spec.nvars;
  auto i1 = parts.j, i2 = parts.j;
  i1.push_back(parts.f1);
  i2.push_back(parts.f2);

  FactsResult r;
  r.precondition_holds = poly_in_monomial_ideal(ell * q1, i1) && poly_in_monomial_ideal(ell * q2, i2);
  const auto quadrics = monomials_of_degree(n, 2);
  auto check = [&](char part, const HomogPoly& qi, const Monomial& f) {
    for (std::size_t v = 0; v < n; ++v) {
      const Monomial u = Monomial::variable(n, v);
      if (qi.coefficient(u) == 0 || divides(u, f)) continue;
      for (const auto& m : quadrics) {
        if (m == f) continue;  // degree 2: a multiple of f is f itself
        if (!in_monomial_ideal(u * m, parts.j)) r.violations.push_back({part, u, m});
      }
    }
  };
  check('a', q1, parts.f1);
  check('b', q2, parts.f2);
  return r;
}

ExactSequenceCheck exact_sequence_check(const GradedQuotient& ring, const HomogPoly& ell) {
  const auto& spec = ring.ideal();
  const std::size_t n = spec.nvars;
  ExactSequenceCheck c;

  auto quotient_dim2 = [&](std::vector<HomogPoly> gens) {
    gens.push_back(ell);
    IdealSpec plus = make_ideal(n, std::move(gens));
    return build_quotient(plus, 2, QuotientPath::Elimination).dim(2);
  };

  c.dim_quotient_plus_ell = quotient_dim2(spec.generators);
  c.dim_r2 = ring.dim(2);
  // (I : ell)_1 = {q in P_1 : ell q in I}
  QMatrix lift(ring.dim(2), n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector image = ring.normal_form(ell * HomogPoly::monomial(Monomial::variable(n, j)));
    for (std::size_t i = 0; i < image.size(); ++i) lift(i, j) = image[i];
  }
  c.dim_colon = n - kernel_basis(lift).dim();
  c.identity_holds = c.dim_quotient_plus_ell + c.dim_colon == c.dim_r2;

  if (spec.kind == IdealKind::MonomialPlusOneBinomial) {
    const auto parts = binomial_parts(spec);
    std::vector<HomogPoly> initial;
    for (const auto& m : parts.j) initial.push_back(HomogPoly::monomial(m));
    initial.push_back(HomogPoly::monomial(parts.f1));
    c.dim_initial_plus_ell = quotient_dim2(std::move(initial));
    c.inequality_holds = c.dim_quotient_plus_ell <= *c.dim_initial_plus_ell;
  }
  return c;
}

PairProbeReport general_pair_probe(const GradedQuotient& ring, std::size_t samples, std::uint64_t seed,
                                   std::size_t search_attempts) {
  PairProbeReport r;
  if (!ring.covers(3) || ring.dim(3) != 0) {
    r.skipped = true;
    r.reason = "R_3 is not known to vanish";
    return r;
  }
  std::vector<HomogPoly> seeds;
  if (ring.ideal().kind == IdealKind::Monomial) seeds.push_back(HomogPoly::sum_of_variables(ring.nvars()));
  for (std::size_t k = 0; k < search_attempts; ++k)
    seeds.push_back(generic_linear_form(ring.nvars(), derive_seed(seed, k)));
  for (const auto& form : seeds) {
    auto s = search_ezd_complement(ring, form);
    if (s.q) {
      r.seed_form = form;
      r.seed_q = s.q;
      break;
    }
  }
  if (!r.seed_form) {
    r.skipped = true;
    r.reason = "no exact zero divisor pair found among sampled linear forms";
    return r;
  }
  r.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const HomogPoly form = generic_linear_form(ring.nvars(), derive_seed(seed, search_attempts + k));
    if (search_ezd_complement(ring, form).q) ++r.successes;
  }
  return r;
}

ClosedFormExample closed_form_example(std::size_t n, unsigned d) {
  if (n < 2) throw std::invalid_argument("closed_form_example: n must be at least 2");
  if (d < 2) throw std::invalid_argument("closed_form_example: d must be at least 2");
  ClosedFormExample ex;
  ex.n = n;
  ex.d = d;

  std::vector<Monomial> gens{Monomial::variable(n, 0, static_cast<Exponent>(d))};
  for (auto& m : monomials_of_degree(n, d))
    if (m.exponent(0) == 0) gens.push_back(std::move(m));
  ex.ideal = monomial_ideal(n, gens);

  ex.ell = HomogPoly::sum_of_variables(n);
  Vector tail(n, Rational(1));
  tail[0] = 0;
  const HomogPoly l0 = HomogPoly::linear_form(tail);
  const HomogPoly x1 = HomogPoly::monomial(Monomial::variable(n, 0));
  ex.q = HomogPoly(n, d - 1);
  for (unsigned i = 0; i < d; ++i) {
    const HomogPoly term = poly_pow(l0, i) * poly_pow(x1, d - 1 - i);
    ex.q = ex.q + (i % 2 == 0 ? term : term * Rational(-1));
  }

  const GradedQuotient ring = build_quotient(ex.ideal, default_degree_bound(ex.ideal));
  ex.report = is_ezd_pair(ring, ex.ell, ex.q);
  if (auto found = find_ezd_complement(ring, ex.ell)) {
    ex.canonical_q = found->q;
    Vector formula = ring.normal_form(ex.q);
    const auto lead = std::find_if(formula.begin(), formula.end(), [](const Rational& c) { return c != 0; });
    if (lead != formula.end()) {
      const Rational scale = 1 / *lead;
      for (auto& c : formula) c *= scale;
      ex.q_matches_canonical = formula == ring.normal_form(found->q);
    }
  }
  return ex;
}

// ------------------------------------------------------------------ scans

namespace {

using Outcome = std::variant<InstanceRecord, SkippedInstance>;

unsigned instance_bound(const ScanConfig& cfg, const IdealSpec& spec) {
  return std::max(cfg.bound, default_degree_bound(spec));
}

void fill_common(InstanceRecord& rec, const GradedQuotient& ring) {
  rec.bound = ring.bound();
  rec.hilbert = hilbert_function(ring).values;
  if (rec.verdict.decision == GenericDecision::GenericallyYes && rec.verdict.witness_degree) {
    const unsigned d = *rec.verdict.witness_degree + 1;
    rec.d = d;
    rec.dim_prev = ring.dim(d - 1);
    rec.dim_d = ring.dim(d);
  }
}

InstanceRecord evaluate_monomial(const ScanConfig& cfg, std::size_t index, const IdealSpec& spec) {
  InstanceRecord rec;
  rec.index = index;
  rec.ideal = spec;
  const GradedQuotient ring = build_quotient(spec, instance_bound(cfg, spec));
  rec.verdict = generic_ezd_decision(ring, cfg.trials, derive_seed(cfg.seed, index));
  fill_common(rec, ring);
  if (rec.d) {
    rec.counterexample = *rec.dim_d + 1 != *rec.dim_prev;
    const SupportCheck support = monomial_support_check(ring, HomogPoly::sum_of_variables(spec.nvars), *rec.verdict.witness_q);
    rec.support_violations = support.precondition_holds ? support.violations.size() : 1;
  }
  return rec;
}

Outcome evaluate_binomial(const ScanConfig& cfg, std::size_t index, const IdealSpec& spec) {
  const auto parts = binomial_parts(spec);
  if (in_monomial_ideal(parts.f1, parts.j) || in_monomial_ideal(parts.f2, parts.j))
    return SkippedInstance{to_string(spec), "binomial reduces to a monomial modulo J"};
  const GradedQuotient ring = build_quotient(spec, instance_bound(cfg, spec));
  if (cfg.require_artinian && !ring.vanishes_within_bound())
    return SkippedInstance{to_string(spec), "not Artinian within degree bound " + std::to_string(ring.bound())};

  InstanceRecord rec;
  rec.index = index;
  rec.ideal = spec;
  rec.verdict = generic_ezd_decision(ring, cfg.trials, derive_seed(cfg.seed, index));
  fill_common(rec, ring);

  BinomialDetail detail;
  detail.f1 = parts.f1;
  detail.f2 = parts.f2;
  detail.dim_r2 = ring.dim(2);
  detail.asserted = detail.dim_r2 + 1 != spec.nvars;
  for (const auto& outcome : rec.verdict.outcomes) {
    BinomialTrial t;
    t.form = outcome.form;
    t.annihilator_dim = annihilator_degree(ring, outcome.form, 1).dim();
    if (outcome.search.q && outcome.search.degree == 1u) t.q = outcome.search.q;
    t.sequence = exact_sequence_check(ring, outcome.form);
    if (t.q) {
      t.decomposition = decompose_q(spec, t.form, *t.q);
      t.decomposed = t.decomposition.has_value();
      if (t.decomposition)
        t.fact_violations = split_support_check(spec, t.form, t.decomposition->q1, t.decomposition->q2).violations.size();
      if (detail.asserted) rec.counterexample = true;
    }
    detail.trials.push_back(std::move(t));
  }
  rec.binomial = std::move(detail);
  return rec;
}

ScanReport merge(std::string family, const ScanConfig& cfg, std::vector<Outcome> outcomes) {
  ScanReport report;
  report.family = std::move(family);
  report.config = cfg;
  for (auto& o : outcomes) {
    if (auto* skip = std::get_if<SkippedInstance>(&o)) {
      report.skipped.push_back(std::move(*skip));
      continue;
    }
    auto& rec = std::get<InstanceRecord>(o);
    ++report.examined;
    if (rec.verdict.decision == GenericDecision::GenericallyYes) ++report.with_generic_ezd;
    const std::string ideal = to_string(rec.ideal);
    if (rec.counterexample) {
      std::string what;
      if (rec.binomial) {
        what = "dim R_2 = " + std::to_string(rec.binomial->dim_r2) + " != n-1 but a sampled form has a degree-1 complement";
      } else {
        what = "dim R_" + std::to_string(*rec.d) + " = " + std::to_string(*rec.dim_d) + ", dim R_" +
               std::to_string(*rec.d - 1) + " = " + std::to_string(*rec.dim_prev);
      }
      report.counterexamples.push_back({rec.index, ideal, what});
    }
    if (rec.support_violations > 0)
      report.red_flags.push_back({rec.index, ideal, "monomial support check violated"});
    if (rec.binomial) {
      for (const auto& t : rec.binomial->trials) {
        if (t.q && !t.decomposed)
          report.red_flags.push_back({rec.index, ideal, "no decomposition Q = Q1 + Q2 for ell = " + to_string(t.form)});
        if (t.fact_violations > 0)
          report.red_flags.push_back({rec.index, ideal, "Q1/Q2 support facts violated for ell = " + to_string(t.form)});
        if (!t.sequence.identity_holds)
          report.red_flags.push_back({rec.index, ideal, "exact-sequence dimension identity fails for ell = " + to_string(t.form)});
        if (!t.sequence.inequality_holds)
          report.red_flags.push_back({rec.index, ideal, "initial-ideal inequality fails for ell = " + to_string(t.form)});
      }
    }
    report.instances.push_back(std::move(rec));
  }
  return report;
}

}  // namespace

ScanReport conjecture_scan_monomial(const ScanConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto ideals = enumerate_monomial_ideals(cfg);
  auto outcomes = parallel_map<Outcome>(ideals.size(), cfg.workers,
                                        [&](std::size_t i) { return Outcome(evaluate_monomial(cfg, i, ideals[i])); });
  ScanReport report = merge("monomial", cfg, std::move(outcomes));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ScanReport conjecture_scan_binomial(const ScanConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = cfg.nvars;
  const auto quadrics = monomials_of_degree(n, 2);
  if (quadrics.size() > 20) throw std::invalid_argument("binomial scan: too many variables to enumerate");
  const auto perms = all_permutations(n);

  using Key = std::pair<std::vector<Monomial>, std::vector<Monomial>>;
  auto key = [](std::vector<Monomial> j, const Monomial& a, const Monomial& b) {
    std::sort(j.begin(), j.end(), GradedLexOrder{});
    std::vector<Monomial> pair{a, b};
    std::sort(pair.begin(), pair.end(), GradedLexOrder{});
    return Key{std::move(j), std::move(pair)};
  };
  auto key_less = [](const Key& x, const Key& y) {
    if (lex_less(x.first, y.first)) return true;
    if (lex_less(y.first, x.first)) return false;
    return lex_less(x.second, y.second);
  };

  std::vector<IdealSpec> ideals;
  for (std::size_t mask = 0; mask < (std::size_t{1} << quadrics.size()); ++mask) {
    std::vector<Monomial> j;
    for (std::size_t k = 0; k < quadrics.size(); ++k)
      if (mask >> k & 1) j.push_back(quadrics[k]);
    for (std::size_t a = 0; a < quadrics.size(); ++a)
      for (std::size_t b = a + 1; b < quadrics.size(); ++b) {
        if (cfg.symmetry_reduction) {
          const auto own = key(j, quadrics[a], quadrics[b]);
          bool canonical = true;
          for (const auto& perm : perms) {
            std::vector<Monomial> pj;
            for (const auto& m : j) pj.push_back(m.permuted(perm));
            const auto other = key(pj, quadrics[a].permuted(perm), quadrics[b].permuted(perm));
            if (key_less(other, own)) {
              canonical = false;
              break;
            }
          }
          if (!canonical) continue;
        }
        std::vector<HomogPoly> gens;
        for (const auto& m : j) gens.push_back(HomogPoly::monomial(m));
        gens.push_back(HomogPoly::monomial(quadrics[a]) + HomogPoly::monomial(quadrics[b]));
        ideals.push_back(make_ideal(n, std::move(gens)));
      }
  }

  auto outcomes = parallel_map<Outcome>(ideals.size(), cfg.workers,
                                        [&](std::size_t i) { return evaluate_binomial(cfg, i, ideals[i]); });
  ScanReport report = merge("binomial", cfg, std::move(outcomes));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

IdealSpec random_monomial_ideal(std::size_t nvars, unsigned max_degree, bool artinian, std::uint64_t seed) {
  if (max_degree < 2) throw std::invalid_argument("random_monomial_ideal: max degree must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!artinian && rng() % 4 == 0) continue;
    const auto power = static_cast<Exponent>(2 + rng() % (max_degree - 1));
    gens.push_back(Monomial::variable(nvars, i, power));
  }
  for (unsigned d = 2; d <= max_degree; ++d)
    for (const auto& m : monomials_of_degree(nvars, d))
      if (!m.pure_power_variable() && rng() % 4 == 0) gens.push_back(m);
  if (gens.empty()) gens.push_back(Monomial::variable(nvars, 0, 2));
  return monomial_ideal(nvars, minimalize_monomial_gens(std::move(gens)));
}

}  // namespace ezdlab
