#include "ezdlab/ezd.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace ezdlab {

QMatrix mult_map(const GradedQuotient& ring, const HomogPoly& f, unsigned d) {
  if (!ring.covers(d + f.degree()))
    throw std::out_of_range("mult_map: degree " + std::to_string(d + f.degree()) + " beyond bound");
  const auto source = ring.basis_monomials(d);
  QMatrix m(ring.dim(d + f.degree()), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Vector image = ring.normal_form(f * HomogPoly::monomial(source[j]));
    for (std::size_t i = 0; i < image.size(); ++i) m(i, j) = image[i];
  }
  return m;
}

Subspace annihilator_degree(const GradedQuotient& ring, const HomogPoly& f, unsigned d) {
  return kernel_basis(mult_map(ring, f, d));
}

Subspace principal_ideal_degree(const GradedQuotient& ring, const HomogPoly& y, unsigned d) {
  const std::size_t ambient = ring.dim(d);
  if (d < y.degree() || y.is_zero()) return Subspace(ambient);
  std::vector<Vector> images;
  for (const auto& m : ring.basis_monomials(d - y.degree()))
    images.push_back(ring.normal_form(y * HomogPoly::monomial(m)));
  return Subspace::span(ambient, images);
}

std::string to_string(EzdVerdict v) {
  switch (v) {
    case EzdVerdict::ExactPair: return "ExactPair";
    case EzdVerdict::NotPair: return "NotPair";
    case EzdVerdict::Truncated: return "Truncated";
  }
  return "NotPair";
}

EzdReport is_ezd_pair(const GradedQuotient& ring, const HomogPoly& x, const HomogPoly& y) {
  EzdReport r;
  r.ring_id = to_string(ring.ideal());
  r.x = x;
  r.y = y;
  if (!ring.vanishes_within_bound()) {
    r.verdict = EzdVerdict::Truncated;
    r.reason = "R does not vanish within degree bound " + std::to_string(ring.bound());
    return r;
  }
  r.product_zero = is_zero(ring.normal_form(x * y));
  const unsigned top = *ring.top_degree();
  for (unsigned d = 0; d <= top; ++d) {
    EzdDegreeRow row;
    row.degree = d;
    row.dim_r = ring.dim(d);
    const Subspace ann_x = annihilator_degree(ring, x, d), ideal_y = principal_ideal_degree(ring, y, d);
    const Subspace ann_y = annihilator_degree(ring, y, d), ideal_x = principal_ideal_degree(ring, x, d);
    row.dim_ann_x = ann_x.dim();
    row.dim_ideal_y = ideal_y.dim();
    row.ann_x_equals_ideal_y = subspace_equal(ann_x, ideal_y);
    row.dim_ann_y = ann_y.dim();
    row.dim_ideal_x = ideal_x.dim();
    row.ann_y_equals_ideal_x = subspace_equal(ann_y, ideal_x);
    r.table.push_back(row);
  }
  if (!r.product_zero) {
    r.verdict = EzdVerdict::NotPair;
    r.reason = "product x*y is nonzero in R";
    return r;
  }
  for (const auto& row : r.table) {
    if (!row.ann_x_equals_ideal_y) {
      r.verdict = EzdVerdict::NotPair;
      r.reason = "Ann(x) != (y) in degree " + std::to_string(row.degree);
      return r;
    }
    if (!row.ann_y_equals_ideal_x) {
      r.verdict = EzdVerdict::NotPair;
      r.reason = "Ann(y) != (x) in degree " + std::to_string(row.degree);
      return r;
    }
  }
  r.verdict = EzdVerdict::ExactPair;
  return r;
}

ComplementSearch search_ezd_complement(const GradedQuotient& ring, const HomogPoly& ell,
                                       std::optional<unsigned> degree) {
  ComplementSearch s;
  if (!ring.vanishes_within_bound()) {
    s.reason = "truncated: R does not vanish within degree bound " + std::to_string(ring.bound());
    return s;
  }
  const unsigned top = *ring.top_degree();
  Subspace ann;
  if (degree) {
    s.degree = degree;
    ann = annihilator_degree(ring, ell, *degree);
  } else {
    for (unsigned e = 0; e <= top; ++e) {
      ann = annihilator_degree(ring, ell, e);
      if (ann.dim() > 0) {
        s.degree = e;
        break;
      }
    }
  }
  s.annihilator_dim = ann.dim();
  if (!s.degree || ann.dim() == 0) {
    s.reason = "annihilator is zero in the searched degree";
    return s;
  }
  if (ann.dim() >= 2) {
    s.reason = "annihilator has dimension " + std::to_string(ann.dim()) + " in degree " + std::to_string(*s.degree);
    return s;
  }
  HomogPoly q = ring.lift(*s.degree, ann.basis().front());
  EzdReport report = is_ezd_pair(ring, ell, q);
  if (report.verdict == EzdVerdict::ExactPair) {
    s.q = std::move(q);
  } else {
    s.reason = "candidate fails the exact check: " + report.reason;
  }
  s.report = std::move(report);
  return s;
}

std::optional<EzdComplement> find_ezd_complement(const GradedQuotient& ring, const HomogPoly& ell) {
  auto s = search_ezd_complement(ring, ell);
  if (!s.q) return std::nullopt;
  return EzdComplement{std::move(*s.q), std::move(*s.report)};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

HomogPoly generic_linear_form(std::size_t nvars, std::uint64_t seed) {
  // mt19937_64 output is fully specified; the range reduction below is done by
  // hand so forms are identical across standard libraries.
  constexpr std::uint64_t span = 2'000'001;  // [-10^6, 10^6]
  constexpr std::uint64_t limit = (~std::uint64_t{0} / span) * span;
  std::mt19937_64 rng(seed);
  Vector coeffs;
  while (coeffs.size() < nvars) {
    const std::uint64_t x = rng();
    if (x >= limit) continue;
    const long value = static_cast<long>(x % span) - 1'000'000;
    if (value != 0) coeffs.emplace_back(value);
  }
  return HomogPoly::linear_form(coeffs);
}

std::string to_string(GenericDecision d) {
  switch (d) {
    case GenericDecision::GenericallyYes: return "GenericallyYes";
    case GenericDecision::No: return "No";
    case GenericDecision::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

GenericVerdict generic_ezd_decision(const GradedQuotient& ring, std::size_t trials, std::uint64_t seed) {
  GenericVerdict v;
  v.seed = seed;
  if (!ring.vanishes_within_bound()) {
    v.decision = GenericDecision::Inconclusive;
    v.note = "truncated: R does not vanish within degree bound " + std::to_string(ring.bound());
    return v;
  }
  std::vector<HomogPoly> forms;
  if (ring.ideal().kind == IdealKind::Monomial) {
    v.exact = true;
    forms.push_back(HomogPoly::sum_of_variables(ring.nvars()));
  } else {
    for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t)
      forms.push_back(generic_linear_form(ring.nvars(), derive_seed(seed, t)));
  }
  v.trials = forms.size();
  std::size_t successes = 0;
  for (auto& form : forms) {
    TrialOutcome outcome{form, search_ezd_complement(ring, form)};
    if (outcome.search.q) ++successes;
    v.outcomes.push_back(std::move(outcome));
  }
  if (successes == forms.size()) {
    v.decision = GenericDecision::GenericallyYes;
    v.witness_q = v.outcomes.back().search.q;
    v.witness_degree = v.outcomes.back().search.degree;
  } else if (successes == 0) {
    v.decision = GenericDecision::No;
    v.note = v.outcomes.back().search.reason;
  } else {
    v.decision = GenericDecision::Inconclusive;
    v.note = std::to_string(successes) + " of " + std::to_string(forms.size()) + " sampled forms succeeded";
  }
  return v;
}

WlpReport wlp_check(const GradedQuotient& ring, std::size_t trials, std::uint64_t seed) {
  WlpReport report;
  report.seed = seed;
  report.trials = std::max<std::size_t>(trials, 1);
  report.truncated = !ring.vanishes_within_bound();
  const unsigned last = report.truncated ? ring.bound() : *ring.top_degree() + 1;

  std::vector<WlpDegree> best;
  for (unsigned i = 1; i <= last; ++i) best.push_back({i, ring.dim(i - 1), ring.dim(i), 0, false});

  for (std::size_t t = 0; t < report.trials; ++t) {
    const HomogPoly ell = generic_linear_form(ring.nvars(), derive_seed(seed, t));
    std::vector<WlpDegree> rows;
    bool all = true;
    for (unsigned i = 1; i <= last; ++i) {
      WlpDegree row{i, ring.dim(i - 1), ring.dim(i), 0, false};
      row.rank = rank(mult_map(ring, ell, i - 1));
      row.maximal = row.rank == std::min(row.dim_from, row.dim_to);
      all = all && row.maximal;
      auto& b = best[i - 1];
      if (row.rank > b.rank) b.rank = row.rank;
      b.maximal = b.maximal || row.maximal;
      rows.push_back(row);
    }
    if (all) {
      report.holds = true;
      report.witness_form = ell;
      report.degrees = std::move(rows);
      return report;
    }
  }
  report.degrees = std::move(best);
  for (const auto& row : report.degrees)
    if (!row.maximal) report.failing_degrees.push_back(row.degree);
  return report;
}

SocleReport socle_dims(const GradedQuotient& ring) {
  SocleReport s;
  s.truncated = !ring.vanishes_within_bound();
  const unsigned top = s.truncated ? (ring.bound() == 0 ? 0 : ring.bound() - 1) : *ring.top_degree();
  if (s.truncated && ring.bound() == 0) return s;
  for (unsigned d = 0; d <= top; ++d) {
    const std::size_t cols = ring.dim(d);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      const QMatrix m = mult_map(ring, HomogPoly::monomial(Monomial::variable(ring.nvars(), i)), d);
      for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
    }
    const std::size_t dim = cols - rank(QMatrix::from_rows(rows, cols));
    s.dims.push_back(dim);
    s.total += dim;
  }
  s.gorenstein = !s.truncated && s.total == 1;
  return s;
}

bool is_gorenstein(const GradedQuotient& ring) { return socle_dims(ring).gorenstein; }

namespace {

std::map<unsigned, std::size_t> minimal_generator_degrees(const IdealSpec& spec) {
  std::map<unsigned, std::size_t> out;
  if (spec.generators.empty()) return out;
  if (spec.kind == IdealKind::Monomial) {
    for (const auto& g : minimalize_monomial_gens(spec.monomial_generators())) ++out[g.degree()];
    return out;
  }
  const unsigned top = spec.max_generator_degree();
  const GradedQuotient full = build_quotient(spec, top, QuotientPath::Elimination);
  for (unsigned d = 0; d <= top; ++d) {
    const Subspace ideal_d = full.relation_subspace(d);
    if (ideal_d.dim() == 0) continue;
    std::size_t generated = 0;
    if (d > 0) {
      const Subspace below = full.relation_subspace(d - 1);
      const auto& below_monos = full.spanning_monomials(d - 1);
      const auto& monos = full.spanning_monomials(d);
      std::vector<Vector> rows;
      for (const auto& b : below.basis()) {
        HomogPoly p(spec.nvars, d - 1);
        for (std::size_t k = 0; k < b.size(); ++k) p.add_term(below_monos[k], b[k]);
        for (std::size_t i = 0; i < spec.nvars; ++i) {
          const HomogPoly q = p * HomogPoly::monomial(Monomial::variable(spec.nvars, i));
          Vector row(monos.size(), Rational(0));
          for (const auto& [m, c] : q.terms())
            row[static_cast<std::size_t>(std::find(monos.begin(), monos.end(), m) - monos.begin())] = c;
          rows.push_back(std::move(row));
        }
      }
      generated = Subspace::span(monos.size(), rows).dim();
    }
    if (ideal_d.dim() > generated) out[d] = ideal_d.dim() - generated;
  }
  return out;
}

}  // namespace

YoshinoConditions yoshino_conditions(const GradedQuotient& ring) {
  YoshinoConditions y;
  y.c1 = ring.covers(2) && ring.dim(2) + 1 == ring.dim(1);
  const auto degrees = minimal_generator_degrees(ring.ideal());
  y.c2 = std::all_of(degrees.begin(), degrees.end(), [](const auto& kv) { return kv.first == 2; });
  y.gorenstein = is_gorenstein(ring);
  return y;
}

std::size_t generator_count_N(std::size_t n) {
  if (n == 0) throw std::invalid_argument("generator_count_N: n must be positive");
  return n * (n + 1) / 2 - n + 1;
}

std::size_t minimal_generator_count(const IdealSpec& spec) {
  std::size_t total = 0;
  for (const auto& [d, c] : minimal_generator_degrees(spec)) total += c;
  return total;
}

}  // namespace ezdlab
