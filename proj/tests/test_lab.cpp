#include "ezdlab/ezd.hpp"
#include "ezdlab/json_io.hpp"
#include "ezdlab/lab.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ezdlab;
using ezdlab::testing::ideal;
using ezdlab::testing::poly;

namespace {

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(std::vector<Exponent>(e)); }

std::string key_of(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), GradedLexOrder{});
  std::string k;
  for (const auto& g : gens) k += to_string(g) + ";";
  return k;
}

// Independent enumeration: every subset of the candidate monomials generates an
// ideal; reduce to its minimal generators by a direct divisibility scan and
// collect the distinct results.
std::set<std::string> brute_force_ideals(std::size_t n, unsigned max_degree, bool symmetry) {
  std::vector<Monomial> candidates;
  for (unsigned d = 2; d <= max_degree; ++d)
    for (const auto& m : monomials_of_degree(n, d)) candidates.push_back(m);
  REQUIRE(candidates.size() < 24);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::string> seen;
  for (std::uint32_t mask = 1; mask < (1u << candidates.size()); ++mask) {
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < candidates.size() && !redundant; ++j)
        redundant = j != i && (mask >> j & 1) && divides(candidates[j], candidates[i]) && candidates[j] != candidates[i];
      if (!redundant) minimal.push_back(candidates[i]);
    }
    bool artinian = true;
    for (std::size_t v = 0; v < n; ++v) {
      bool has = false;
      for (const auto& m : minimal) has = has || (m.pure_power_variable() == v);
      artinian = artinian && has;
    }
    if (!artinian) continue;
    std::string k = key_of(minimal);
    if (symmetry)
      for (const auto& perm : perms) {
        std::vector<Monomial> moved;
        for (const auto& m : minimal) moved.push_back(m.permuted(perm));
        k = std::min(k, key_of(moved));
      }
    seen.insert(k);
  }
  return seen;
}

}  // namespace

TEST_CASE("enumerate_monomial_ideals examples") {
  ScanConfig cfg;
  cfg.nvars = 2;
  cfg.max_degree = 2;
  const auto two = enumerate_monomial_ideals(cfg);
  REQUIRE(two.size() == 2);
  std::set<std::string> names{to_string(two[0]), to_string(two[1])};
  CHECK(names == std::set<std::string>{"x1^2, x2^2", "x1^2, x1*x2, x2^2"});
}

TEST_CASE("enumeration matches a brute-force oracle") {
  for (auto [n, deg] : {std::pair<std::size_t, unsigned>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    for (bool symmetry : {false, true}) {
      if (n == 3 && deg == 3 && !symmetry) continue;  // 2^16 subsets: covered by the reduced count below
      ScanConfig cfg;
      cfg.nvars = n;
      cfg.max_degree = deg;
      cfg.symmetry_reduction = symmetry;
      const auto listed = enumerate_monomial_ideals(cfg);
      std::set<std::string> keys;
      for (const auto& spec : listed) keys.insert(key_of(spec.monomial_generators()));
      CHECK(keys.size() == listed.size());
      CHECK(listed.size() == brute_force_ideals(n, deg, symmetry).size());
    }
  }
}

TEST_CASE("symmetry reduction never increases the count") {
  for (unsigned deg = 2; deg <= 3; ++deg) {
    ScanConfig on, off;
    on.nvars = off.nvars = 3;
    on.max_degree = off.max_degree = deg;
    off.symmetry_reduction = false;
    const auto a = enumerate_monomial_ideals(on).size(), b = enumerate_monomial_ideals(off).size();
    CHECK(a <= b);
    CHECK(a * 6 >= b);
  }
}

TEST_CASE("scan config validation") {
  ScanConfig cfg;
  cfg.nvars = 1;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.nvars = 2;
  cfg.max_degree = 3;
  cfg.bound = 2;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.bound = 3;
  CHECK_NOTHROW(validate(cfg));
}

TEST_CASE("conjecture_scan_monomial examples") {
  ScanConfig cfg;
  cfg.nvars = 2;
  cfg.max_degree = 2;
  const auto report = conjecture_scan_monomial(cfg);
  CHECK(report.passed());
  CHECK(report.examined == 2);
  CHECK(report.with_generic_ezd == 1);
  for (const auto& rec : report.instances) {
    const std::string name = to_string(rec.ideal);
    if (name == "x1^2, x2^2") {
      CHECK(rec.verdict.decision == GenericDecision::GenericallyYes);
    } else {
      CHECK(rec.verdict.decision == GenericDecision::No);
      REQUIRE(rec.verdict.outcomes.size() == 1);
      CHECK(rec.verdict.outcomes[0].search.annihilator_dim == 2);
    }
  }

  cfg.nvars = 3;
  cfg.max_degree = 3;
  const auto big = conjecture_scan_monomial(cfg);
  CHECK(big.passed());
  CHECK(big.red_flags.empty());
  // members of the closed-form family appear and pass
  const std::set<std::string> family{key_of(closed_form_example(3, 2).ideal.monomial_generators()),
                                     key_of(closed_form_example(3, 3).ideal.monomial_generators())};
  std::size_t found = 0;
  for (const auto& rec : big.instances) {
    std::vector<std::size_t> perm{0, 1, 2};
    bool member = false;
    do {
      std::vector<Monomial> moved;
      for (const auto& g : rec.ideal.monomial_generators()) moved.push_back(g.permuted(perm));
      member = member || family.count(key_of(moved)) > 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!member) continue;
    ++found;
    CHECK(rec.verdict.decision == GenericDecision::GenericallyYes);
    CHECK_FALSE(rec.counterexample);
  }
  CHECK(found == 2);
}

TEST_CASE("conjecture_scan_binomial examples") {
  const auto r = build_quotient(ideal("x1^2, x2^2, x1*x2 + x3^2", 3), 4);
  CHECK(r.dim(2) == 3);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto ell = generic_linear_form(3, s);
    const auto search = search_ezd_complement(r, ell, 1u);
    CHECK_FALSE(search.q.has_value());
  }

  const auto two = build_quotient(ideal("x1^2, x1*x2 + x2^2", 2), 3);
  CHECK(two.dim(2) == 1);
  CHECK(generic_ezd_decision(two, 5, 3).decision == GenericDecision::GenericallyYes);

  ScanConfig cfg;
  cfg.nvars = 3;
  cfg.trials = 5;
  const auto report = conjecture_scan_binomial(cfg);
  CHECK(report.passed());
  CHECK(report.red_flags.empty());
  CHECK(report.examined > 0);
  bool reduced_reason = false;
  for (const auto& s : report.skipped) reduced_reason = reduced_reason || s.reason.find("monomial modulo J") != std::string::npos;
  CHECK(reduced_reason);

  cfg.nvars = 2;
  const auto small = conjecture_scan_binomial(cfg);
  bool saw = false;
  for (const auto& rec : small.instances)
    if (to_string(rec.ideal) == "x1^2, x1*x2 + x2^2") {
      saw = true;
      REQUIRE(rec.binomial.has_value());
      CHECK_FALSE(rec.binomial->asserted);
      CHECK(rec.verdict.decision == GenericDecision::GenericallyYes);
    }
  CHECK(saw);
}

TEST_CASE("closed_form_example instances") {
  const auto a = closed_form_example(2, 2);
  CHECK(a.q == poly("x1 - x2", 2));
  CHECK(a.report.verdict == EzdVerdict::ExactPair);
  CHECK(a.q_matches_canonical);

  const auto b = closed_form_example(3, 2);
  CHECK(b.q == poly("x1 - x2 - x3", 3));
  CHECK(b.report.verdict == EzdVerdict::ExactPair);

  const auto c = closed_form_example(2, 3);
  CHECK(c.q == poly("x1^2 - x1*x2 + x2^2", 2));
  CHECK(poly_mul(c.ell, c.q) == poly("x1^3 + x2^3", 2));
  CHECK(c.report.verdict == EzdVerdict::ExactPair);

  CHECK_THROWS_AS(closed_form_example(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_example(2, 1), std::invalid_argument);
}

TEST_CASE("monomial_support_check") {
  const auto r = build_quotient(ideal("x1^2, x2^2", 2), 3);
  const auto ok = monomial_support_check(r, poly("x1 + x2", 2), poly("x1 - x2", 2));
  CHECK(ok.passed());

  const auto ex = closed_form_example(3, 2);
  const auto ring = build_quotient(ex.ideal, 3);
  CHECK(monomial_support_check(ring, ex.ell, ex.q).passed());

  const auto bad = monomial_support_check(r, poly("x1 + x2", 2), poly("x1 - 2*x2", 2));
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.precondition_holds);

  CHECK_THROWS_AS(monomial_support_check(build_quotient(ideal("x1^2, x1*x2 + x2^2", 2), 3), poly("x1", 2), poly("x2", 2)),
                  std::invalid_argument);
}

TEST_CASE("decompose_q worked example") {
  const auto spec = ideal("x1^2, x1*x2 + x2^2", 2);
  const auto ell = poly("x1 + 2*x2", 2);
  const auto d = decompose_q(spec, ell, ell);
  REQUIRE(d.has_value());
  CHECK(d->alpha == 4);
  CHECK(d->q1 == poly("2*x1", 2));
  CHECK(d->q2 == poly("-x1 + 2*x2", 2));
  CHECK(poly_mul(ell, d->q1) == poly("2*x1^2 + 4*x1*x2", 2));
  CHECK(poly_mul(ell, d->q2) == poly("-x1^2 + 4*x2^2", 2));

  const auto facts = split_support_check(spec, ell, d->q1, d->q2);
  CHECK(facts.passed());
  // corrupt c_u in Q1
  const auto broken = split_support_check(spec, ell, d->q1 + poly("x2", 2), d->q2);
  CHECK_FALSE(broken.precondition_holds);

  CHECK_THROWS_AS(decompose_q(spec, ell, poly("x1", 2)), std::invalid_argument);
}

TEST_CASE("decompose_q alpha zero branch") {
  // ell*Q lands in J: x1 * x1 = x1^2
  const auto spec = ideal("x1^2, x2^2, x1*x3 + x2*x3", 3);
  const auto d = decompose_q(spec, poly("x1", 3), poly("x1", 3));
  REQUIRE(d.has_value());
  CHECK(d->alpha == 0);
  CHECK(d->q1 == poly("x1", 3));
  CHECK(d->q2.is_zero());
}

TEST_CASE("split support facts on a coprime binomial instance") {
  ScanConfig cfg;
  cfg.nvars = 3;
  cfg.trials = 3;
  const auto report = conjecture_scan_binomial(cfg);
  std::size_t coprime = 0;
  for (const auto& rec : report.instances) {
    const auto& b = *rec.binomial;
    bool share = false;
    for (std::size_t v = 0; v < 3; ++v) share = share || (b.f1.exponent(v) > 0 && b.f2.exponent(v) > 0);
    if (share) continue;
    for (const auto& t : b.trials)
      if (t.q) {
        ++coprime;
        CHECK(t.decomposed);
        CHECK(t.fact_violations == 0);
      }
  }
  CHECK(coprime > 0);
}

TEST_CASE("exact sequence identity") {
  const auto r = build_quotient(ideal("x1^2, x2^2, x1*x2 + x3^2", 3), 4);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto c = exact_sequence_check(r, generic_linear_form(3, s));
    CHECK(c.identity_holds);
    CHECK(c.inequality_holds);
    REQUIRE(c.dim_initial_plus_ell.has_value());
  }
  const auto m = exact_sequence_check(build_quotient(ideal("x1^2, x2^2, x2*x3, x3^2", 3), 3), poly("x1 + x2 + x3", 3));
  CHECK(m.identity_holds);
  CHECK(m.dim_r2 == 2);
  CHECK(m.dim_colon == 2);
  CHECK(m.dim_quotient_plus_ell == 0);
  CHECK_FALSE(m.dim_initial_plus_ell.has_value());
}

TEST_CASE("general_pair_probe") {
  const auto r = build_quotient(ideal("x1^2, x2^2, x2*x3, x3^2", 3), 3);
  const auto p = general_pair_probe(r, 20, 5);
  CHECK_FALSE(p.skipped);
  CHECK(p.samples == 20);
  CHECK(p.successes == 20);

  const auto none = general_pair_probe(build_quotient(ideal("x1^2, x1*x2, x2^2", 2), 3), 20, 5);
  CHECK(none.skipped);
  CHECK_FALSE(none.reason.empty());

  const auto gor = general_pair_probe(build_quotient(ideal("x1^2, x2^2", 2), 3), 10, 5);
  CHECK_FALSE(gor.skipped);
  CHECK(gor.successes == 10);

  CHECK(general_pair_probe(build_quotient(ideal("x1^3, x2^3", 2), 5), 5, 1).skipped);
}

TEST_CASE("random_monomial_ideal") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto a = random_monomial_ideal(3, 4, true, s);
    CHECK(a == random_monomial_ideal(3, 4, true, s));
    CHECK(monomial_ideal_is_artinian(3, a.monomial_generators()));
    for (const auto& g : a.monomial_generators()) {
      CHECK(g.degree() >= 2);
      CHECK(g.degree() <= 4);
    }
  }
}

TEST_CASE("scan output is independent of the worker count") {
  ScanConfig cfg;
  cfg.nvars = 3;
  cfg.max_degree = 3;
  cfg.seed = 17;
  cfg.workers = 1;
  const std::string one = to_json(conjecture_scan_monomial(cfg), true).dump();
  cfg.workers = 4;
  CHECK(to_json(conjecture_scan_monomial(cfg), true).dump() == one);

  ScanConfig bin;
  bin.nvars = 3;
  bin.trials = 4;
  bin.seed = 3;
  const std::string b1 = to_json(conjecture_scan_binomial(bin), true).dump();
  bin.workers = 3;
  CHECK(to_json(conjecture_scan_binomial(bin), true).dump() == b1);
}
