#pragma once

#include "ezdlab/ezd.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ezdlab {

struct ScanConfig {
  std::size_t nvars = 2;
  unsigned max_degree = 2;         // largest minimal-generator degree enumerated
  unsigned bound = 0;              // degree bound; 0 picks default_degree_bound per instance
  bool require_artinian = true;
  bool symmetry_reduction = true;  // one representative per variable permutation
  std::uint64_t seed = 0;
  std::size_t trials = 3;
  std::size_t workers = 1;
};

/// Throws std::invalid_argument when nvars < 2, max_degree < 2 or
/// 0 < bound < max_degree.
void validate(const ScanConfig& cfg);

/// Artinian (when required) monomial ideals whose minimal generators have
/// degrees in [2, max_degree], in a fixed deterministic order. With symmetry
/// reduction only the canonical representative of each permutation class is
/// emitted: the one whose graded-lex sorted generator list is least.
std::vector<IdealSpec> enumerate_monomial_ideals(const ScanConfig& cfg);

/// Sorted generator list minimal over all variable permutations.
std::vector<Monomial> canonical_generators(const std::vector<Monomial>& generators);

// ------------------------------------------------------------------ oracles

struct SupportViolation {
  Monomial mu;     // degree d-1 monomial with nonzero coefficient in Q
  Monomial big_m;  // degree 2d-1 multiple of mu outside I
};

struct SupportCheck {
  bool precondition_holds = false;  // ell * Q = 0 in R
  std::vector<SupportViolation> violations;
  bool passed() const { return precondition_holds && violations.empty(); }
};

/// For a monomial ideal I and forms ell (linear), Q with ell*Q in I: every
/// monomial M of degree 2 deg(Q) + 1 divisible by a monomial in the support
/// of Q must lie in I. Brute force over the support and all multiples.
SupportCheck monomial_support_check(const GradedQuotient& ring, const HomogPoly& ell, const HomogPoly& q);

struct Decomposition {
  HomogPoly q1{0, 1};
  HomogPoly q2{0, 1};
  Rational alpha;  // ell*Q = alpha (f1 + f2) mod J
};

/// Splits a degree-1 complement Q of ell in R = P/(J + (f1 + f2)) as
/// Q = Q1 + Q2 with ell*Q1 = alpha f1 and ell*Q2 = alpha f2 modulo J.
/// Throws std::invalid_argument when ell*Q is not alpha (f1 + f2) modulo J;
/// returns nullopt when no such Q1 exists.
std::optional<Decomposition> decompose_q(const IdealSpec& spec, const HomogPoly& ell, const HomogPoly& q);

struct FactViolation {
  char part;  // 'a' (Q1 against f1) or 'b' (Q2 against f2)
  Monomial u;
  Monomial m;
};

struct FactsResult {
  bool precondition_holds = false;  // ell*Q1 in J + (f1), ell*Q2 in J + (f2)
  std::vector<FactViolation> violations;
  bool passed() const { return precondition_holds && violations.empty(); }
};

/// For every variable u with a nonzero coefficient in Q1 (resp. Q2) not
/// dividing f1 (resp. f2), and every degree-2 monomial M other than f1
/// (resp. f2): u*M must lie in J.
FactsResult split_support_check(const IdealSpec& spec, const HomogPoly& ell, const HomogPoly& q1,
                                const HomogPoly& q2);

struct ExactSequenceCheck {
  std::size_t dim_quotient_plus_ell = 0;  // dim (P/(I + (ell)))_2, by elimination
  std::size_t dim_r2 = 0;                 // dim (P/I)_2
  std::size_t dim_colon = 0;              // dim (P/(I : ell))_1
  bool identity_holds = false;            // first = second - third
  std::optional<std::size_t> dim_initial_plus_ell;  // dim (P/(I1 + (ell)))_2, binomial kind only
  bool inequality_holds = true;           // dim_quotient_plus_ell <= dim_initial_plus_ell
};

ExactSequenceCheck exact_sequence_check(const GradedQuotient& ring, const HomogPoly& ell);

struct PairProbeReport {
  bool skipped = false;
  std::string reason;
  std::optional<HomogPoly> seed_form;
  std::optional<HomogPoly> seed_q;
  std::size_t samples = 0;
  std::size_t successes = 0;
};

/// For R with R_3 = 0: find one linear exact zero divisor by sampling, then
/// count how many further sampled forms are exact zero divisors.
PairProbeReport general_pair_probe(const GradedQuotient& ring, std::size_t samples, std::uint64_t seed,
                                   std::size_t search_attempts = 8);

struct ClosedFormExample {
  std::size_t n = 0;
  unsigned d = 0;
  IdealSpec ideal;
  HomogPoly ell{0, 1};
  HomogPoly q{0, 0};                     // from the closed formula
  std::optional<HomogPoly> canonical_q;  // from find_ezd_complement
  bool q_matches_canonical = false;      // formula Q equals the canonical Q up to scale in R
  EzdReport report;
};

/// R = k[x1..xn]/((x1^d) + (x2..xn)^d), L = sum x_i,
/// Q = sum_{i<d} (-1)^i l0^i x1^(d-1-i) with l0 = x2 + ... + xn.
/// Throws std::invalid_argument for n < 2 or d < 2.
ClosedFormExample closed_form_example(std::size_t n, unsigned d);

// ------------------------------------------------------------------ scans

struct BinomialTrial {
  HomogPoly form{0, 1};
  std::size_t annihilator_dim = 0;  // dim Ann(ell)_1
  std::optional<HomogPoly> q;       // degree-1 exact complement
  bool decomposed = false;
  std::optional<Decomposition> decomposition;
  std::size_t fact_violations = 0;
  ExactSequenceCheck sequence;
};

struct BinomialDetail {
  Monomial f1;
  Monomial f2;
  std::size_t dim_r2 = 0;
  bool asserted = false;  // dim R_2 != n - 1
  std::vector<BinomialTrial> trials;
};

struct InstanceRecord {
  std::size_t index = 0;
  IdealSpec ideal;
  unsigned bound = 0;
  std::vector<std::size_t> hilbert;
  GenericVerdict verdict;
  std::optional<unsigned> d;  // deg Q + 1 when a witness exists
  std::optional<std::size_t> dim_prev;
  std::optional<std::size_t> dim_d;
  bool counterexample = false;
  std::size_t support_violations = 0;
  std::optional<BinomialDetail> binomial;
};

struct Counterexample {
  std::size_t index = 0;
  std::string ideal;
  std::string description;
};

struct SkippedInstance {
  std::string ideal;
  std::string reason;
};

struct ScanReport {
  std::string family;
  ScanConfig config;
  std::size_t examined = 0;
  std::size_t with_generic_ezd = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<Counterexample> red_flags;  // oracle failures beyond the conjecture itself
  std::vector<SkippedInstance> skipped;
  std::vector<InstanceRecord> instances;
  double seconds = 0;
  bool passed() const { return counterexamples.empty(); }
};

/// Every enumerated monomial ideal: exact generic decision via L; a witness Q
/// of degree d-1 must come with dim R_d = dim R_{d-1} - 1, and L, Q must pass
/// monomial_support_check.
ScanReport conjecture_scan_monomial(const ScanConfig& cfg);

/// All I = J + (f1 + f2) with J generated by degree-2 monomials and
/// f1 != f2 degree-2 monomials outside J. When dim R_2 != n - 1 no sampled
/// form may admit a degree-1 exact complement. Every complement found is
/// decomposed and run through the facts and exact-sequence checks.
ScanReport conjecture_scan_binomial(const ScanConfig& cfg);

/// Random monomial ideal with minimal generators in degrees [2, max_degree];
/// Artinian when requested (each variable gets a pure power).
IdealSpec random_monomial_ideal(std::size_t nvars, unsigned max_degree, bool artinian, std::uint64_t seed);

}  // namespace ezdlab
