#pragma once

#include "ezdlab/gradedring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ezdlab {

/// Matrix of q -> normal_form(f q) from R_d to R_{d + deg f} on the quotient
/// bases. Throws std::out_of_range when the ring does not cover d + deg f.
QMatrix mult_map(const GradedQuotient& ring, const HomogPoly& f, unsigned d);

/// Ann(f)_d as a subspace of R_d.
Subspace annihilator_degree(const GradedQuotient& ring, const HomogPoly& f, unsigned d);

/// (y)_d as a subspace of R_d; the zero subspace when d < deg y.
Subspace principal_ideal_degree(const GradedQuotient& ring, const HomogPoly& y, unsigned d);

enum class EzdVerdict { ExactPair, NotPair, Truncated };
std::string to_string(EzdVerdict v);

struct EzdDegreeRow {
  unsigned degree = 0;
  std::size_t dim_r = 0;
  std::size_t dim_ann_x = 0;
  std::size_t dim_ideal_y = 0;
  bool ann_x_equals_ideal_y = false;
  std::size_t dim_ann_y = 0;
  std::size_t dim_ideal_x = 0;
  bool ann_y_equals_ideal_x = false;
};

struct EzdReport {
  std::string ring_id;
  HomogPoly x{0, 0};
  HomogPoly y{0, 0};
  bool product_zero = false;
  std::vector<EzdDegreeRow> table;
  EzdVerdict verdict = EzdVerdict::NotPair;
  std::string reason;
};

/// Checks Ann(x) = (y) and Ann(y) = (x) degree by degree through the top
/// degree. Both directions are always checked. Rings that do not vanish
/// within their bound get verdict Truncated.
EzdReport is_ezd_pair(const GradedQuotient& ring, const HomogPoly& x, const HomogPoly& y);

struct ComplementSearch {
  std::optional<unsigned> degree;       // degree of Q searched (least with Ann(l) != 0, or the requested one)
  std::size_t annihilator_dim = 0;      // dim Ann(l) in that degree
  std::optional<HomogPoly> q;           // canonical generator, set only when the full check passed
  std::optional<EzdReport> report;
  std::string reason;
};

/// Looks for Q with (l, Q) exact zero divisors. Without `degree`, searches the
/// least degree with a nonzero annihilator; a one-dimensional annihilator there
/// gives the candidate Q (first nonzero coordinate scaled to 1).
ComplementSearch search_ezd_complement(const GradedQuotient& ring, const HomogPoly& ell,
                                       std::optional<unsigned> degree = std::nullopt);

struct EzdComplement {
  HomogPoly q;
  EzdReport report;
};
std::optional<EzdComplement> find_ezd_complement(const GradedQuotient& ring, const HomogPoly& ell);

/// Deterministic per-stream seed derivation (splitmix64 of seed and stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Linear form with coefficients drawn uniformly from [-10^6, 10^6] \ {0}.
HomogPoly generic_linear_form(std::size_t nvars, std::uint64_t seed);

enum class GenericDecision { GenericallyYes, No, Inconclusive };
std::string to_string(GenericDecision d);

struct TrialOutcome {
  HomogPoly form{0, 0};
  ComplementSearch search;
};

struct GenericVerdict {
  GenericDecision decision = GenericDecision::Inconclusive;
  std::optional<HomogPoly> witness_q;      // from the last trial when GenericallyYes
  std::optional<unsigned> witness_degree;  // deg Q
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool exact = false;
  std::vector<TrialOutcome> outcomes;
  std::string note;
};

/// Monomial ideals: exact decision through L = x1 + ... + xn (the scaling
/// x_i -> a_i x_i is an automorphism of R). Otherwise `trials` sampled forms;
/// unanimous success gives GenericallyYes, unanimous failure No, mixed
/// Inconclusive.
GenericVerdict generic_ezd_decision(const GradedQuotient& ring, std::size_t trials, std::uint64_t seed);

struct WlpDegree {
  unsigned degree = 0;  // map R_{degree-1} -> R_degree
  std::size_t dim_from = 0;
  std::size_t dim_to = 0;
  std::size_t rank = 0;
  bool maximal = false;
};

struct WlpReport {
  std::vector<WlpDegree> degrees;
  bool holds = false;
  bool truncated = false;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<HomogPoly> witness_form;
  std::vector<unsigned> failing_degrees;
};

/// Maximal rank is an open condition, so one sampled form with maximal rank
/// in every degree is a witness. Without a witness the per-degree rows report
/// the best rank seen over all trials.
WlpReport wlp_check(const GradedQuotient& ring, std::size_t trials, std::uint64_t seed);

struct SocleReport {
  std::vector<std::size_t> dims;  // degrees 0..top
  std::size_t total = 0;
  bool gorenstein = false;
  bool truncated = false;
};

SocleReport socle_dims(const GradedQuotient& ring);
bool is_gorenstein(const GradedQuotient& ring);

struct YoshinoConditions {
  bool c1 = false;  // dim R_2 = dim R_1 - 1
  bool c2 = false;  // I generated in degree 2
  bool gorenstein = false;
};

YoshinoConditions yoshino_conditions(const GradedQuotient& ring);

/// C(n+1, 2) - n + 1
std::size_t generator_count_N(std::size_t n);

/// Number of minimal homogeneous generators: sum over d of
/// dim I_d - dim (x_1 I_{d-1} + ... + x_n I_{d-1}).
std::size_t minimal_generator_count(const IdealSpec& spec);

}  // namespace ezdlab
