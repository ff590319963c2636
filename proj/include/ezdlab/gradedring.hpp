#pragma once

#include "ezdlab/exactmat.hpp"
#include "ezdlab/polyring.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace ezdlab {

struct HilbertFn {
  std::vector<std::size_t> values;  // H(0..bound)
  bool artinian_within_bound = false;
  std::optional<unsigned> top_degree;  // last d with H(d) != 0 when artinian_within_bound
};

enum class QuotientPath {
  Auto,         // combinatorial for monomial ideals, elimination otherwise
  Elimination,  // always eliminate the relation matrix (cross-check path)
};

/// R = P/I computed degree by degree up to a bound. Each piece R_d carries the
/// spanning monomials of P_d (graded-lex), the quotient basis (standard
/// monomials for monomial ideals, non-pivot monomials of the relation echelon
/// form otherwise) and a normal form P_d -> R_d coordinates.
class GradedQuotient {
 public:
  const IdealSpec& ideal() const { return ideal_; }
  std::size_t nvars() const { return ideal_.nvars; }
  unsigned bound() const { return bound_; }
  bool combinatorial() const { return combinatorial_; }

  /// True when some H(d) = 0 with d <= bound; then R_e = 0 for all e >= d.
  bool vanishes_within_bound() const { return top_ + 1 <= bound_ && pieces_[top_ + 1].basis.empty(); }
  std::optional<unsigned> top_degree() const;
  /// Degrees whose piece is known: d <= bound, or any d once R vanishes within bound.
  bool covers(unsigned d) const { return d <= bound_ || vanishes_within_bound(); }

  /// dim R_d; throws std::out_of_range when !covers(d).
  std::size_t dim(unsigned d) const;
  std::vector<Monomial> basis_monomials(unsigned d) const;
  const std::vector<Monomial>& spanning_monomials(unsigned d) const;
  /// S_d = I ∩ P_d in the coordinates of spanning_monomials(d).
  Subspace relation_subspace(unsigned d) const;

  /// Coordinates of the image of p in R_deg(p). Linear; zero exactly on I.
  /// Throws std::out_of_range when the degree is not covered.
  Vector normal_form(const HomogPoly& p) const;
  /// Polynomial sum coords[i] * basis_monomials(d)[i].
  HomogPoly lift(unsigned d, const Vector& coords) const;

 private:
  friend GradedQuotient build_quotient(const IdealSpec&, unsigned, QuotientPath);

  struct Piece {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    std::vector<std::size_t> basis;           // indices into monomials
    std::vector<std::ptrdiff_t> coordinate;   // monomial index -> basis position, -1 if not basic
    std::optional<Subspace> relations;        // elimination path only
  };

  const Piece& piece(unsigned d) const;

  IdealSpec ideal_;
  unsigned bound_ = 0;
  bool combinatorial_ = false;
  unsigned top_ = 0;  // last degree <= bound with nonzero piece
  std::vector<Piece> pieces_;
};

GradedQuotient build_quotient(const IdealSpec& spec, unsigned bound, QuotientPath path = QuotientPath::Auto);

HilbertFn hilbert_function(const GradedQuotient& ring);

/// For monomial ideals decided exactly (every variable has a pure power
/// among the generators); otherwise true iff some H(d) = 0 with d <= bound.
bool is_artinian_within(const GradedQuotient& ring);

/// Exact Artinian test for monomial generators.
bool monomial_ideal_is_artinian(std::size_t nvars, const std::vector<Monomial>& generators);

/// A bound D with R_D = 0 for Artinian inputs: sum(a_i - 1) + 1 over the
/// minimal pure powers x_i^{a_i} of a monomial ideal, n(t - 1) + 1 for an
/// ideal generated in degrees <= t otherwise.
unsigned default_degree_bound(const IdealSpec& spec);

/// The bound analyses should use given a caller request: Artinian monomial
/// ideals are always extended to their default bound so verdicts are never
/// truncated; other ideals use the request as given.
unsigned effective_degree_bound(const IdealSpec& spec, unsigned requested);

}  // namespace ezdlab
