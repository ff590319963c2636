#pragma once

#include "ezdlab/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ezdlab {

using Exponent = std::uint16_t;

/// Exponent vector over n variables x1..xn.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t nvars);
  /// x_{index+1}^power
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  Exponent exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  /// Index of the single variable when this is a pure power x_i^a with a > 0.
  std::optional<std::size_t> pure_power_variable() const;

  Monomial operator*(const Monomial& other) const;
  /// Applies a variable permutation: variable i moves to position perm[i].
  Monomial permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order with x1 > x2 > ... > xn, listed heaviest-first
/// inside each degree and by increasing degree across degrees. `before(a, b)`
/// means a is listed before b; within one degree that is a >_grlex b.
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

bool divides(const Monomial& a, const Monomial& b);

/// All C(n+d-1, d) monomials of degree d, x1^d first.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& generators);

/// Drops generators divisible by another generator (and duplicates). The
/// survivors keep graded-lex order.
std::vector<Monomial> minimalize_monomial_gens(std::vector<Monomial> generators);

std::string to_string(const Monomial& m);

class NonHomogeneousError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degree-homogeneous polynomial with rational coefficients. Zero
/// coefficients are never stored.
class HomogPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexOrder>;

  HomogPoly(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {}
  /// Throws NonHomogeneousError if a term has the wrong degree.
  HomogPoly(std::size_t nvars, unsigned degree, const std::vector<std::pair<Monomial, Rational>>& terms);

  static HomogPoly monomial(const Monomial& m, Rational c = 1);
  /// Linear form sum_i coeffs[i] * x_{i+1}.
  static HomogPoly linear_form(const Vector& coeffs);
  /// x1 + ... + xn
  static HomogPoly sum_of_variables(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  HomogPoly operator+(const HomogPoly& other) const;
  HomogPoly operator-(const HomogPoly& other) const;
  HomogPoly operator*(const Rational& c) const;
  HomogPoly operator*(const HomogPoly& other) const;

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

 private:
  std::size_t nvars_;
  unsigned degree_;
  Terms terms_;
};

HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q);
HomogPoly poly_pow(const HomogPoly& p, unsigned e);

std::string to_string(const HomogPoly& p);

enum class IdealKind { Monomial, MonomialPlusOneBinomial, General };

std::string to_string(IdealKind kind);

/// Homogeneous generators of an ideal of k[x1..xn]. Construct through
/// make_ideal so the kind tag and normalization always agree.
struct IdealSpec {
  std::size_t nvars = 0;
  std::vector<HomogPoly> generators;
  IdealKind kind = IdealKind::Monomial;

  /// Single-term generators as monomials (only meaningful for terms with one entry).
  std::vector<Monomial> monomial_generators() const;
  /// For MonomialPlusOneBinomial: index of the binomial generator.
  std::optional<std::size_t> binomial_index() const;
  unsigned max_generator_degree() const;

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

/// Classifies and normalizes: zero generators are dropped, single-term
/// generators are scaled to coefficient 1, and a binomial c*f1 + c*f2 is
/// rescaled to f1 + f2 when the remaining generators are degree-2 monomials.
IdealSpec make_ideal(std::size_t nvars, std::vector<HomogPoly> generators);

IdealSpec monomial_ideal(std::size_t nvars, const std::vector<Monomial>& generators);

/// The two monomials of the binomial generator, leading (graded-lex larger)
/// term first, and J = the remaining monomial generators.
struct BinomialParts {
  std::vector<Monomial> j;
  Monomial f1;
  Monomial f2;
};
BinomialParts binomial_parts(const IdealSpec& spec);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar: generators separated by ',' or newlines; '#' starts a comment;
/// a term is a '*'-joined product of rational numbers and powers xi^e;
/// terms are joined by '+' / '-'. nvars == 0 infers n from the largest index.
/// Throws ParseError (syntax, with 1-based line/column) or
/// NonHomogeneousError (mixed degrees in one generator).
IdealSpec parse_ideal(std::string_view text, std::size_t nvars = 0);
HomogPoly parse_poly(std::string_view text, std::size_t nvars);

std::string to_string(const IdealSpec& spec);

}  // namespace ezdlab
