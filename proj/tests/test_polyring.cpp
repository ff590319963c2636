#include "ezdlab/polyring.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ezdlab;
using ezdlab::testing::poly;

namespace {

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(std::vector<Exponent>(e)); }

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_exp) {
  std::vector<Exponent> e(n);
  for (auto& x : e) x = static_cast<Exponent>(rng() % (max_exp + 1));
  return Monomial(e);
}

HomogPoly random_poly(std::mt19937_64& rng, std::size_t n, unsigned degree) {
  HomogPoly p(n, degree);
  for (const auto& m : monomials_of_degree(n, degree))
    if (rng() % 2) p.add_term(m, testing::small_rational(rng));
  return p;
}

}  // namespace

TEST_CASE("divides") {
  CHECK(divides(mono({1, 0}), mono({1, 1})));
  CHECK_FALSE(divides(mono({2, 0}), mono({1, 1})));
  CHECK(divides(Monomial::one(3), mono({0, 4, 1})));
}

TEST_CASE("monomials_of_degree") {
  auto two = monomials_of_degree(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == mono({2, 0}));
  CHECK(two[1] == mono({1, 1}));
  CHECK(two[2] == mono({0, 2}));
  auto lin = monomials_of_degree(3, 1);
  CHECK(lin == std::vector<Monomial>{mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});
  CHECK(monomials_of_degree(3, 2).size() == 6);
}

TEST_CASE("in_monomial_ideal") {
  CHECK(in_monomial_ideal(mono({1, 2}), {mono({1, 1})}));
  CHECK_FALSE(in_monomial_ideal(mono({0, 3}), {mono({2, 0}), mono({1, 1})}));
  CHECK_FALSE(in_monomial_ideal(mono({3, 1}), {}));
}

TEST_CASE("poly_mul") {
  const std::size_t n = 2;
  CHECK(poly_mul(poly("x1 + x2", n), poly("x1 - x2", n)) == poly("x1^2 - x2^2", n));
  CHECK(poly_mul(poly("x1 + x2", n), HomogPoly(n, 3)).is_zero());
  CHECK(poly_pow(poly("x1 + x2", n), 2) == poly("x1^2 + 2*x1*x2 + x2^2", n));
}

TEST_CASE("parse_ideal classification") {
  auto a = parse_ideal("x1^2, x2^2", 2);
  CHECK(a.kind == IdealKind::Monomial);
  CHECK(a.generators.size() == 2);

  auto b = parse_ideal("x1^2, x1*x2 + x2^2");
  CHECK(b.nvars == 2);
  CHECK(b.kind == IdealKind::MonomialPlusOneBinomial);

  CHECK_THROWS_AS(parse_ideal("x1 + x2^2"), NonHomogeneousError);
}

TEST_CASE("binomial coefficient normalization") {
  auto scaled = parse_ideal("x1^2, 3*x1*x2 + 3*x3^2", 3);
  CHECK(scaled.kind == IdealKind::MonomialPlusOneBinomial);
  const auto parts = binomial_parts(scaled);
  CHECK(parts.f1 == mono({1, 1, 0}));
  CHECK(parts.f2 == mono({0, 0, 2}));
  CHECK(scaled.generators[*scaled.binomial_index()].coefficient(parts.f1) == 1);

  CHECK(parse_ideal("x1^2, x1*x2 - x3^2", 3).kind == IdealKind::General);
  CHECK(parse_ideal("x1^2, x1*x2 + 2*x3^2", 3).kind == IdealKind::General);
  // a binomial beside a cubic monomial falls outside the one-binomial shape
  CHECK(parse_ideal("x1^3, x1*x2 + x2^2", 2).kind == IdealKind::General);
}

TEST_CASE("parser errors carry positions") {
  try {
    parse_ideal("x1^2,\n  x2^ + x1", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 3);
  }
  CHECK_THROWS_AS(parse_ideal("x1^2,, x2^2", 2), ParseError);
  CHECK_THROWS_AS(parse_ideal("x3^2", 2), ParseError);
  CHECK_THROWS_AS(parse_ideal("y1^2", 2), ParseError);
  CHECK_THROWS_AS(parse_ideal("x1^2 x2", 2), ParseError);
}

TEST_CASE("parser accepts comments, newlines and rational coefficients") {
  auto spec = parse_ideal("# pure squares\nx1^2\nx2^2   # second\n-1/2*x1*x2 +\n  x2^2*0 + 1/2*x1*x2", 2);
  CHECK(spec.generators.size() == 2);  // the last generator cancels to zero and is dropped
  auto p = parse_poly("-1/2*x1*x2 + 3*x1^2", 2);
  CHECK(p.coefficient(mono({1, 1})) == make_rational(-1, 2));
  CHECK(p.coefficient(mono({2, 0})) == 3);
  CHECK(parse_poly("x1*x1*x2", 2) == HomogPoly::monomial(mono({2, 1})));
}

TEST_CASE("minimalize_monomial_gens") {
  CHECK(minimalize_monomial_gens({mono({1, 0}), mono({1, 1})}) == std::vector<Monomial>{mono({1, 0})});
  CHECK(minimalize_monomial_gens({mono({2, 0}), mono({0, 2})}) == std::vector<Monomial>{mono({2, 0}), mono({0, 2})});
  CHECK(minimalize_monomial_gens({mono({1, 1}), mono({1, 1})}) == std::vector<Monomial>{mono({1, 1})});
}

TEST_CASE("to_string formats") {
  CHECK(to_string(poly("x1^2 - 1/2*x1*x2", 2)) == "x1^2 - 1/2*x1*x2");
  CHECK(to_string(HomogPoly(2, 1)) == "0");
  CHECK(to_string(poly("-x2", 2)) == "-x2");
}

TEST_CASE("property: graded-lex is a strict total order and degree lists increase") {
  std::mt19937_64 rng(21);
  GradedLexOrder lt;
  for (int trial = 0; trial < 500; ++trial) {
    const Monomial a = random_monomial(rng, 3, 3), b = random_monomial(rng, 3, 3),
                   c = random_monomial(rng, 3, 3);
    CHECK_FALSE(lt(a, a));
    CHECK(static_cast<int>(lt(a, b)) + static_cast<int>(lt(b, a)) + static_cast<int>(a == b) == 1);
    if (lt(a, b) && lt(b, c)) CHECK(lt(a, c));
  }
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 0; d <= 5; ++d) {
      const auto ms = monomials_of_degree(n, d);
      CHECK(ms.size() == binom(n + d - 1, d));
      for (std::size_t i = 1; i < ms.size(); ++i) CHECK(lt(ms[i - 1], ms[i]));
    }
}

TEST_CASE("property: minimalization preserves ideal membership") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    const std::size_t count = 1 + rng() % 6;
    for (std::size_t i = 0; i < count; ++i) {
      Monomial m = random_monomial(rng, 3, 3);
      if (m.degree() > 0) gens.push_back(m);
    }
    const auto minimal = minimalize_monomial_gens(gens);
    for (std::size_t i = 0; i < minimal.size(); ++i)
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (i != j) CHECK_FALSE(divides(minimal[i], minimal[j]));
    for (int probe = 0; probe < 30; ++probe) {
      const Monomial m = random_monomial(rng, 3, 4);
      CHECK(in_monomial_ideal(m, gens) == in_monomial_ideal(m, minimal));
    }
  }
}

TEST_CASE("property: poly_mul commutes and distributes") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const unsigned dp = rng() % 3, dq = rng() % 3;
    const HomogPoly p = random_poly(rng, n, dp), q = random_poly(rng, n, dq), r = random_poly(rng, n, dq);
    CHECK(poly_mul(p, q) == poly_mul(q, p));
    CHECK(poly_mul(p, q + r) == poly_mul(p, q) + poly_mul(p, r));
    CHECK(poly_mul(p, q).degree() == dp + dq);
  }
}

TEST_CASE("property: parse, print, parse is the identity on ideals") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<HomogPoly> gens;
    const std::size_t count = 1 + rng() % 4;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_poly(rng, n, 1 + rng() % 3));
    IdealSpec spec = make_ideal(n, gens);
    const IdealSpec again = parse_ideal(to_string(spec), n);
    CHECK(again == spec);
    for (const auto& g : spec.generators) CHECK(parse_poly(to_string(g), n) == g);
  }
}

TEST_CASE("property: permuting variables preserves degree and divisibility") {
  std::mt19937_64 rng(25);
  std::vector<std::size_t> perm{0, 1, 2};
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const Monomial a = random_monomial(rng, 3, 2), b = random_monomial(rng, 3, 3);
    CHECK(a.permuted(perm).degree() == a.degree());
    CHECK(divides(a, b) == divides(a.permuted(perm), b.permuted(perm)));
    CHECK((a * b).permuted(perm) == a.permuted(perm) * b.permuted(perm));
  }
}
