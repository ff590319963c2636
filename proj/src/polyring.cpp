#include "ezdlab/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ezdlab {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

Monomial Monomial::one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  std::vector<Exponent> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw std::invalid_argument("Monomial product: nvars mismatch");
  std::vector<Exponent> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Exponent>(e[i] + other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::permuted(const std::vector<std::size_t>& perm) const {
  std::vector<Exponent> e(exps_.size(), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) e[perm[i]] = exps_[i];
  return Monomial(std::move(e));
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // heavier in x1 (then x2, ...) comes first
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ull;
  return h;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("divides: nvars mismatch");
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

namespace {

void fill_monomials(std::vector<Exponent>& cur, std::size_t pos, unsigned remaining,
                    std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = static_cast<Exponent>(remaining);
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = static_cast<Exponent>(e);
    fill_monomials(cur, pos + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  if (nvars == 0) throw std::invalid_argument("monomials_of_degree: need at least one variable");
  std::vector<Monomial> out;
  std::vector<Exponent> cur(nvars, 0);
  fill_monomials(cur, 0, degree, out);
  return out;
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& generators) {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

std::vector<Monomial> minimalize_monomial_gens(std::vector<Monomial> generators) {
  std::sort(generators.begin(), generators.end(), GradedLexOrder{});
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Monomial> kept;
  // sorted by degree, so only earlier entries can divide later ones
  for (const auto& g : generators)
    if (!in_monomial_ideal(g, kept)) kept.push_back(g);
  return kept;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exponent(i) == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m.exponent(i) > 1) out += '^' + std::to_string(m.exponent(i));
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- HomogPoly

HomogPoly::HomogPoly(std::size_t nvars, unsigned degree,
                     const std::vector<std::pair<Monomial, Rational>>& terms)
    : nvars_(nvars), degree_(degree) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

HomogPoly HomogPoly::monomial(const Monomial& m, Rational c) {
  HomogPoly p(m.nvars(), m.degree());
  p.add_term(m, c);
  return p;
}

HomogPoly HomogPoly::linear_form(const Vector& coeffs) {
  HomogPoly p(coeffs.size(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(coeffs.size(), i), coeffs[i]);
  return p;
}

HomogPoly HomogPoly::sum_of_variables(std::size_t nvars) {
  return linear_form(Vector(nvars, Rational(1)));
}

Rational HomogPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomogPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("HomogPoly: nvars mismatch");
  if (m.degree() != degree_)
    throw NonHomogeneousError("term " + to_string(m) + " has degree " + std::to_string(m.degree()) +
                              ", expected " + std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomogPoly HomogPoly::operator+(const HomogPoly& other) const {
  if (other.is_zero()) return *this;
  if (is_zero()) return other;
  HomogPoly out(*this);
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

HomogPoly HomogPoly::operator-(const HomogPoly& other) const { return *this + other * Rational(-1); }

HomogPoly HomogPoly::operator*(const Rational& c) const {
  HomogPoly out(nvars_, degree_);
  if (c == 0) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, a * c);
  return out;
}

HomogPoly HomogPoly::operator*(const HomogPoly& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("HomogPoly product: nvars mismatch");
  HomogPoly out(nvars_, degree_ + other.degree_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q) { return p * q; }

HomogPoly poly_pow(const HomogPoly& p, unsigned e) {
  HomogPoly out = HomogPoly::monomial(Monomial::one(p.nvars()));
  for (unsigned i = 0; i < e; ++i) out = out * p;
  return out;
}

std::string to_string(const HomogPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool constant = m.degree() == 0;
    if (a != 1 || constant) {
      out += to_string(a);
      if (!constant) out += '*';
    }
    if (!constant) out += to_string(m);
  }
  return out;
}

// ---------------------------------------------------------------- IdealSpec

std::string to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::Monomial: return "Monomial";
    case IdealKind::MonomialPlusOneBinomial: return "MonomialPlusOneBinomial";
    case IdealKind::General: return "General";
  }
  return "General";
}

std::vector<Monomial> IdealSpec::monomial_generators() const {
  std::vector<Monomial> out;
  for (const auto& g : generators)
    if (g.term_count() == 1) out.push_back(g.terms().begin()->first);
  return out;
}

std::optional<std::size_t> IdealSpec::binomial_index() const {
  if (kind != IdealKind::MonomialPlusOneBinomial) return std::nullopt;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].term_count() == 2) return i;
  return std::nullopt;
}

unsigned IdealSpec::max_generator_degree() const {
  unsigned d = 0;
  for (const auto& g : generators) d = std::max(d, g.degree());
  return d;
}

IdealSpec make_ideal(std::size_t nvars, std::vector<HomogPoly> generators) {
  IdealSpec spec;
  spec.nvars = nvars;
  for (auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("make_ideal: generator nvars mismatch");
    if (g.is_zero()) continue;
    if (g.degree() == 0) throw std::invalid_argument("make_ideal: a nonzero constant generates the unit ideal");
    if (g.term_count() == 1) g = HomogPoly::monomial(g.terms().begin()->first);
    spec.generators.push_back(std::move(g));
  }

  std::size_t single = 0, two_term = 0;
  bool singles_all_quadratic = true;
  for (const auto& g : spec.generators) {
    if (g.term_count() == 1) {
      ++single;
      singles_all_quadratic = singles_all_quadratic && g.degree() == 2;
    } else if (g.term_count() == 2) {
      ++two_term;
    }
  }
  if (single == spec.generators.size()) {
    spec.kind = IdealKind::Monomial;
    return spec;
  }
  spec.kind = IdealKind::General;
  if (two_term == 1 && single + 1 == spec.generators.size() && singles_all_quadratic) {
    for (auto& g : spec.generators) {
      if (g.term_count() != 2 || g.degree() != 2) continue;
      auto it = g.terms().begin();
      const Rational c1 = it->second, c2 = std::next(it)->second;
      if (c1 == c2) {
        g = g * Rational(1 / c1);
        spec.kind = IdealKind::MonomialPlusOneBinomial;
      }
    }
  }
  return spec;
}

IdealSpec monomial_ideal(std::size_t nvars, const std::vector<Monomial>& generators) {
  std::vector<HomogPoly> gens;
  for (const auto& m : generators) gens.push_back(HomogPoly::monomial(m));
  return make_ideal(nvars, std::move(gens));
}

BinomialParts binomial_parts(const IdealSpec& spec) {
  auto idx = spec.binomial_index();
  if (!idx) throw std::invalid_argument("binomial_parts: ideal is not of MonomialPlusOneBinomial kind");
  const auto& b = spec.generators[*idx];
  auto it = b.terms().begin();
  BinomialParts parts{{}, it->first, std::next(it)->first};
  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    if (i != *idx) parts.j.push_back(spec.generators[i].terms().begin()->first);
  return parts;
}

std::string to_string(const IdealSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(spec.generators[i]);
  }
  return out;
}

// ---------------------------------------------------------------- parsing

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                            message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Number, Var, Caret, Star, Slash, Plus, Minus, Comma, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    i += k;
    col += k;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", line, col});
      ++i;
      ++line;
      col = 1;
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (c == 'x') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw ParseError("expected a variable index after 'x'", line, col + 1);
      out.push_back({Tok::Var, std::string(s.substr(i + 1, j - i - 1)), line, col});
      advance(j - i);
    } else {
      Tok kind;
      switch (c) {
        case '^': kind = Tok::Caret; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case ',': kind = Tok::Comma; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      out.push_back({kind, std::string(1, c), line, col});
      advance(1);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct RawTerm {
  Rational coeff;
  std::map<std::size_t, unsigned> powers;  // variable index (0-based) -> exponent
  unsigned degree = 0;
  std::size_t line, column;
};

struct RawPoly {
  std::vector<RawTerm> terms;
  std::size_t line, column;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<RawPoly> ideal() {
    std::vector<RawPoly> out;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::End) break;
      if (peek().kind == Tok::Comma) fail("empty generator");
      out.push_back(poly());
      const Token& t = peek();
      if (t.kind == Tok::Comma || t.kind == Tok::Newline) {
        next();
      } else if (t.kind != Tok::End) {
        fail("expected ',' or end of generator");
      }
    }
    return out;
  }

  RawPoly single_poly() {
    skip_newlines();
    RawPoly p = poly();
    skip_newlines();
    if (peek().kind != Tok::End) fail("unexpected input after polynomial");
    return p;
  }

  std::size_t max_var() const { return max_var_; }
  const std::vector<Token>& var_tokens() const { return var_tokens_; }

 private:
  RawPoly poly() {
    RawPoly p{{}, peek().line, peek().column};
    bool negative = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negative = next().kind == Tok::Minus;
      skip_newlines();
    }
    p.terms.push_back(term(negative));
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negative = next().kind == Tok::Minus;
      skip_newlines();
      p.terms.push_back(term(negative));
    }
    return p;
  }

  RawTerm term(bool negative) {
    RawTerm t{Rational(negative ? -1 : 1), {}, 0, peek().line, peek().column};
    factor(t);
    while (peek().kind == Tok::Star) {
      next();
      factor(t);
    }
    return t;
  }

  void factor(RawTerm& t) {
    const Token tok = next();
    if (tok.kind == Tok::Number) {
      std::string text = tok.text;
      if (peek().kind == Tok::Slash) {
        next();
        const Token den = next();
        if (den.kind != Tok::Number) fail_at("expected a denominator", den);
        text += "/" + den.text;
        if (mpz_class(den.text) == 0) fail_at("zero denominator", den);
      }
      t.coeff *= parse_rational(text);
    } else if (tok.kind == Tok::Var) {
      const unsigned long index = std::stoul(tok.text);
      if (index == 0) fail_at("variables are numbered from x1", tok);
      unsigned e = 1;
      if (peek().kind == Tok::Caret) {
        next();
        const Token ex = next();
        if (ex.kind != Tok::Number) fail_at("expected an exponent after '^'", ex);
        if (ex.text.size() > 4) fail_at("exponent too large", ex);
        e = static_cast<unsigned>(std::stoul(ex.text));
      }
      t.powers[index - 1] += e;
      t.degree += e;
      max_var_ = std::max<std::size_t>(max_var_, index);
      var_tokens_.push_back(tok);
    } else {
      fail_at(tok.kind == Tok::End ? "unexpected end of input" : "expected a number or variable, got '" + tok.text + "'",
              tok);
    }
  }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek()); }
  [[noreturn]] static void fail_at(const std::string& msg, const Token& t) { throw ParseError(msg, t.line, t.column); }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
  std::vector<Token> var_tokens_;
};

std::size_t resolve_nvars(const Parser& parser, std::size_t nvars) {
  if (nvars == 0) return std::max<std::size_t>(parser.max_var(), 1);
  for (const auto& t : parser.var_tokens())
    if (std::stoul(t.text) > nvars)
      throw ParseError("variable x" + t.text + " exceeds n = " + std::to_string(nvars), t.line, t.column);
  return nvars;
}

HomogPoly build_poly(const RawPoly& raw, std::size_t nvars) {
  const unsigned degree = raw.terms.front().degree;
  HomogPoly p(nvars, degree);
  for (const auto& t : raw.terms) {
    if (t.degree != degree)
      throw NonHomogeneousError("line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                                ": not homogeneous: term of degree " + std::to_string(t.degree) +
                                " in a polynomial of degree " + std::to_string(degree));
    std::vector<Exponent> e(nvars, 0);
    for (auto [v, k] : t.powers) e[v] = static_cast<Exponent>(k);
    p.add_term(Monomial(std::move(e)), t.coeff);
  }
  return p;
}

}  // namespace

IdealSpec parse_ideal(std::string_view text, std::size_t nvars) {
  Parser parser(tokenize(text));
  auto raws = parser.ideal();
  nvars = resolve_nvars(parser, nvars);
  std::vector<HomogPoly> gens;
  for (const auto& r : raws) gens.push_back(build_poly(r, nvars));
  return make_ideal(nvars, std::move(gens));
}

HomogPoly parse_poly(std::string_view text, std::size_t nvars) {
  Parser parser(tokenize(text));
  auto raw = parser.single_poly();
  nvars = resolve_nvars(parser, nvars);
  return build_poly(raw, nvars);
}

}  // namespace ezdlab
