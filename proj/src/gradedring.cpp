#include "ezdlab/gradedring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ezdlab {

namespace {

void index_piece(std::vector<Monomial> monomials, auto& piece) {
  piece.monomials = std::move(monomials);
  piece.index.reserve(piece.monomials.size());
  for (std::size_t i = 0; i < piece.monomials.size(); ++i) piece.index.emplace(piece.monomials[i], i);
}

void finish_basis(auto& piece, const std::vector<bool>& in_relations) {
  piece.coordinate.assign(piece.monomials.size(), -1);
  for (std::size_t i = 0; i < piece.monomials.size(); ++i) {
    if (in_relations[i]) continue;
    piece.coordinate[i] = static_cast<std::ptrdiff_t>(piece.basis.size());
    piece.basis.push_back(i);
  }
}

}  // namespace

GradedQuotient build_quotient(const IdealSpec& spec, unsigned bound, QuotientPath path) {
  if (spec.nvars == 0) throw std::invalid_argument("build_quotient: need at least one variable");
  GradedQuotient ring;
  ring.ideal_ = spec;
  ring.bound_ = bound;
  ring.combinatorial_ = path == QuotientPath::Auto && spec.kind == IdealKind::Monomial;
  ring.pieces_.resize(bound + 1);

  const auto mono_gens = minimalize_monomial_gens(spec.monomial_generators());
  bool seen_zero = false;
  for (unsigned d = 0; d <= bound; ++d) {
    auto& piece = ring.pieces_[d];
    index_piece(monomials_of_degree(spec.nvars, d), piece);
    std::vector<bool> in_relations(piece.monomials.size(), false);
    if (ring.combinatorial_) {
      for (std::size_t i = 0; i < piece.monomials.size(); ++i)
        in_relations[i] = in_monomial_ideal(piece.monomials[i], mono_gens);
    } else {
      // S_d = span{m * g : deg(m * g) = d}
      std::vector<Vector> rows;
      for (const auto& g : spec.generators) {
        if (g.degree() > d) continue;
        for (const auto& m : monomials_of_degree(spec.nvars, d - g.degree())) {
          Vector row(piece.monomials.size(), Rational(0));
          for (const auto& [t, c] : g.terms()) row[piece.index.at(m * t)] = c;
          rows.push_back(std::move(row));
        }
      }
      piece.relations = Subspace::span(piece.monomials.size(), rows);
      for (auto p : piece.relations->pivots()) in_relations[p] = true;
    }
    finish_basis(piece, in_relations);
    if (seen_zero && !piece.basis.empty())
      throw std::logic_error("build_quotient: R_" + std::to_string(d) + " nonzero after a zero piece");
    if (piece.basis.empty()) {
      seen_zero = true;
    } else {
      ring.top_ = d;
    }
  }
  return ring;
}

std::optional<unsigned> GradedQuotient::top_degree() const {
  if (!vanishes_within_bound()) return std::nullopt;
  return top_;
}

const GradedQuotient::Piece& GradedQuotient::piece(unsigned d) const {
  if (d > bound_) throw std::out_of_range("degree " + std::to_string(d) + " beyond bound " + std::to_string(bound_));
  return pieces_[d];
}

std::size_t GradedQuotient::dim(unsigned d) const {
  if (d > bound_) {
    if (vanishes_within_bound()) return 0;
    throw std::out_of_range("degree " + std::to_string(d) + " beyond bound " + std::to_string(bound_));
  }
  return pieces_[d].basis.size();
}

std::vector<Monomial> GradedQuotient::basis_monomials(unsigned d) const {
  if (d > bound_ && vanishes_within_bound()) return {};
  const auto& p = piece(d);
  std::vector<Monomial> out;
  out.reserve(p.basis.size());
  for (auto i : p.basis) out.push_back(p.monomials[i]);
  return out;
}

const std::vector<Monomial>& GradedQuotient::spanning_monomials(unsigned d) const { return piece(d).monomials; }

Subspace GradedQuotient::relation_subspace(unsigned d) const {
  const auto& p = piece(d);
  if (p.relations) return *p.relations;
  std::vector<Vector> units;
  for (std::size_t i = 0; i < p.monomials.size(); ++i) {
    if (p.coordinate[i] >= 0) continue;
    Vector e(p.monomials.size(), Rational(0));
    e[i] = 1;
    units.push_back(std::move(e));
  }
  return Subspace::span(p.monomials.size(), units);
}

Vector GradedQuotient::normal_form(const HomogPoly& poly) const {
  if (poly.nvars() != nvars()) throw std::invalid_argument("normal_form: nvars mismatch");
  const unsigned d = poly.degree();
  if (d > bound_) {
    if (vanishes_within_bound()) return {};
    throw std::out_of_range("normal_form: degree " + std::to_string(d) + " beyond bound " + std::to_string(bound_));
  }
  const auto& p = pieces_[d];
  Vector out(p.basis.size(), Rational(0));
  if (!p.relations) {
    for (const auto& [m, c] : poly.terms()) {
      const auto k = p.coordinate[p.index.at(m)];
      if (k >= 0) out[static_cast<std::size_t>(k)] += c;
    }
    return out;
  }
  Vector full(p.monomials.size(), Rational(0));
  for (const auto& [m, c] : poly.terms()) full[p.index.at(m)] = c;
  full = p.relations->reduce(std::move(full));
  for (std::size_t k = 0; k < p.basis.size(); ++k) out[k] = full[p.basis[k]];
  return out;
}

HomogPoly GradedQuotient::lift(unsigned d, const Vector& coords) const {
  HomogPoly out(nvars(), d);
  if (coords.empty()) return out;
  const auto& p = piece(d);
  if (coords.size() != p.basis.size()) throw std::invalid_argument("lift: coordinate length mismatch");
  for (std::size_t k = 0; k < coords.size(); ++k) out.add_term(p.monomials[p.basis[k]], coords[k]);
  return out;
}

HilbertFn hilbert_function(const GradedQuotient& ring) {
  HilbertFn h;
  for (unsigned d = 0; d <= ring.bound(); ++d) h.values.push_back(ring.dim(d));
  h.artinian_within_bound = ring.vanishes_within_bound();
  h.top_degree = ring.top_degree();
  return h;
}

bool monomial_ideal_is_artinian(std::size_t nvars, const std::vector<Monomial>& generators) {
  std::vector<bool> has_power(nvars, false);
  for (const auto& g : generators)
    if (auto v = g.pure_power_variable()) has_power[*v] = true;
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

bool is_artinian_within(const GradedQuotient& ring) {
  const auto& spec = ring.ideal();
  if (spec.kind == IdealKind::Monomial) return monomial_ideal_is_artinian(spec.nvars, spec.monomial_generators());
  return ring.vanishes_within_bound();
}

unsigned default_degree_bound(const IdealSpec& spec) {
  if (spec.kind == IdealKind::Monomial) {
    const auto gens = spec.monomial_generators();
    if (monomial_ideal_is_artinian(spec.nvars, gens)) {
      std::vector<unsigned> least(spec.nvars, ~0u);
      for (const auto& g : gens)
        if (auto v = g.pure_power_variable()) least[*v] = std::min<unsigned>(least[*v], g.degree());
      unsigned bound = 1;
      for (auto a : least) bound += a - 1;
      return bound;
    }
  }
  const unsigned t = std::max(spec.max_generator_degree(), 2u);
  return static_cast<unsigned>(spec.nvars) * (t - 1) + 1;
}

unsigned effective_degree_bound(const IdealSpec& spec, unsigned requested) {
  if (spec.kind == IdealKind::Monomial && monomial_ideal_is_artinian(spec.nvars, spec.monomial_generators()))
    return std::max(requested, default_degree_bound(spec));
  return requested;
}

}  // namespace ezdlab
