#include "witt/ghost.hpp"

#include <algorithm>

namespace witt {

WittContext::WittContext(unsigned p, unsigned level, AlgebraPtr alg,
                         bool allow_even_prime)
    : p_(p), level_(level), alg_(std::move(alg)), allow2_(allow_even_prime), p_int_(p) {
  if (!is_prime(p)) throw usage_error("WittContext: p must be prime");
  if (p == 2 && !allow2_)
    throw usage_error(
        "WittContext: p = 2 needs the explicit opt-in (identities assume p != 2)");
  if (!alg_) throw usage_error("WittContext: null algebra context");
}

unsigned long WittContext::p_pow(unsigned e) const {
  unsigned long r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (1UL << 62) / p_)
      throw resource_limit_error("p^" + std::to_string(e) +
                                 " is too large for a power exponent");
    r *= p_;
  }
  return r;
}

static void check_ctx_poly(const NcPoly& a, const WittContext& ctx, const char* op) {
  if (a.algebra() && !a.algebra()->same(*ctx.algebra()))
    throw usage_error(std::string(op) + ": value context differs from the Witt context");
}

std::vector<NcPoly> teichmuller(const NcPoly& a, const WittContext& ctx) {
  check_ctx_poly(a, ctx, "teichmuller");
  std::vector<NcPoly> out;
  out.reserve(ctx.level() + 1);
  for (unsigned n = 0; n <= ctx.level(); ++n) out.push_back(a.pow(ctx.p_pow(n)));
  return out;
}

std::vector<NcPoly> verschiebung_scaled(std::span<const NcPoly> v,
                                        const WittContext& ctx) {
  if (v.size() != ctx.level() + 1)
    throw usage_error("verschiebung_scaled: need level+1 coordinates");
  std::vector<NcPoly> out;
  out.reserve(v.size());
  out.push_back(NcPoly::zero(ctx.algebra()));
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    check_ctx_poly(v[i], ctx, "verschiebung_scaled");
    out.push_back(ctx.p_int() * v[i]);
  }
  return out;
}

WittCoords::WittCoords(std::vector<NcPoly> coords) : c_(std::move(coords)) {
  if (c_.empty()) throw usage_error("WittCoords: need at least one coordinate");
  AlgebraPtr shared;
  for (const auto& a : c_) shared = require_same_context(shared, a.algebra(), "WittCoords");
}

WittCoords WittCoords::zero(const WittContext& ctx) {
  return WittCoords(std::vector<NcPoly>(ctx.level() + 1, NcPoly::zero(ctx.algebra())));
}

AlgebraPtr WittCoords::algebra() const {
  AlgebraPtr shared;
  for (const auto& a : c_) shared = require_same_context(shared, a.algebra(), "WittCoords");
  return shared;
}

WittCoords teichmuller_coords(const NcPoly& a, const WittContext& ctx) {
  check_ctx_poly(a, ctx, "teichmuller_coords");
  std::vector<NcPoly> out(ctx.level() + 1, NcPoly::zero(ctx.algebra()));
  out[0] = a;
  // Preserve the ambient context even when a is a detached zero.
  return WittCoords(std::move(out));
}

WittCoords verschiebung_shift(const WittCoords& v) {
  std::vector<NcPoly> out;
  out.reserve(v.size());
  out.push_back(NcPoly::zero(v.algebra()));
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i]);
  return WittCoords(std::move(out));
}

FormalXElement& FormalXElement::add_term(Int coeff, unsigned shift, NcPoly base) {
  if (sgn(coeff) == 0 || base.is_zero()) return *this;
  terms_.push_back(FormalTerm{std::move(coeff), shift, std::move(base)});
  return *this;
}

FormalXElement FormalXElement::lift_of(NcPoly base) {
  FormalXElement e;
  e.add_term(Int(1), 0, std::move(base));
  return e;
}

FormalXElement operator+(const FormalXElement& a, const FormalXElement& b) {
  FormalXElement out = a;
  for (const auto& t : b.terms_) out.terms_.push_back(t);
  return out;
}

FormalXElement FormalXElement::operator-() const {
  FormalXElement out;
  for (const auto& t : terms_) out.terms_.push_back(FormalTerm{-t.coeff, t.shift, t.base});
  return out;
}

std::vector<NcPoly> evaluate_formal(const FormalXElement& e, const WittContext& ctx) {
  std::vector<NcPoly> out(ctx.level() + 1, NcPoly::zero(ctx.algebra()));
  for (const auto& t : e.terms()) {
    check_ctx_poly(t.base, ctx, "evaluate_formal");
    Int scale = t.coeff * int_pow(ctx.p_int(), t.shift);
    for (unsigned n = t.shift; n <= ctx.level(); ++n)
      out[n] += scale * t.base.pow(ctx.p_pow(n - t.shift));
  }
  return out;
}

GhostVector ghost_of_coords(const WittCoords& v, const WittContext& ctx) {
  if (v.size() != ctx.level() + 1)
    throw usage_error("ghost_of_coords: need level+1 coordinates");
  for (const auto& a : v.coords()) check_ctx_poly(a, ctx, "ghost_of_coords");
  GhostVector g;
  g.components.reserve(ctx.level() + 1);
  for (unsigned n = 0; n <= ctx.level(); ++n) {
    NcPoly acc = NcPoly::zero(ctx.algebra());
    for (unsigned i = 0; i <= n; ++i)
      acc += int_pow(ctx.p_int(), i) * v[i].pow(ctx.p_pow(n - i));
    g.components.push_back(project(acc));
  }
  return g;
}

std::optional<unsigned> divisibility_obstruction(std::span<const NcPoly> v,
                                                const WittContext& ctx) {
  if (v.size() != ctx.level() + 1)
    throw usage_error("divisibility_obstruction: need level+1 coordinates");
  bool all_zero = true;
  for (const auto& a : v) {
    check_ctx_poly(a, ctx, "divisibility_obstruction");
    if (!a.is_zero()) all_zero = false;
  }
  if (all_zero) return std::nullopt;
  for (unsigned n = ctx.level();; --n) {
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i)
      if (!v[i].is_zero()) ok = false;
    if (ok) {
      Int pn = int_pow(ctx.p_int(), n);
      for (const auto& a : v) {
        for (const auto& [w, c] : a.terms())
          if (!is_divisible(c, pn)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
    }
    if (ok) return n;
    if (n == 0) break;
  }
  // n = 0 always holds: the empty prefix and divisibility by 1.
  return 0;
}

}  // namespace witt
