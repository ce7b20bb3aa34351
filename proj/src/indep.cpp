#include "witt/indep.hpp"

#include <algorithm>
#include <map>
#include <span>

namespace witt {

// content-reduce and make the first nonzero entry positive
static void normalize_relation(std::vector<Int>& v) {
  Int g(0);
  for (const auto& x : v) g = int_gcd(g, x);
  if (sgn(g) == 0) return;
  int lead = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  if (lead < 0) g = -g;
  for (auto& x : v) x = exact_div(x, g, "normalize_relation");
}

static bool vec_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Int& x, const Int& y) { return cmp(x, y) < 0; });
}

std::vector<std::vector<Int>> null_space_exact(const IntMatrix& M) {
  const std::size_t r = M.rows, m = M.cols;
  // Working rows of [M | I]; after elimination the identity part of every
  // fully-cancelled row is a relation among the original rows.
  std::vector<std::vector<Int>> W(r, std::vector<Int>(m + r, Int(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m; ++j) W[i][j] = M.at(i, j);
    W[i][m + i] = 1;
  }
  Int prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && sgn(W[piv][col]) == 0) ++piv;
    if (piv == r) continue;
    std::swap(W[rank], W[piv]);
    for (std::size_t row = rank + 1; row < r; ++row) {
      for (std::size_t j = 0; j < m + r; ++j) {
        if (j == col) continue;
        // Fraction-free update: entries stay minors of [M | I], so the
        // division by the previous pivot is exact.
        W[row][j] = exact_div(W[row][j] * W[rank][col] - W[row][col] * W[rank][j],
                              prev, "null_space_exact");
      }
      W[row][col] = 0;
    }
    prev = W[rank][col];
    ++rank;
  }
  std::vector<std::vector<Int>> out;
  for (std::size_t row = rank; row < r; ++row) {
    std::vector<Int> v(W[row].begin() + static_cast<std::ptrdiff_t>(m), W[row].end());
    normalize_relation(v);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), vec_less);
  return out;
}

IntMatrix coefficient_matrix(std::span<const NcPoly> polys) {
  std::map<Word, std::size_t, WordDegLexLess> col_of;
  for (const auto& f : polys)
    for (const auto& [w, c] : f.terms()) col_of.emplace(w, 0);
  std::size_t k = 0;
  for (auto& [w, ix] : col_of) ix = k++;
  IntMatrix M(polys.size(), col_of.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [w, c] : polys[i].terms()) M.at(i, col_of[w]) = c;
  return M;
}

void validate_instance(const IndependenceInstance& inst) {
  if (!is_prime(inst.p)) throw usage_error("independence instance: p must be prime");
  if (inst.polys.empty()) throw usage_error("independence instance: no polynomials");
  AlgebraPtr shared;
  for (const auto& f : inst.polys) {
    shared = require_same_context(shared, f.algebra(), "independence instance");
    if (f.is_zero())
      throw usage_error("independence instance: zero polynomial");
  }
  for (std::size_t i = 0; i < inst.polys.size(); ++i)
    for (std::size_t j = i + 1; j < inst.polys.size(); ++j) {
      if (inst.polys[i] == inst.polys[j])
        throw usage_error("independence instance: duplicate polynomials");
      if (inst.polys[i] == -inst.polys[j])
        throw usage_error("independence instance: polynomials equal up to sign");
    }
}

GuardConfig guard_from_env() {
  GuardConfig g;
  if (const char* env = std::getenv("WITT_MAX_WORDS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (!end || *end != '\0' || v == 0)
      throw usage_error("WITT_MAX_WORDS must be a positive integer");
    g.max_words = static_cast<std::size_t>(v);
  }
  return g;
}

static unsigned long pow_exponent(unsigned p, unsigned n) {
  unsigned long r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > (1UL << 62) / p)
      throw resource_limit_error("power exponent p^n overflows");
    r *= p;
  }
  return r;
}

Verdict check_independence(const IndependenceInstance& inst,
                           const GuardConfig& guard) {
  validate_instance(inst);
  const std::size_t r = inst.polys.size();

  // Surviving relations; before any level is tested, all of Z^r.
  std::vector<std::vector<Int>> basis;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Int> e(r, Int(0));
    e[i] = 1;
    basis.push_back(std::move(e));
  }

  Verdict v;
  for (unsigned n = 0; n <= inst.max_level; ++n) {
    std::vector<NcPoly> combos;
    try {
      unsigned long e = pow_exponent(inst.p, n);
      std::vector<NcPoly> powers;
      powers.reserve(r);
      for (const auto& f : inst.polys) powers.push_back(f.pow(e, guard.max_words));
      // Only combinations along surviving relations can still vanish; test
      // exactly those.
      for (const auto& c : basis) {
        NcPoly g;
        for (std::size_t i = 0; i < r; ++i) g += c[i] * powers[i];
        combos.push_back(std::move(g));
      }
    } catch (const resource_limit_error& ex) {
      v.independent = false;
      v.level = n == 0 ? 0 : n - 1;
      v.kernel_basis = basis;
      for (unsigned k = n; k <= inst.max_level; ++k) v.untested_levels.push_back(k);
      v.diagnostic = std::string("word-count guard tripped at level ") +
                     std::to_string(n) + ": " + ex.what();
      return v;
    }
    IntMatrix M = coefficient_matrix(combos);
    std::vector<std::vector<Int>> inner = null_space_exact(M);
    std::vector<std::vector<Int>> next;
    for (const auto& u : inner) {
      std::vector<Int> w(r, Int(0));
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) w[i] += u[j] * basis[j][i];
      normalize_relation(w);
      next.push_back(std::move(w));
    }
    std::sort(next.begin(), next.end(), vec_less);
    basis = std::move(next);
    v.tested_levels.push_back(n);
    if (basis.empty()) {
      v.independent = true;
      v.level = n;
      return v;
    }
  }
  v.independent = false;
  v.level = inst.max_level;
  v.kernel_basis = basis;
  v.diagnostic = "relations survive every tested level";
  return v;
}

}  // namespace witt
