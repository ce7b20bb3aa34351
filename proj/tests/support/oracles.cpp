#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

QPoly QPoly::constant(std::size_t nvars, const mpq_class& c) {
  QPoly r(nvars);
  r.add_term(Key(nvars, 0), c);
  return r;
}

QPoly QPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::invalid_argument("QPoly::variable: index out of range");
  QPoly r(nvars);
  Key k(nvars, 0);
  k[i] = 1;
  r.add_term(std::move(k), 1);
  return r;
}

void QPoly::add_term(Key k, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(std::move(k), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k, -c);
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r(nvars_);
  for (const auto& [ka, ca] : t_)
    for (const auto& [kb, cb] : o.t_) {
      Key k(nvars_, 0);
      for (std::size_t i = 0; i < nvars_; ++i) k[i] = ka[i] + kb[i];
      r.add_term(std::move(k), ca * cb);
    }
  return r;
}

QPoly QPoly::scaled(const mpq_class& c) const {
  QPoly r(nvars_);
  for (const auto& [k, v] : t_) r.add_term(k, v * c);
  return r;
}

QPoly QPoly::pow(unsigned long k) const {
  QPoly r = constant(nvars_, 1);
  for (unsigned long i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::vector<QPoly> witt_law_polys(unsigned p, unsigned level, bool subtract) {
  const std::size_t nv = 2 * (std::size_t(level) + 1);
  auto X = [&](unsigned i) { return QPoly::variable(nv, i); };
  auto Y = [&](unsigned i) { return QPoly::variable(nv, level + 1 + i); };

  mpz_class pz(p);
  auto ghost = [&](auto var, unsigned n) {
    QPoly acc(nv);
    mpz_class pi = 1;
    unsigned long e = 1;
    for (unsigned j = 0; j < n; ++j) e *= p;
    for (unsigned i = 0; i <= n; ++i) {
      acc = acc + var(i).pow(e).scaled(mpq_class(pi));
      pi *= pz;
      e /= p;
    }
    return acc;
  };

  std::vector<QPoly> c;
  mpz_class pn = 1;
  for (unsigned n = 0; n <= level; ++n) {
    QPoly target = subtract ? ghost(X, n) - ghost(Y, n) : ghost(X, n) + ghost(Y, n);
    mpz_class pi = 1;
    unsigned long e = 1;
    for (unsigned j = 0; j < n; ++j) e *= p;
    for (unsigned i = 0; i < n; ++i) {
      target = target - c[i].pow(e).scaled(mpq_class(pi));
      pi *= pz;
      e /= p;
    }
    QPoly cn = target.scaled(mpq_class(1, pn));
    for (const auto& [k, v] : cn.terms())
      if (v.get_den() != 1)
        throw std::logic_error("witt_law_polys: non-integral coefficient");
    c.push_back(std::move(cn));
    pn *= pz;
  }
  return c;
}

std::vector<mpz_class> classical_witt_vec(const std::vector<mpz_class>& a,
                                          const std::vector<mpz_class>& b,
                                          unsigned long p, bool subtract) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("classical_witt_vec: size mismatch");
  const std::size_t n = a.size();
  mpz_class pz(static_cast<unsigned long>(p));

  auto ghost = [&](const std::vector<mpz_class>& v) {
    std::vector<mpz_class> g(n);
    for (std::size_t m = 0; m < n; ++m) {
      mpz_class acc = 0, pi = 1;
      unsigned long e = 1;
      for (std::size_t j = 0; j < m; ++j) e *= p;
      for (std::size_t i = 0; i <= m; ++i) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), v[i].get_mpz_t(), e);
        acc += pi * t;
        pi *= pz;
        e /= p;
      }
      g[m] = acc;
    }
    return g;
  };

  auto ga = ghost(a), gb = ghost(b);
  std::vector<mpz_class> s(n);
  mpz_class pn = 1;
  for (std::size_t m = 0; m < n; ++m) {
    mpz_class target = subtract ? mpz_class(ga[m] - gb[m]) : mpz_class(ga[m] + gb[m]);
    mpz_class pi = 1;
    unsigned long e = 1;
    for (std::size_t j = 0; j < m; ++j) e *= p;
    for (std::size_t i = 0; i < m; ++i) {
      mpz_class t;
      mpz_pow_ui(t.get_mpz_t(), s[i].get_mpz_t(), e);
      target -= pi * t;
      pi *= pz;
      e /= p;
    }
    if (!mpz_divisible_p(target.get_mpz_t(), pn.get_mpz_t()))
      throw std::logic_error("classical_witt_vec: ghost solve left a fraction");
    mpz_divexact(s[m].get_mpz_t(), target.get_mpz_t(), pn.get_mpz_t());
    pn *= pz;
  }
  return s;
}

std::vector<std::vector<mpq_class>> q_left_kernel(
    const std::vector<std::vector<mpz_class>>& M) {
  const std::size_t r = M.size();
  const std::size_t c = r ? M[0].size() : 0;
  // Kernel of the transpose: rows indexed by columns of M.
  std::vector<std::vector<mpq_class>> A(c, std::vector<mpq_class>(r));
  for (std::size_t i = 0; i < r; ++i) {
    if (M[i].size() != c) throw std::invalid_argument("q_left_kernel: ragged matrix");
    for (std::size_t j = 0; j < c; ++j) A[j][i] = mpq_class(M[i][j]);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r && row < c; ++col) {
    std::size_t sel = row;
    while (sel < c && A[sel][col] == 0) ++sel;
    if (sel == c) continue;
    std::swap(A[sel], A[row]);
    mpq_class inv = 1 / A[row][col];
    for (auto& x : A[row]) x *= inv;
    for (std::size_t i = 0; i < c; ++i) {
      if (i == row || A[i][col] == 0) continue;
      mpq_class f = A[i][col];
      for (std::size_t j = 0; j < r; ++j) A[i][j] -= f * A[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<std::vector<mpq_class>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t col = 0; col < r; ++col) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    std::vector<mpq_class> v(r, 0);
    v[col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -A[i][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<unsigned char> brute_min_rotation(const std::vector<unsigned char>& w) {
  std::vector<unsigned char> best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::vector<unsigned char> rot(w.begin() + k, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + k);
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace oracle
