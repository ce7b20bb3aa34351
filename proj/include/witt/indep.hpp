#pragma once

#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "witt/ncpoly.hpp"
#include "witt/rng.hpp"

namespace witt {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Basis of the integer relations among the rows of M: all primitive c with
// c^T M = 0, content-reduced, first nonzero entry positive, sorted. Computed
// by fraction-free elimination on [M | I] — exact, no floating point.
std::vector<std::vector<Int>> null_space_exact(const IntMatrix& M);

// Rows = coefficient vectors of the polys over the union of their words,
// columns in the graded word order.
IntMatrix coefficient_matrix(std::span<const NcPoly> polys);

// A family of free-ring values to test for independence of their
// multiplicative lifts, probed through ghost components at levels
// 0..max_level (power p^n at level n).
struct IndependenceInstance {
  unsigned p = 3;
  std::vector<NcPoly> polys;
  unsigned max_level = 2;
};

// polys nonzero, pairwise distinct, no pair equal up to sign; p prime.
void validate_instance(const IndependenceInstance& inst);

// Word-count guard for the power expansions inside the checker.
struct GuardConfig {
  std::size_t max_words = 3'000'000;
};

// Resolves WITT_MAX_WORDS from the environment, else the default.
GuardConfig guard_from_env();

struct Verdict {
  bool independent = false;
  // Independent: first level prefix 0..level whose kernel is zero.
  // Undetermined: deepest prefix actually tested.
  unsigned level = 0;
  // Undetermined only: basis of the relations surviving every tested level.
  std::vector<std::vector<Int>> kernel_basis;
  std::vector<unsigned> tested_levels;
  std::vector<unsigned> untested_levels;  // nonempty iff the guard tripped
  std::string diagnostic;
};

// Decides whether any integer relation among the polys survives all ghost
// power levels 0..max_level. "Independent" is definitive for the whole
// family of lifts; "Undetermined" never claims dependence — it reports the
// surviving relations and how far they were tested.
Verdict check_independence(const IndependenceInstance& inst,
                           const GuardConfig& guard = GuardConfig{});

// ------------------------------------------------------------- sampling

// Adversarial instance stream: every emitted triple (f1, f2, f3) defeats
// both easy independence certificates — f3 = alpha f1 + beta f2 forces an
// integer relation at level 0, and f2 collides with f1 in the commutative
// shadow up to sign (by letter rearrangement, family "a", or by adding word
// commutators, family "b"). Both violations are re-verified on the final
// triple before it is emitted; draws that miss the preconditions are
// rejected and resampled up to max_attempts.
struct SamplerConfig {
  unsigned p = 3;
  unsigned degree_bound = 3;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> alphabet = {"X", "Y"};
  unsigned max_level = 2;
  std::size_t max_attempts = 10'000;
};

struct SampleOutcome {
  std::size_t index = 0;
  std::optional<IndependenceInstance> instance;  // empty: sample skipped
  char family = 'a';
  std::string diagnostic;  // set when skipped
};

class HardInstanceSampler {
 public:
  explicit HardInstanceSampler(SamplerConfig cfg);
  // One outcome per call, deterministic in (seed, config); nullopt when the
  // configured count has been produced.
  std::optional<SampleOutcome> next();

 private:
  SamplerConfig cfg_;
  DetRng rng_;
  AlgebraPtr alg_;
  std::size_t emitted_ = 0;
};

}  // namespace witt
