#include <algorithm>

#include "witt/cpoly.hpp"
#include "witt/indep.hpp"

namespace witt {

HardInstanceSampler::HardInstanceSampler(SamplerConfig cfg)
    : cfg_(std::move(cfg)), rng_(cfg_.seed) {
  if (!is_prime(cfg_.p)) throw usage_error("sampler: p must be prime");
  if (cfg_.alphabet.size() < 2)
    throw usage_error("sampler: need at least two variables");
  if (cfg_.degree_bound < 2)
    throw usage_error("sampler: degree bound below 2 leaves no room for commutators");
  alg_ = Algebra::make(cfg_.alphabet);
}

namespace {

Int nonzero_small_coeff(DetRng& rng) {
  static const std::vector<long> choices = {-2, -1, 1, 2};
  return Int(choices[rng.below(choices.size())]);
}

Word random_word(DetRng& rng, const AlgebraPtr& alg, std::size_t min_len,
                 std::size_t max_len) {
  std::size_t len = min_len + rng.below(max_len - min_len + 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(static_cast<std::uint8_t>(rng.below(alg->size())));
  return w;
}

NcPoly random_poly(DetRng& rng, const AlgebraPtr& alg, unsigned degree_bound) {
  std::size_t nterms = 2 + rng.below(5);  // 2..6 drawn words, duplicates merge
  std::vector<NcPoly::Term> buf;
  for (std::size_t i = 0; i < nterms; ++i)
    buf.emplace_back(random_word(rng, alg, 0, degree_bound),
                     nonzero_small_coeff(rng));
  return NcPoly::from_terms(alg, std::move(buf));
}

Word shuffled(DetRng& rng, Word w) {
  for (std::size_t i = w.size(); i > 1; --i)
    std::swap(w[i - 1], w[rng.below(i)]);
  return w;
}

bool collides_commutatively(const std::vector<NcPoly>& polys) {
  std::vector<CPoly> images;
  for (const auto& f : polys) images.push_back(commutative_image(f));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] == images[j] || images[i] == -images[j]) return true;
  return false;
}

bool meets_preconditions(const std::vector<NcPoly>& polys) {
  for (const auto& f : polys)
    if (f.is_zero()) return false;
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      if (polys[i] == polys[j] || polys[i] == -polys[j]) return false;
  return true;
}

}  // namespace

std::optional<SampleOutcome> HardInstanceSampler::next() {
  if (emitted_ >= cfg_.count) return std::nullopt;
  SampleOutcome out;
  out.index = emitted_;
  for (std::size_t attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
    char family = rng_.coin() ? 'b' : 'a';
    NcPoly f1 = random_poly(rng_, alg_, cfg_.degree_bound);
    if (f1.is_zero()) continue;

    NcPoly f2;
    if (family == 'a') {
      // Rearranged copy: same commutative shadow up to sign.
      std::vector<NcPoly::Term> buf;
      for (const auto& [w, c] : f1.terms()) buf.emplace_back(shuffled(rng_, w), c);
      f2 = NcPoly::from_terms(alg_, std::move(buf));
      if (rng_.coin()) f2 = -f2;
    } else {
      // f1 plus word commutators: shadow unchanged.
      NcPoly bump;
      std::size_t ncom = 1 + rng_.below(2);
      for (std::size_t k = 0; k < ncom; ++k) {
        Word u = random_word(rng_, alg_, 1, cfg_.degree_bound - 1);
        Word v = random_word(rng_, alg_, 1, cfg_.degree_bound - u.size());
        NcPoly mu = NcPoly::monomial(alg_, u, 1);
        NcPoly mv = NcPoly::monomial(alg_, v, 1);
        bump += nonzero_small_coeff(rng_) * (mu * mv - mv * mu);
      }
      if (bump.is_zero()) continue;  // degenerate commutator draw
      f2 = f1 + bump;
    }
    if (f2.is_zero()) continue;

    NcPoly f3 = nonzero_small_coeff(rng_) * f1 + nonzero_small_coeff(rng_) * f2;
    std::vector<NcPoly> triple = {f1, f2, f3};

    // Verify, never trust: the triple must beat both easy certificates and
    // still be a legal instance.
    if (!meets_preconditions(triple)) continue;
    if (null_space_exact(coefficient_matrix(triple)).empty()) continue;
    if (!collides_commutatively(triple)) continue;

    out.instance = IndependenceInstance{cfg_.p, std::move(triple), cfg_.max_level};
    out.family = family;
    ++emitted_;
    return out;
  }
  out.diagnostic = "rejection sampling exhausted " +
                   std::to_string(cfg_.max_attempts) + " attempts";
  ++emitted_;
  return out;
}

}  // namespace witt
