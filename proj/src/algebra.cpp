#include "witt/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace witt {

int word_cmp_deglex(const Word& a, const Word& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

Word word_concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

static bool valid_var_name(const std::string& s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

AlgebraPtr Algebra::make(std::vector<std::string> names) {
  if (names.empty()) throw usage_error("Algebra: empty variable list");
  if (names.size() > 256) throw usage_error("Algebra: more than 256 variables");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_var_name(n))
      throw usage_error("Algebra: invalid variable name '" + n +
                        "' (want an identifier starting with an uppercase letter)");
    if (!seen.insert(n).second)
      throw usage_error("Algebra: duplicate variable name '" + n + "'");
  }
  return AlgebraPtr(new Algebra(std::move(names)));
}

const std::string& Algebra::name(VarId v) const {
  if (v.index >= names_.size()) throw usage_error("Algebra: variable index out of range");
  return names_[v.index];
}

VarId Algebra::var(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw usage_error("Algebra: unknown variable '" + std::string(name) + "'");
}

std::optional<VarId> Algebra::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return VarId{static_cast<std::uint8_t>(i)};
  return std::nullopt;
}

bool Algebra::same(const Algebra& other) const noexcept {
  return this == &other || names_ == other.names_;
}

AlgebraPtr require_same_context(const AlgebraPtr& a, const AlgebraPtr& b,
                                const char* op) {
  if (!a) return b;
  if (!b) return a;
  if (a->same(*b)) return a;
  throw usage_error(std::string(op) + ": mismatched algebra contexts");
}

}  // namespace witt
