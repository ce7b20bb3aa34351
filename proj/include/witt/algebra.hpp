#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "witt/errors.hpp"

namespace witt {

struct VarId {
  std::uint8_t index = 0;
  friend constexpr bool operator==(VarId, VarId) = default;
  friend constexpr auto operator<=>(VarId, VarId) = default;
};

// A word in the free monoid on the context's variables. Letters are variable
// indices; the empty word is the multiplicative identity. The inline capacity
// covers every word the built-in workflows produce (p = 3, two levels, inputs
// of degree <= 3 cube to length 27).
using Word = boost::container::small_vector<std::uint8_t, 28>;

// Graded order: shorter words first, ties broken left-to-right by letter index.
int word_cmp_deglex(const Word& a, const Word& b) noexcept;

struct WordDegLexLess {
  bool operator()(const Word& a, const Word& b) const noexcept {
    return word_cmp_deglex(a, b) < 0;
  }
};

Word word_concat(const Word& a, const Word& b);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite ordered alphabet shared by every value of a free algebra, its
// commutative shadow and its cyclic-word quotient. Immutable; values carry a
// shared handle and interoperate whenever the name lists agree.
class Algebra {
 public:
  // Names must be distinct identifiers starting with an uppercase letter.
  static AlgebraPtr make(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(VarId v) const;
  VarId var(std::string_view name) const;  // usage_error when unknown
  std::optional<VarId> find(std::string_view name) const noexcept;
  bool same(const Algebra& other) const noexcept;

 private:
  explicit Algebra(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

// Resolves the shared context of a binary operation. A null handle is the
// context of a detached zero and adopts the other side; two distinct non-null
// contexts must have equal name lists.
AlgebraPtr require_same_context(const AlgebraPtr& a, const AlgebraPtr& b,
                                const char* op);

}  // namespace witt
