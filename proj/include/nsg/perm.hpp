#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nsg {

using Point = std::uint32_t;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A bijection on {0, ..., n-1}, stored as its image array.
//
// Composition convention used throughout the library: compose(p, q) applies
// p first and then q, i.e. compose(p, q)(i) == q(p(i)). Cycle notation is
// 1-based on input and output.
class Permutation {
public:
  Permutation() = default;
  // Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }
  bool is_identity() const;

  // Disjoint cycle notation, 1-based, fixed points omitted; "()" for identity.
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
std::uint64_t order_of(const Permutation& p);

// Parses disjoint-cycle notation such as "(1,2)(3,4,5)" with 1-based points.
// Whitespace is ignored. Throws ParseError on malformed text, repeated points
// or points outside [1, degree].
Permutation parse_cycles(std::string_view text, std::size_t degree);

} // namespace nsg
