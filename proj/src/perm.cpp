#include "nsg/perm.hpp"

#include <cctype>
#include <numeric>

namespace nsg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = q(p(static_cast<Point>(i)));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[p(static_cast<Point>(i))] = static_cast<Point>(i);
  return Permutation(std::move(im));
}

std::uint64_t order_of(const Permutation& p) {
  // lcm of cycle lengths
  std::uint64_t order = 1;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p(static_cast<Point>(j))) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("cycle notation: " + what + " at offset " + std::to_string(pos) + " in \"" +
                     std::string(text) + "\"");
  };

  skip_ws();
  if (pos == text.size()) fail("empty text");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected point");
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree + 1) value = degree + 1; // saturate, only the range check cares
        ++pos;
      }
      if (value < 1 || value > degree)
        fail("point " + std::string(text.substr(start, pos - start)) + " out of range 1.." +
             std::to_string(degree));
      Point pt = static_cast<Point>(value - 1);
      if (used[pt]) fail("repeated point " + std::to_string(value));
      used[pt] = true;
      cycle.push_back(pt);
      skip_ws();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) im[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

} // namespace nsg
