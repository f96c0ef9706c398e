#include "nsg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace nsg {

namespace {

Permutation from_map(std::size_t degree, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(f(i));
  return Permutation(std::move(im));
}

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t last) {
  // (first ... last), 0-based inclusive
  return from_map(degree, [&](std::size_t i) {
    if (i < first || i > last) return i;
    return i == last ? first : i + 1;
  });
}

GroupSpec symmetric(std::size_t n) {
  GroupSpec s{"S" + std::to_string(n), n, {}};
  if (n <= 1) {
    s.degree = 1;
    s.generators.push_back(Permutation::identity(1));
    return s;
  }
  s.generators.push_back(cycle_on(n, 0, 1));
  if (n > 2) s.generators.push_back(cycle_on(n, 0, n - 1));
  return s;
}

GroupSpec alternating(std::size_t n) {
  GroupSpec s{"A" + std::to_string(n), std::max<std::size_t>(n, 1), {}};
  if (n <= 2) {
    s.generators.push_back(Permutation::identity(s.degree));
    return s;
  }
  if (n == 3) {
    s.generators.push_back(cycle_on(3, 0, 2));
    return s;
  }
  if (n == 5) {
    // (1,2,3,4,5), (3,4,5)
    s.generators.push_back(cycle_on(5, 0, 4));
    s.generators.push_back(cycle_on(5, 2, 4));
    return s;
  }
  s.generators.push_back(cycle_on(n, 0, 2));
  if (n % 2 == 1)
    s.generators.push_back(cycle_on(n, 0, n - 1));
  else
    s.generators.push_back(cycle_on(n, 1, n - 1));
  return s;
}

GroupSpec cyclic(std::size_t n) {
  if (n == 0) throw UnknownGroup("Z0 is not a group");
  GroupSpec s{"Z" + std::to_string(n), n, {}};
  s.generators.push_back(n == 1 ? Permutation::identity(1) : cycle_on(n, 0, n - 1));
  return s;
}

GroupSpec dihedral(std::size_t n) {
  if (n < 3) throw UnknownGroup("D" + std::to_string(n) + ": dihedral groups need n >= 3");
  GroupSpec s{"D" + std::to_string(n), n, {}};
  s.generators.push_back(cycle_on(n, 0, n - 1));
  s.generators.push_back(from_map(n, [&](std::size_t i) { return (n - i) % n; }));
  return s;
}

// SL(2,5) acting on column vectors (a, b) != 0 of F_5^2; point index 5a + b - 1.
GroupSpec sl25() {
  constexpr std::size_t p = 5;
  auto act = [](int m00, int m01, int m10, int m11) {
    return from_map(24, [=](std::size_t i) {
      const int a = static_cast<int>((i + 1) / p), b = static_cast<int>((i + 1) % p);
      const int na = ((m00 * a + m01 * b) % 5 + 5) % 5;
      const int nb = ((m10 * a + m11 * b) % 5 + 5) % 5;
      return static_cast<std::size_t>(na * 5 + nb - 1);
    });
  };
  return GroupSpec{"SL25", 24, {act(1, 1, 0, 1), act(0, 4, 1, 0)}};
}

// Projective line over F_7: points 0..6 are field elements, 7 is infinity.
GroupSpec projective_7(bool pgl) {
  constexpr std::size_t q = 7, inf = 7;
  auto inv = [](std::size_t a) {
    for (std::size_t b = 1; b < q; ++b)
      if (a * b % q == 1) return b;
    return std::size_t{0};
  };
  auto translate = from_map(8, [&](std::size_t z) { return z == inf ? inf : (z + 1) % q; });
  auto negrecip = from_map(8, [&](std::size_t z) {
    if (z == inf) return std::size_t{0};
    if (z == 0) return inf;
    return (q - inv(z)) % q;
  });
  GroupSpec s{pgl ? "PGL27" : "PSL27", 8, {translate, negrecip}};
  if (pgl) // z -> 3z, 3 is a non-square mod 7
    s.generators.push_back(from_map(8, [&](std::size_t z) { return z == inf ? inf : 3 * z % q; }));
  return s;
}

// F_8 = F_2[t]/(t^3 + t + 1), elements as 3-bit polynomials.
std::size_t gf8_mul(std::size_t a, std::size_t b) {
  std::size_t r = 0;
  for (int i = 0; i < 3; ++i)
    if (b >> i & 1U) r ^= a << i;
  for (int i = 4; i >= 3; --i)
    if (r >> i & 1U) r ^= 0b1011U << (i - 3);
  return r;
}

// Projective line over F_8: points 0..7 are field elements, 8 is infinity.
GroupSpec psl28() {
  constexpr std::size_t inf = 8;
  auto inv = [](std::size_t a) {
    for (std::size_t b = 1; b < 8; ++b)
      if (gf8_mul(a, b) == 1) return b;
    return std::size_t{0};
  };
  auto translate = from_map(9, [&](std::size_t z) { return z == inf ? inf : z ^ 1U; });
  auto scale = from_map(9, [&](std::size_t z) { return z == inf ? inf : gf8_mul(z, 2); });
  auto recip = from_map(9, [&](std::size_t z) {
    if (z == inf) return std::size_t{0};
    if (z == 0) return inf;
    return inv(z);
  });
  return GroupSpec{"PSL28", 9, {translate, scale, recip}};
}

std::optional<std::size_t> parse_count(std::string_view s) {
  if (!s.empty() && s.front() == '_') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

GroupSpec builtin_factor(std::string_view name) {
  if (name == "SL25") return sl25();
  if (name == "PSL27") return projective_7(false);
  if (name == "PGL27") return projective_7(true);
  if (name == "PSL28") return psl28();
  if (!name.empty()) {
    if (auto n = parse_count(name.substr(1))) {
      switch (name.front()) {
      case 'A': return alternating(*n);
      case 'S': return symmetric(*n);
      case 'Z': return cyclic(*n);
      case 'D': return dihedral(*n);
      default: break;
      }
    }
  }
  throw UnknownGroup("unknown group '" + std::string(name) + "'");
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

} // namespace

GroupSpec builtin(std::string_view name) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  GroupSpec spec = builtin_factor(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) spec = direct_product(spec, builtin_factor(parts[i]));
  spec.name = std::string(name);
  return spec;
}

const std::vector<std::string>& builtin_catalog() {
  static const std::vector<std::string> names{"A5",    "S5",    "SL25", "Z2xA5", "A5xZ2",
                                              "A5xZ3", "PSL27", "PGL27", "A6",   "PSL28"};
  return names;
}

GroupSpec resolve_group(std::string_view name_or_path) {
  try {
    return builtin(name_or_path);
  } catch (const UnknownGroup&) {
    std::filesystem::path p{std::string(name_or_path)};
    if (std::filesystem::is_regular_file(p)) return load_group_file(p);
    throw;
  }
}

GroupSpec parse_group_file(std::string_view text, const std::string& origin) {
  GroupSpec spec;
  std::vector<std::pair<std::size_t, std::string>> gens;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto fail = [&](std::size_t line, const std::string& what) -> void {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
  };
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line = trim(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "name") {
      if (value.empty()) fail(line_no, "empty name");
      spec.name = value;
    } else if (key == "degree") {
      auto d = parse_count(value);
      if (!d || *d == 0) fail(line_no, "degree must be a positive integer");
      if (have_degree) fail(line_no, "duplicate degree");
      spec.degree = *d;
      have_degree = true;
    } else if (key == "gen") {
      gens.emplace_back(line_no, value);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  if (spec.name.empty()) fail(line_no, "missing name");
  if (!have_degree) fail(line_no, "missing degree");
  if (gens.empty()) fail(line_no, "no gen lines");
  for (const auto& [ln, text_gen] : gens) {
    try {
      spec.generators.push_back(parse_cycles(text_gen, spec.degree));
    } catch (const ParseError& e) {
      fail(ln, e.what());
    }
  }
  return spec;
}

GroupSpec load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str(), path.string());
}

std::string format_group_file(const GroupSpec& spec) {
  std::string out = "name=" + spec.name + "\ndegree=" + std::to_string(spec.degree) + "\n";
  for (const auto& g : spec.generators) out += "gen=" + g.to_cycles() + "\n";
  return out;
}

void write_group_file(const GroupSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << format_group_file(spec);
}

} // namespace nsg
