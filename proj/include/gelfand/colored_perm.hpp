#pragma once

// Elements of G(r,n) in window notation [s_1^z_1, ..., s_n^z_n], with the
// subgroup G(r,p,n) and the scalar quotients G(r,p,q,n).
//
// Products compose as functions: (g*h)(i) = g(h(i)), and the color picked up
// at i is z_i(h) + z_{h(i)}(g). This is the matrix product of the monomial
// matrices M(g) e_j = zeta_r^{z_j} e_{s_j}.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gelfand/cyclotomic.hpp"
#include "gelfand/errors.hpp"

namespace gelfand {

class ColoredPermutation {
 public:
  ColoredPermutation() = default;

  /// `images` holds s_1..s_n (1-based values); colors are reduced mod r.
  ColoredPermutation(int r, std::vector<int> images, std::vector<int> colors)
      : r_(r), images_(std::move(images)), colors_(std::move(colors)) {
    if (r_ < 1) throw DomainError("root-of-unity order must be positive");
    if (images_.size() != colors_.size()) throw DimensionError("window and color lengths differ");
    const std::size_t n = images_.size();
    std::vector<bool> seen(n + 1, false);
    for (int s : images_) {
      if (s < 1 || static_cast<std::size_t>(s) > n || seen[static_cast<std::size_t>(s)]) {
        throw DomainError("window entries must form a bijection of [1,n]");
      }
      seen[static_cast<std::size_t>(s)] = true;
    }
    for (int& z : colors_) z = static_cast<int>(mod(z, r_));
  }

  static ColoredPermutation identity(int r, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return {r, std::move(images), std::vector<int>(static_cast<std::size_t>(n), 0)};
  }

  /// The scalar matrix zeta_r^k Id.
  static ColoredPermutation scalar(int r, int n, int k) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return {r, std::move(images), std::vector<int>(static_cast<std::size_t>(n), k)};
  }

  /// A plain permutation of S_n embedded with all colors 0.
  static ColoredPermutation plain(int r, std::vector<int> images) {
    std::vector<int> colors(images.size(), 0);
    return {r, std::move(images), std::move(colors)};
  }

  int r() const { return r_; }
  int n() const { return static_cast<int>(images_.size()); }

  /// s_j, 1-based.
  int image(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }
  /// z_j, 1-based.
  int color(int j) const { return colors_[static_cast<std::size_t>(j - 1)]; }

  const std::vector<int>& images() const { return images_; }
  const std::vector<int>& colors() const { return colors_; }

  /// z(g) reduced mod r.
  int total_color() const {
    long long s = 0;
    for (int z : colors_) s += z;
    return static_cast<int>(mod(s, r_));
  }

  bool is_plain() const {
    return std::all_of(colors_.begin(), colors_.end(), [](int z) { return z == 0; });
  }

  /// |g|, the underlying permutation.
  ColoredPermutation abs() const { return plain(r_, images_); }

  ColoredPermutation inverse() const {
    std::vector<int> images(images_.size());
    std::vector<int> colors(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j) {
      auto t = static_cast<std::size_t>(images_[j] - 1);
      images[t] = static_cast<int>(j + 1);
      colors[t] = -colors_[j];
    }
    return {r_, std::move(images), std::move(colors)};
  }

  /// Entrywise complex conjugate (colors negated).
  ColoredPermutation conj() const {
    std::vector<int> colors(colors_.size());
    for (std::size_t j = 0; j < colors_.size(); ++j) colors[j] = -colors_[j];
    return {r_, images_, std::move(colors)};
  }

  /// zeta_r^k * g.
  ColoredPermutation scaled(int k) const {
    std::vector<int> colors(colors_);
    for (int& z : colors) z += k;
    return {r_, images_, std::move(colors)};
  }

  friend ColoredPermutation operator*(const ColoredPermutation& g, const ColoredPermutation& h) {
    if (g.r_ != h.r_ || g.images_.size() != h.images_.size()) {
      throw DimensionError("cannot multiply elements of G(" + std::to_string(g.r_) + "," +
                           std::to_string(g.n()) + ") and G(" + std::to_string(h.r_) + "," +
                           std::to_string(h.n()) + ")");
    }
    const std::size_t n = g.images_.size();
    std::vector<int> images(n);
    std::vector<int> colors(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto hi = static_cast<std::size_t>(h.images_[i] - 1);
      images[i] = g.images_[hi];
      colors[i] = h.colors_[i] + g.colors_[hi];
    }
    return {g.r_, std::move(images), std::move(colors)};
  }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  /// Lexicographic on (window images, colors).
  friend auto operator<=>(const ColoredPermutation& a, const ColoredPermutation& b) {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    if (auto c = a.images_ <=> b.images_; c != 0) return c;
    return a.colors_ <=> b.colors_;
  }

 private:
  int r_ = 1;
  std::vector<int> images_;
  std::vector<int> colors_;
};

inline ColoredPermutation multiply(const ColoredPermutation& g, const ColoredPermutation& h) { return g * h; }

/// One cycle (a_1^z_1, ..., a_k^z_k) of a colored permutation.
struct Cycle {
  std::vector<std::pair<int, int>> entries;  // (element, its color)

  int length() const { return static_cast<int>(entries.size()); }
  int color(int r) const {
    long long s = 0;
    for (const auto& e : entries) s += e.second;
    return static_cast<int>(mod(s, r));
  }
  std::vector<int> support() const {
    std::vector<int> out;
    for (const auto& e : entries) out.push_back(e.first);
    return out;
  }
  int min_element() const { return entries.front().first; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Cycles start at their minimum and are sorted by it.
inline std::vector<Cycle> cycle_decomposition(const ColoredPermutation& g) {
  const int n = g.n();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<Cycle> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Cycle c;
    int a = start;
    while (!seen[static_cast<std::size_t>(a)]) {
      seen[static_cast<std::size_t>(a)] = true;
      c.entries.emplace_back(a, g.color(a));
      a = g.image(a);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

/// The element of G(r,n) whose cycles are exactly `cycles`; uncovered points are color-0 fixed points.
inline ColoredPermutation from_cycles(int r, int n, const std::vector<Cycle>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : cycles) {
    const std::size_t k = c.entries.size();
    for (std::size_t i = 0; i < k; ++i) {
      int a = c.entries[i].first;
      if (a < 1 || a > n || used[static_cast<std::size_t>(a)]) {
        throw DomainError("cycles must have disjoint supports inside [1,n]");
      }
      used[static_cast<std::size_t>(a)] = true;
      images[static_cast<std::size_t>(a - 1)] = c.entries[(i + 1) % k].first;
      colors[static_cast<std::size_t>(a - 1)] = c.entries[i].second;
    }
  }
  return {r, std::move(images), std::move(colors)};
}

/// An element of G(r,p,n)/C_q stored as the lexicographically least lift in its scalar coset.
class ProjectiveElement {
 public:
  ProjectiveElement(const ColoredPermutation& lift, int quotient_order) : q_(quotient_order) {
    const int r = lift.r();
    if (q_ < 1 || r % q_ != 0) throw DomainError("quotient order must divide r");
    rep_ = lift;
    const int step = r / q_;
    for (int k = 1; k < q_; ++k) {
      ColoredPermutation candidate = lift.scaled(k * step);
      if (candidate < rep_) rep_ = std::move(candidate);
    }
  }

  const ColoredPermutation& rep() const { return rep_; }
  int quotient_order() const { return q_; }

  /// All lifts, in scalar order.
  std::vector<ColoredPermutation> lifts() const {
    std::vector<ColoredPermutation> out;
    const int step = rep_.r() / q_;
    for (int k = 0; k < q_; ++k) out.push_back(rep_.scaled(k * step));
    return out;
  }

  friend ProjectiveElement operator*(const ProjectiveElement& a, const ProjectiveElement& b) {
    if (a.q_ != b.q_) throw DimensionError("projective elements of different quotients");
    return {a.rep_ * b.rep_, a.q_};
  }

  friend bool operator==(const ProjectiveElement&, const ProjectiveElement&) = default;
  friend auto operator<=>(const ProjectiveElement& a, const ProjectiveElement& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.rep_ <=> b.rep_;
  }

 private:
  ColoredPermutation rep_;
  int q_ = 1;
};

enum class Symmetry { symmetric, antisymmetric, neither };

inline std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric:
      return "symmetric";
    case Symmetry::antisymmetric:
      return "antisymmetric";
    case Symmetry::neither:
      return "neither";
  }
  return "neither";
}

/// g * conj(g) == 1.
inline bool is_absolute_involution(const ColoredPermutation& g) {
  return g * g.conj() == ColoredPermutation::identity(g.r(), g.n());
}

/// g * conj(g) lies in the scalar subgroup C_q.
inline bool is_absolute_involution(const ProjectiveElement& g) {
  const ColoredPermutation& x = g.rep();
  const ColoredPermutation prod = x * x.conj();
  for (const auto& s : ProjectiveElement(ColoredPermutation::identity(x.r(), x.n()), g.quotient_order()).lifts()) {
    if (prod == s) return true;
  }
  return false;
}

/// Compares the monomial matrix of g against its transpose.
inline Symmetry symmetry_kind(const ColoredPermutation& g) {
  const int n = g.n();
  const int r = g.r();
  // exponent matrix, -1 marks a zero entry; column j holds zeta^{z_j} in row s_j
  std::vector<int> m(static_cast<std::size_t>(n * n), -1);
  auto at = [&](int row, int col) -> int& { return m[static_cast<std::size_t>((row - 1) * n + (col - 1))]; };
  for (int j = 1; j <= n; ++j) at(g.image(j), j) = g.color(j);
  bool sym = true;
  bool anti = (r % 2 == 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      const int x = at(a, b);
      const int y = at(b, a);
      if ((x < 0) != (y < 0)) return Symmetry::neither;
      if (x < 0) continue;
      if (x != y) sym = false;
      if (anti && mod(x - y - r / 2, r) != 0) anti = false;
    }
  }
  if (sym) return Symmetry::symmetric;
  if (anti) return Symmetry::antisymmetric;
  return Symmetry::neither;
}

inline Symmetry symmetry_kind(const ProjectiveElement& g) { return symmetry_kind(g.rep()); }

/// Same classification read off the cycles: symmetric iff every cycle is a
/// fixed point or a 2-cycle with equal colors; antisymmetric iff every cycle
/// is a 2-cycle (z, z + r/2).
inline Symmetry symmetry_kind_by_cycles(const ColoredPermutation& g) {
  const int r = g.r();
  bool sym = true;
  bool anti = (r % 2 == 0);
  for (const auto& c : cycle_decomposition(g)) {
    if (c.length() > 2) return Symmetry::neither;
    if (c.length() == 1) {
      anti = false;
      continue;
    }
    const int z1 = c.entries[0].second;
    const int z2 = c.entries[1].second;
    if (z1 != z2) sym = false;
    if (mod(z2 - z1, r) != r / 2 || r % 2 != 0) anti = false;
  }
  if (sym) return Symmetry::symmetric;
  if (anti) return Symmetry::antisymmetric;
  return Symmetry::neither;
}

/// Sum over cycles (i_1,...,i_2d) of z_{i_1} + z_{i_3} + ... mod 2.
/// Requires r even and every cycle of even length and even color.
inline int signature(const ColoredPermutation& g) {
  if (g.r() % 2 != 0) throw DomainError("signature needs an even r");
  int s = 0;
  for (const auto& c : cycle_decomposition(g)) {
    if (c.length() % 2 != 0 || c.color(g.r()) % 2 != 0) {
      throw DomainError("signature is defined only for products of even-length, even-color cycles");
    }
    for (std::size_t i = 0; i < c.entries.size(); i += 2) s += c.entries[i].second;
  }
  return s % 2;
}

/// sigma * v * sigma^-1 for a plain permutation sigma.
inline ColoredPermutation absolute_conjugate(const ColoredPermutation& sigma, const ColoredPermutation& v) {
  if (!sigma.is_plain()) throw DomainError("absolute conjugation needs a plain permutation");
  return sigma * v * sigma.inverse();
}

inline ProjectiveElement absolute_conjugate(const ColoredPermutation& sigma, const ProjectiveElement& v) {
  return {absolute_conjugate(sigma, v.rep()), v.quotient_order()};
}

// ---- text formats --------------------------------------------------------

/// "[3^0,4^1,6^1,2^0,5^2,1^2]"
inline std::string to_window_string(const ColoredPermutation& g) {
  std::string out = "[";
  for (int j = 1; j <= g.n(); ++j) {
    if (j > 1) out += ",";
    out += std::to_string(g.image(j)) + "^" + std::to_string(g.color(j));
  }
  return out + "]";
}

/// "(1^0,3^1,6^2)(2^1,4^0)(5^2)"
inline std::string to_cycle_string(const ColoredPermutation& g) {
  std::string out;
  for (const auto& c : cycle_decomposition(g)) {
    out += "(";
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(c.entries[i].first) + "^" + std::to_string(c.entries[i].second);
    }
    out += ")";
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const ColoredPermutation& g) { return os << to_window_string(g); }

namespace detail {

inline void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

inline int parse_int(std::string_view s, std::size_t& pos) {
  skip_spaces(s, pos);
  bool neg = false;
  if (pos < s.size() && s[pos] == '-') {
    neg = true;
    ++pos;
  }
  if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') {
    throw ParseError("expected an integer at offset " + std::to_string(pos) + " in '" + std::string(s) + "'");
  }
  long long v = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    v = v * 10 + (s[pos] - '0');
    if (v > 1'000'000'000) throw ParseError("integer too large in '" + std::string(s) + "'");
    ++pos;
  }
  skip_spaces(s, pos);
  return static_cast<int>(neg ? -v : v);
}

inline void expect(std::string_view s, std::size_t& pos, char c) {
  skip_spaces(s, pos);
  if (pos >= s.size() || s[pos] != c) {
    throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos) + " in '" +
                     std::string(s) + "'");
  }
  ++pos;
  skip_spaces(s, pos);
}

inline std::pair<int, int> parse_colored_letter(std::string_view s, std::size_t& pos) {
  int a = parse_int(s, pos);
  expect(s, pos, '^');
  int z = parse_int(s, pos);
  return {a, z};
}

}  // namespace detail

/// Parses "[3^0,4^1,...]"; every exponent must be written explicitly.
inline ColoredPermutation parse_window(std::string_view text, int r) {
  std::size_t pos = 0;
  detail::expect(text, pos, '[');
  std::vector<int> images;
  std::vector<int> colors;
  if (pos < text.size() && text[pos] != ']') {
    while (true) {
      auto [a, z] = detail::parse_colored_letter(text, pos);
      images.push_back(a);
      colors.push_back(z);
      detail::skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  detail::expect(text, pos, ']');
  if (pos != text.size()) throw ParseError("trailing characters after window '" + std::string(text) + "'");
  try {
    return {r, std::move(images), std::move(colors)};
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid window '") + std::string(text) + "': " + e.what());
  }
}

/// Parses "(1^0,3^1,6^2)(2^1,4^0)(5^2)" into an element of G(r,n).
inline ColoredPermutation parse_cycles(std::string_view text, int r, int n) {
  std::size_t pos = 0;
  std::vector<Cycle> cycles;
  detail::skip_spaces(text, pos);
  while (pos < text.size()) {
    detail::expect(text, pos, '(');
    Cycle c;
    while (true) {
      c.entries.push_back(detail::parse_colored_letter(text, pos));
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    detail::expect(text, pos, ')');
    cycles.push_back(std::move(c));
  }
  try {
    return from_cycles(r, n, cycles);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid cycles '") + std::string(text) + "': " + e.what());
  }
}

}  // namespace gelfand
