#pragma once

// Conjugacy classes of G(r,n) and G(r,p,n), normal elements, and the
// S_n-conjugacy classes of absolute involutions with their type vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gelfand/colored_perm.hpp"
#include "gelfand/group.hpp"
#include "gelfand/shapes_tableaux.hpp"

namespace gelfand {

/// alpha^(i) lists the lengths of the cycles of color i.
struct ConjClassLabel {
  Multipartition alpha;
  std::optional<int> split_bit;

  friend bool operator==(const ConjClassLabel&, const ConjClassLabel&) = default;
  friend std::strong_ordering operator<=>(const ConjClassLabel& a, const ConjClassLabel& b) {
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.split_bit.value_or(-1) <=> b.split_bit.value_or(-1);
  }
};

/// "((2),(),(4))" or "((2),(),(4))^1" for a split half.
inline std::string to_string(const ConjClassLabel& c) {
  std::string out = to_string(c.alpha);
  if (c.split_bit) out += "^" + std::to_string(*c.split_bit);
  return out;
}

/// All cycles of even length and even color (the shape that splits when GCD(p,n) = 2).
inline bool has_split_shape(const Multipartition& alpha) {
  if (alpha.r() % 2 != 0) return false;
  for (int i = 0; i < alpha.r(); ++i) {
    for (int part : alpha[i]) {
      if (i % 2 != 0 || part % 2 != 0) return false;
    }
  }
  return true;
}

inline bool label_in_subgroup(const Multipartition& alpha, int p) {
  long long s = 0;
  for (int i = 0; i < alpha.r(); ++i) s += static_cast<long long>(i) * static_cast<long long>(alpha[i].size());
  return s % p == 0;
}

inline bool class_splits(const Multipartition& alpha, int p) {
  return std::gcd(p, alpha.n()) == 2 && has_split_shape(alpha) && label_in_subgroup(alpha, p);
}

inline Multipartition cycle_type(const ColoredPermutation& g) {
  std::vector<Partition> comps(static_cast<std::size_t>(g.r()));
  for (const auto& c : cycle_decomposition(g)) comps[static_cast<std::size_t>(c.color(g.r()))].push_back(c.length());
  for (auto& p : comps) std::sort(p.rbegin(), p.rend());
  return Multipartition(std::move(comps));
}

/// The G(r,p,n)-class of g.
inline ConjClassLabel class_of(const ColoredPermutation& g, int p) {
  if (p < 1 || g.r() % p != 0) throw DomainError("p must divide r");
  if (g.total_color() % p != 0) throw DomainError("element is not in G(r,p,n): color not divisible by p");
  ConjClassLabel out{cycle_type(g), std::nullopt};
  if (class_splits(out.alpha, p)) out.split_bit = signature(g);
  return out;
}

/// prod_{i,j} m_{i,j}! j^{m_{i,j}} r^{m_{i,j}}, the centralizer order in G(r,n).
inline BigInt wreath_centralizer_order(const Multipartition& alpha) {
  BigInt out = 1;
  const auto r = static_cast<unsigned long>(alpha.r());
  for (const auto& comp : alpha.components()) {
    std::map<int, unsigned long> mult;
    for (int part : comp) ++mult[part];
    for (auto [len, m] : mult) {
      for (unsigned long k = 1; k <= m; ++k) out *= k * static_cast<unsigned long>(len) * r;
    }
  }
  return out;
}

inline BigInt class_size(const ConjClassLabel& label, const GroupParams& g) {
  BigInt size = g.wreath_order() / wreath_centralizer_order(label.alpha);
  if (label.split_bit) size /= 2;
  return size;
}

/// Classes of G(r,p,n); split classes appear twice (bit 0, then 1).
inline std::vector<ConjClassLabel> enumerate_classes(int r, int p, int n) {
  if (p < 1 || r % p != 0) throw DomainError("p must divide r");
  const int g = std::gcd(p, n);
  if (g != 1 && g != 2) throw UnsupportedError("conjugacy classes are only provided when GCD(p,n) is 1 or 2");
  std::vector<ConjClassLabel> out;
  for (const auto& alpha : enumerate_shapes(r, n, 1)) {
    if (!label_in_subgroup(alpha, p)) continue;
    if (class_splits(alpha, p)) {
      out.push_back({alpha, 0});
      out.push_back({alpha, 1});
    } else {
      out.push_back({alpha, std::nullopt});
    }
  }
  return out;
}

/// The normal representative: cycles filled with consecutive integers, by
/// increasing color and within a color by decreasing length; each cycle's
/// color sits on its largest element. For a split class with bit 1 the
/// largest element n takes color 2j-1 and n-1 takes color 1.
inline ColoredPermutation normal_element(const ConjClassLabel& label) {
  const Multipartition& alpha = label.alpha;
  const int r = alpha.r();
  const int n = alpha.n();
  std::vector<Cycle> cycles;
  int next = 1;
  for (int color = 0; color < r; ++color) {
    for (int len : alpha[color]) {
      Cycle c;
      for (int k = 0; k < len; ++k) c.entries.emplace_back(next++, 0);
      c.entries.back().second = color;
      cycles.push_back(std::move(c));
    }
  }
  if (label.split_bit && *label.split_bit == 1) {
    if (cycles.empty() || cycles.back().length() < 2) throw DomainError("split bit on a label without even cycles");
    auto& last = cycles.back();
    last.entries.back().second = last.entries.back().second - 1;
    last.entries[last.entries.size() - 2].second = 1;
  }
  return from_cycles(r, n, cycles);
}

// ---- S_n-conjugacy classes of absolute involutions ------------------------

/// Type of an S_n-class of absolute involutions in a dual group, stored as
/// the lexicographically least member of its shift orbit.
class InvolutionClassType {
 public:
  /// Symmetric type (f; q) of G(r,n), orbit under shifts by `step`.
  static InvolutionClassType symmetric(std::vector<int> f, std::vector<int> q, int step) {
    if (f.size() != q.size() || f.empty()) throw DomainError("symmetric type needs f and q of equal length r");
    InvolutionClassType t;
    t.kind_ = Symmetry::symmetric;
    t.r_ = static_cast<int>(f.size());
    t.step_ = static_cast<int>(mod(step, t.r_));
    std::vector<int> data = f;
    data.insert(data.end(), q.begin(), q.end());
    t.data_ = canonical_shift(data, t.r_, 2, t.step_);
    return t;
  }

  /// Antisymmetric type t of length r' = r/2, orbit under shifts by `step` mod r'.
  static InvolutionClassType antisymmetric(std::vector<int> t_vec, int step) {
    if (t_vec.empty()) throw DomainError("antisymmetric type needs a nonempty t vector");
    InvolutionClassType t;
    t.kind_ = Symmetry::antisymmetric;
    t.r_ = 2 * static_cast<int>(t_vec.size());
    const int rp = static_cast<int>(t_vec.size());
    t.step_ = static_cast<int>(mod(step, rp));
    t.data_ = canonical_shift(t_vec, rp, 1, t.step_);
    return t;
  }

  Symmetry kind() const { return kind_; }
  int r() const { return r_; }
  int step() const { return step_; }

  std::vector<int> f() const { return slice(0); }
  std::vector<int> q() const { return slice(1); }
  const std::vector<int>& t() const { return data_; }

  /// sum f_i + 2 sum q_i, or 2 sum t_i.
  int n() const {
    int s = 0;
    if (kind_ == Symmetry::symmetric) {
      for (int i = 0; i < r_; ++i) s += data_[static_cast<std::size_t>(i)] + 2 * data_[static_cast<std::size_t>(r_ + i)];
    } else {
      for (int x : data_) s += 2 * x;
    }
    return s;
  }

  /// Every member of the shift orbit (the stored one first).
  std::vector<std::vector<int>> orbit() const {
    const int len = kind_ == Symmetry::symmetric ? r_ : r_ / 2;
    const int blocks = kind_ == Symmetry::symmetric ? 2 : 1;
    std::vector<std::vector<int>> out;
    for (int k = 0; k < len; ++k) {
      std::vector<int> s = shift(data_, len, blocks, k * step_);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
    return out;
  }

  friend bool operator==(const InvolutionClassType&, const InvolutionClassType&) = default;
  friend auto operator<=>(const InvolutionClassType& a, const InvolutionClassType& b) {
    if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    if (auto c = a.step_ <=> b.step_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  /// new[i] = old[i + s] within each block of length `len` (indices mod len).
  static std::vector<int> shift(const std::vector<int>& data, int len, int blocks, int s) {
    std::vector<int> out(data.size());
    for (int b = 0; b < blocks; ++b) {
      for (int i = 0; i < len; ++i) {
        out[static_cast<std::size_t>(b * len + i)] = data[static_cast<std::size_t>(b * len + mod(i + s, len))];
      }
    }
    return out;
  }

 private:
  static std::vector<int> canonical_shift(const std::vector<int>& data, int len, int blocks, int step) {
    std::vector<int> best = data;
    for (int k = 1; k < len; ++k) best = std::min(best, shift(data, len, blocks, k * step));
    return best;
  }

  std::vector<int> slice(int block) const {
    if (kind_ != Symmetry::symmetric) throw DomainError("f and q exist only for symmetric types");
    return {data_.begin() + block * r_, data_.begin() + (block + 1) * r_};
  }

  Symmetry kind_ = Symmetry::symmetric;
  int r_ = 1;
  int step_ = 0;
  std::vector<int> data_;
};

/// "sym[f0,...;q0,...]" or "asym[t0,...]".
inline std::string to_string(const InvolutionClassType& t) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  if (t.kind() == Symmetry::symmetric) return "sym[" + join(t.f()) + ";" + join(t.q()) + "]";
  return "asym[" + join(t.t()) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const InvolutionClassType& t) { return os << to_string(t); }

/// Parses the text format; `step` is r/p for the group whose involutions are typed.
inline InvolutionClassType parse_involution_type(std::string_view text, int step) {
  auto read_list = [&](std::string_view body) {
    std::vector<int> v;
    std::size_t pos = 0;
    while (pos < body.size()) {
      v.push_back(detail::parse_int(body, pos));
      if (pos < body.size()) {
        if (body[pos] != ',') throw ParseError("expected ',' in type '" + std::string(text) + "'");
        ++pos;
      }
    }
    for (int x : v) {
      if (x < 0) throw ParseError("type entries must be nonnegative in '" + std::string(text) + "'");
    }
    return v;
  };
  auto body_of = [&](std::string_view prefix) -> std::string_view {
    if (text.size() < prefix.size() + 2 || text.substr(0, prefix.size()) != prefix || text.back() != ']') {
      throw ParseError("invalid involution type '" + std::string(text) + "'");
    }
    return text.substr(prefix.size(), text.size() - prefix.size() - 1);
  };
  if (text.substr(0, 4) == "sym[") {
    std::string_view body = body_of("sym[");
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("symmetric type needs ';' in '" + std::string(text) + "'");
    auto f = read_list(body.substr(0, semi));
    auto q = read_list(body.substr(semi + 1));
    if (f.size() != q.size() || f.empty()) throw ParseError("f and q must have equal nonzero length in '" + std::string(text) + "'");
    return InvolutionClassType::symmetric(std::move(f), std::move(q), step);
  }
  if (text.substr(0, 5) == "asym[") {
    auto t = read_list(body_of("asym["));
    if (t.empty()) throw ParseError("empty antisymmetric type '" + std::string(text) + "'");
    return InvolutionClassType::antisymmetric(std::move(t), step);
  }
  throw ParseError("involution type must start with 'sym[' or 'asym[': '" + std::string(text) + "'");
}

/// Type of an absolute involution v in G(r,n), orbit under shifts by r/p.
inline InvolutionClassType involution_type(const ColoredPermutation& v, int p) {
  const int r = v.r();
  if (p < 1 || r % p != 0) throw DomainError("p must divide r");
  switch (symmetry_kind_by_cycles(v)) {
    case Symmetry::symmetric: {
      std::vector<int> f(static_cast<std::size_t>(r), 0);
      std::vector<int> q(static_cast<std::size_t>(r), 0);
      for (const auto& c : cycle_decomposition(v)) {
        const auto z = static_cast<std::size_t>(c.entries.front().second);
        if (c.length() == 1) ++f[z];
        else ++q[z];
      }
      return InvolutionClassType::symmetric(std::move(f), std::move(q), r / p);
    }
    case Symmetry::antisymmetric: {
      const int rp = r / 2;
      std::vector<int> t(static_cast<std::size_t>(rp), 0);
      for (const auto& c : cycle_decomposition(v)) ++t[static_cast<std::size_t>(c.entries.front().second % rp)];
      return InvolutionClassType::antisymmetric(std::move(t), r / p);
    }
    case Symmetry::neither:
      break;
  }
  throw DomainError("involution_type needs a symmetric or antisymmetric absolute involution");
}

/// Type of an absolute involution of a quotient G(r,q,n)/C_p.
inline InvolutionClassType involution_type(const ProjectiveElement& v) {
  return involution_type(v.rep(), v.quotient_order());
}

/// Sh(c) for a class of absolute involutions in the dual of G(r,p,q,n):
/// orbits under shifts by r/p of the shapes allowed by the type.
inline std::vector<ShapeOrbit> predicted_shapes(const InvolutionClassType& type, const GroupParams& g) {
  const int r = g.r;
  if (type.r() != r) throw DimensionError("type and group have different r");
  std::vector<std::vector<Partition>> choices;
  if (type.kind() == Symmetry::symmetric) {
    const auto f = type.f();
    const auto q = type.q();
    for (int i = 0; i < r; ++i) {
      std::vector<Partition> ok;
      const int size = f[static_cast<std::size_t>(i)] + 2 * q[static_cast<std::size_t>(i)];
      for (auto& part : partitions_of(size)) {
        if (odd_columns(part) == f[static_cast<std::size_t>(i)]) ok.push_back(std::move(part));
      }
      choices.push_back(std::move(ok));
    }
  } else {
    for (int t : type.t()) choices.push_back(partitions_of(t));
  }
  std::set<ShapeOrbit> found;
  std::vector<Partition> cur(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      std::vector<Partition> comps = cur;
      if (type.kind() == Symmetry::antisymmetric) comps.insert(comps.end(), cur.begin(), cur.end());
      found.insert(orbit_of(Multipartition(std::move(comps)), g.p));
      return;
    }
    for (const auto& part : choices[i]) {
      cur[i] = part;
      rec(i + 1);
    }
  };
  rec(0);
  return {found.begin(), found.end()};
}

/// The label index iota(c): 0 for symmetric classes, 1 for antisymmetric ones.
inline int iota(const InvolutionClassType& t) { return t.kind() == Symmetry::symmetric ? 0 : 1; }

/// All absolute involutions of G(r,q,p,n), the dual of `g`: lifts in G(r,q,n)
/// up to the scalars of C_p, sorted by canonical representative.
inline std::vector<ProjectiveElement> dual_absolute_involutions(const GroupParams& g,
                                                                std::uint64_t limit = default_max_group_order) {
  require_enumerable(g.r, g.n, limit);
  const int r = g.r;
  const int n = g.n;
  std::set<ProjectiveElement> found;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<int> colors(static_cast<std::size_t>(n));
  // walk involutions of S_n, then colorings of each
  std::function<void(int)> perm_rec;
  auto color_pass = [&]() {
    std::vector<int> fixed;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i) {
      const int j = images[static_cast<std::size_t>(i - 1)];
      if (j == i) fixed.push_back(i);
      else if (i < j) pairs.emplace_back(i, j);
    }
    // symmetric lifts: fixed points any color, pairs equal colors
    const std::size_t slots = fixed.size() + pairs.size();
    std::vector<int> choice(slots, 0);
    while (true) {
      for (std::size_t k = 0; k < fixed.size(); ++k) colors[static_cast<std::size_t>(fixed[k] - 1)] = choice[k];
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const int z = choice[fixed.size() + k];
        colors[static_cast<std::size_t>(pairs[k].first - 1)] = z;
        colors[static_cast<std::size_t>(pairs[k].second - 1)] = z;
      }
      ColoredPermutation v(r, images, colors);
      if (v.total_color() % g.q == 0) found.insert(ProjectiveElement(v, g.p));
      std::size_t k = slots;
      while (k > 0 && choice[k - 1] == r - 1) choice[--k] = 0;
      if (k == 0) break;
      ++choice[k - 1];
    }
    // antisymmetric lifts exist only when C_p contains -1
    if (!fixed.empty() || r % 2 != 0 || g.p % 2 != 0) return;
    std::vector<int> pc(pairs.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        colors[static_cast<std::size_t>(pairs[k].first - 1)] = pc[k];
        colors[static_cast<std::size_t>(pairs[k].second - 1)] = pc[k] + r / 2;
      }
      ColoredPermutation v(r, images, colors);
      if (v.total_color() % g.q == 0) found.insert(ProjectiveElement(v, g.p));
      std::size_t k = pairs.size();
      while (k > 0 && pc[k - 1] == r - 1) pc[--k] = 0;
      if (k == 0) break;
      ++pc[k - 1];
    }
  };
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  perm_rec = [&](int i) {
    if (i > n) {
      color_pass();
      return;
    }
    if (used[static_cast<std::size_t>(i)]) {
      perm_rec(i + 1);
      return;
    }
    used[static_cast<std::size_t>(i)] = true;
    images[static_cast<std::size_t>(i - 1)] = i;
    perm_rec(i + 1);
    for (int j = i + 1; j <= n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      images[static_cast<std::size_t>(i - 1)] = j;
      images[static_cast<std::size_t>(j - 1)] = i;
      perm_rec(i + 1);
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(i)] = false;
  };
  perm_rec(1);
  return {found.begin(), found.end()};
}

struct InvolutionClass {
  InvolutionClassType type;
  std::vector<ProjectiveElement> members;
};

/// The S_n-classes of absolute involutions in the dual of `g`, sorted by type.
inline std::vector<InvolutionClass> enumerate_involution_classes(const GroupParams& g,
                                                                 std::uint64_t limit = default_max_group_order) {
  std::map<InvolutionClassType, std::vector<ProjectiveElement>> by_type;
  for (auto& v : dual_absolute_involutions(g, limit)) {
    auto t = involution_type(v);
    by_type[t].push_back(std::move(v));
  }
  std::vector<InvolutionClass> out;
  for (auto& [t, members] : by_type) out.push_back({t, std::move(members)});
  return out;
}

/// Number of G(r,p,q,n)-classes: C_q orbits on the G(r,p,n)-classes.
inline std::size_t quotient_class_count(const GroupParams& g) {
  const auto classes = enumerate_classes(g.r, g.p, g.n);
  if (g.q == 1) return classes.size();
  std::set<ConjClassLabel> seen;
  std::size_t orbits = 0;
  const int step = g.r / g.q;
  for (const auto& c : classes) {
    if (seen.count(c)) continue;
    ++orbits;
    const ColoredPermutation x = normal_element(c);
    for (int k = 0; k < g.q; ++k) seen.insert(class_of(x.scaled(k * step), g.p));
  }
  return orbits;
}

}  // namespace gelfand
