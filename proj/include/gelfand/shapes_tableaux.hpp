#pragma once

// Partitions, multipartitions Fer(r,n), their shift orbits [lambda] and
// standard multitableaux.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gelfand/colored_perm.hpp"
#include "gelfand/cyclotomic.hpp"
#include "gelfand/errors.hpp"

namespace gelfand {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

/// All partitions of m, in decreasing lexicographic order ((m) first).
inline std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  if (m >= 0) rec(m, m);
  return out;
}

inline Partition conjugate_partition(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int c = 1; c <= p.front(); ++c) {
    int len = 0;
    for (int part : p) len += (part >= c) ? 1 : 0;
    out.push_back(len);
  }
  return out;
}

/// Number of columns of odd length.
inline int odd_columns(const Partition& p) {
  int k = 0;
  for (int c : conjugate_partition(p)) k += c % 2;
  return k;
}

/// Standard Young tableaux of shape p, by the hook length formula.
inline BigInt count_syt(const Partition& p) {
  const int m = partition_size(p);
  BigInt num = 1;
  for (int i = 2; i <= m; ++i) num *= static_cast<unsigned long>(i);
  const Partition conj = conjugate_partition(p);
  BigInt den = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      const int arm = p[i] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      den *= static_cast<unsigned long>(arm + leg + 1);
    }
  }
  return num / den;
}

inline std::string partition_to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

/// An r-tuple of partitions.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components) : comps_(std::move(components)) {
    for (const auto& c : comps_) {
      if (!is_partition(c)) throw DomainError("multipartition components must be weakly decreasing and positive");
    }
  }

  int r() const { return static_cast<int>(comps_.size()); }
  int n() const {
    int s = 0;
    for (const auto& c : comps_) s += partition_size(c);
    return s;
  }
  const std::vector<Partition>& components() const { return comps_; }
  const Partition& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }

  std::vector<int> sizes() const {
    std::vector<int> out;
    for (const auto& c : comps_) out.push_back(partition_size(c));
    return out;
  }

  /// z(lambda) = sum_i i |lambda^(i)|, as an integer (not reduced).
  long long color() const {
    long long s = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i) s += static_cast<long long>(i) * partition_size(comps_[i]);
    return s;
  }

  /// Component i of the result is component i - s of this one (indices mod r).
  Multipartition shifted(int s) const {
    const int r = this->r();
    std::vector<Partition> out(comps_.size());
    for (int i = 0; i < r; ++i) out[static_cast<std::size_t>(i)] = comps_[static_cast<std::size_t>(mod(i - s, r))];
    return Multipartition(std::move(out));
  }

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  /// Lexicographic on (component sizes, then parts).
  friend std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b) {
    if (auto c = a.sizes() <=> b.sizes(); c != 0) return c;
    return a.comps_ <=> b.comps_;
  }

 private:
  std::vector<Partition> comps_;
};

/// "((2,1),(1,1,1))"; an empty component prints as "()".
inline std::string to_string(const Multipartition& m) {
  std::string out = "(";
  for (int i = 0; i < m.r(); ++i) {
    if (i > 0) out += ",";
    out += partition_to_string(m[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Multipartition& m) { return os << to_string(m); }

/// Accepts "((2,1),(1,1,1))"; "()" or "∅" stand for an empty component.
inline Multipartition parse_multipartition(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("invalid multipartition '" + std::string(text) + "': " + why);
  };
  detail::expect(text, pos, '(');
  std::vector<Partition> comps;
  const std::string_view empty_set = "\xE2\x88\x85";
  while (true) {
    detail::skip_spaces(text, pos);
    if (text.substr(pos, empty_set.size()) == empty_set) {
      pos += empty_set.size();
      comps.emplace_back();
    } else {
      detail::expect(text, pos, '(');
      Partition part;
      if (pos < text.size() && text[pos] != ')') {
        while (true) {
          part.push_back(detail::parse_int(text, pos));
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          break;
        }
      }
      detail::expect(text, pos, ')');
      if (!is_partition(part)) throw fail("parts must be positive and weakly decreasing");
      comps.push_back(std::move(part));
    }
    detail::skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  detail::expect(text, pos, ')');
  if (pos != text.size()) throw fail("trailing characters");
  return Multipartition(std::move(comps));
}

/// multinomial(n; |lambda^(0)|, ...) * prod_i f^{lambda^(i)}.
inline BigInt count_standard(const Multipartition& m) {
  BigInt out = 1;
  int placed = 0;
  for (const auto& c : m.components()) {
    const int k = partition_size(c);
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(placed + k), static_cast<unsigned long>(k));
    out *= binom;
    out *= count_syt(c);
    placed += k;
  }
  return out;
}

/// The orbit [lambda] under the cyclic shift by r/p.
class ShapeOrbit {
 public:
  ShapeOrbit(const Multipartition& lambda, int p) : p_(p) {
    const int r = lambda.r();
    if (p < 1 || r % p != 0) throw DomainError("p must divide r for a shape orbit");
    const int step = r / p;
    for (int k = 0; k < p; ++k) {
      Multipartition m = lambda.shifted(k * step);
      if (std::find(members_.begin(), members_.end(), m) == members_.end()) members_.push_back(std::move(m));
    }
    std::sort(members_.begin(), members_.end());
  }

  /// Distinct members, sorted; front() is the canonical one.
  const std::vector<Multipartition>& members() const { return members_; }
  const Multipartition& canonical() const { return members_.front(); }
  int p() const { return p_; }
  /// m_p(lambda), the stabilizer order.
  int stabilizer() const { return p_ / static_cast<int>(members_.size()); }
  bool contains(const Multipartition& m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
  }

  friend bool operator==(const ShapeOrbit& a, const ShapeOrbit& b) {
    return a.p_ == b.p_ && a.canonical() == b.canonical();
  }
  friend std::strong_ordering operator<=>(const ShapeOrbit& a, const ShapeOrbit& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.canonical() <=> b.canonical();
  }

 private:
  std::vector<Multipartition> members_;
  int p_ = 1;
};

inline ShapeOrbit orbit_of(const Multipartition& lambda, int p) { return {lambda, p}; }

/// "[((2,1),(1,1,1))]", listing the canonical member.
inline std::string to_string(const ShapeOrbit& o) { return "[" + to_string(o.canonical()) + "]"; }

inline std::ostream& operator<<(std::ostream& os, const ShapeOrbit& o) { return os << to_string(o); }

/// |St_[lambda]| = count_standard(member) / m_p(lambda), the common degree of
/// the constituents rho^j_[lambda].
inline BigInt count_standard(const ShapeOrbit& o) {
  return count_standard(o.canonical()) / static_cast<unsigned long>(o.stabilizer());
}

/// Fer(r,q,1,n): all multipartitions with z(lambda) = 0 mod q, sorted.
inline std::vector<Multipartition> enumerate_shapes(int r, int n, int q = 1) {
  if (r < 1 || n < 0) throw DomainError("enumerate_shapes needs r >= 1 and n >= 0");
  if (q < 1 || r % q != 0) throw DomainError("q must divide r");
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) by_size[static_cast<std::size_t>(m)] = partitions_of(m);
  std::vector<Multipartition> out;
  std::vector<Partition> cur(static_cast<std::size_t>(r));
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r - 1) {
      for (const auto& part : by_size[static_cast<std::size_t>(left)]) {
        cur[static_cast<std::size_t>(i)] = part;
        Multipartition m(cur);
        if (m.color() % q == 0) out.push_back(std::move(m));
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      for (const auto& part : by_size[static_cast<std::size_t>(k)]) {
        cur[static_cast<std::size_t>(i)] = part;
        rec(i + 1, left - k);
      }
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Distinct Gamma_p orbits of Fer(r,q,1,n), i.e. Fer(r,q,p,n), sorted by canonical member.
inline std::vector<ShapeOrbit> enumerate_shape_orbits(int r, int n, int q, int p) {
  std::vector<ShapeOrbit> out;
  for (const auto& m : enumerate_shapes(r, n, q)) {
    ShapeOrbit o(m, p);
    if (o.canonical() == m) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A filling of one multipartition: rows[i] lists the rows of component i.
struct StandardMultitableau {
  std::vector<std::vector<std::vector<int>>> rows;

  int r() const { return static_cast<int>(rows.size()); }

  Multipartition shape() const {
    std::vector<Partition> comps;
    for (const auto& comp : rows) {
      Partition p;
      for (const auto& row : comp) p.push_back(static_cast<int>(row.size()));
      comps.push_back(std::move(p));
    }
    return Multipartition(std::move(comps));
  }

  /// Component i of the result is component i - s of this one.
  StandardMultitableau shifted(int s) const {
    const int r = this->r();
    StandardMultitableau out;
    out.rows.resize(rows.size());
    for (int i = 0; i < r; ++i) out.rows[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(mod(i - s, r))];
    return out;
  }

  bool is_standard() const {
    const int n = shape().n();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& comp : rows) {
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (std::size_t j = 0; j < comp[i].size(); ++j) {
          const int v = comp[i][j];
          if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
          seen[static_cast<std::size_t>(v)] = true;
          if (j > 0 && comp[i][j - 1] >= v) return false;
          if (i > 0 && (comp[i - 1].size() <= j || comp[i - 1][j] >= v)) return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(const StandardMultitableau&, const StandardMultitableau&) = default;
  friend auto operator<=>(const StandardMultitableau&, const StandardMultitableau&) = default;
};

inline constexpr int max_enumerable_tableau_size = 12;

/// All standard fillings of `lambda`, in lexicographic order of their row data.
inline std::vector<StandardMultitableau> enumerate_standard(const Multipartition& lambda) {
  const int n = lambda.n();
  if (n > max_enumerable_tableau_size) {
    throw ResourceError("enumerate_standard is limited to n <= " + std::to_string(max_enumerable_tableau_size));
  }
  const int r = lambda.r();
  StandardMultitableau cur;
  cur.rows.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cur.rows[static_cast<std::size_t>(i)].resize(lambda[i].size());
  std::vector<StandardMultitableau> out;
  // place 1..n in turn at any addable corner that stays inside lambda
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c < r; ++c) {
      auto& comp = cur.rows[static_cast<std::size_t>(c)];
      const Partition& target = lambda[c];
      for (std::size_t row = 0; row < comp.size(); ++row) {
        const std::size_t len = comp[row].size();
        if (static_cast<int>(len) >= target[row]) continue;
        if (row > 0 && comp[row - 1].size() <= len) continue;
        comp[row].push_back(v);
        rec(v + 1);
        comp[row].pop_back();
      }
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gelfand
