#pragma once

// Parameters of G(r,p,q,n) = G(r,p,n)/C_q and element enumeration.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gelfand/colored_perm.hpp"
#include "gelfand/cyclotomic.hpp"
#include "gelfand/errors.hpp"

namespace gelfand {

/// Default ceiling on r^n n! for anything that enumerates group elements.
inline constexpr std::uint64_t default_max_group_order = 1'000'000;

struct GroupParams {
  int r = 1;
  int p = 1;
  int q = 1;
  int n = 0;

  GroupParams() = default;
  GroupParams(int r_, int p_, int q_, int n_) : r(r_), p(p_), q(q_), n(n_) { validate(); }

  void validate() const {
    if (r < 1 || n < 0 || p < 1 || q < 1) throw DomainError("group parameters must be positive (n >= 0)");
    if (r % p != 0) throw DomainError("p must divide r");
    if (r % q != 0) throw DomainError("q must divide r");
    if ((static_cast<long long>(r) * n) % (static_cast<long long>(p) * q) != 0) {
      throw DomainError("pq must divide rn");
    }
  }

  /// G(r,q,p,n): p and q exchanged.
  GroupParams dual() const { return {r, q, p, n}; }

  bool involutory() const {
    const int g = std::gcd(p, n);
    return g == 1 || g == 2;
  }

  /// r^n n!, the order of the ambient G(r,n).
  BigInt wreath_order() const {
    BigInt out = 1;
    for (int i = 1; i <= n; ++i) out *= static_cast<unsigned long>(i) * static_cast<unsigned long>(r);
    return out;
  }

  /// |G(r,p,n)| = r^n n!/p.
  BigInt subgroup_order() const { return wreath_order() / static_cast<unsigned long>(p); }

  /// |G(r,p,q,n)| = r^n n!/(pq).
  BigInt order() const { return wreath_order() / static_cast<unsigned long>(p * q); }

  std::string to_string() const {
    return "G(" + std::to_string(r) + "," + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n) + ")";
  }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Throws ResourceError when r^n n! exceeds `limit`.
inline void require_enumerable(int r, int n, std::uint64_t limit) {
  BigInt order = GroupParams(r, 1, 1, n).wreath_order();
  if (order > BigInt(std::to_string(limit))) {
    throw ResourceError("G(" + std::to_string(r) + "," + std::to_string(n) + ") has " + order.get_str() +
                        " elements, above the enumeration limit " + std::to_string(limit));
  }
}

/// Every element of G(r,p,n) in lexicographic window order.
inline std::vector<ColoredPermutation> enumerate_elements(int r, int p, int n,
                                                          std::uint64_t limit = default_max_group_order) {
  require_enumerable(r, n, limit);
  if (p < 1 || r % p != 0) throw DomainError("p must divide r");
  std::vector<ColoredPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  do {
    std::fill(colors.begin(), colors.end(), 0);
    while (true) {
      long long total = 0;
      for (int z : colors) total += z;
      if (total % p == 0) out.emplace_back(r, perm, colors);
      int k = n - 1;
      while (k >= 0 && colors[static_cast<std::size_t>(k)] == r - 1) colors[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
      ++colors[static_cast<std::size_t>(k)];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Every plain permutation of [n], as color-0 elements of G(r,n).
inline std::vector<ColoredPermutation> enumerate_plain(int r, int n, std::uint64_t limit = default_max_group_order) {
  BigInt order = GroupParams(1, 1, 1, n).wreath_order();
  if (order > BigInt(std::to_string(limit))) throw ResourceError("S_" + std::to_string(n) + " is above the enumeration limit");
  std::vector<ColoredPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    out.push_back(ColoredPermutation::plain(r, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Every element of G(r,p,q,n), one canonical representative per scalar coset.
inline std::vector<ProjectiveElement> enumerate_projective(const GroupParams& g,
                                                           std::uint64_t limit = default_max_group_order) {
  std::vector<ProjectiveElement> out;
  for (const auto& x : enumerate_elements(g.r, g.p, g.n, limit)) {
    ProjectiveElement e(x, g.q);
    if (e.rep() == x) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace gelfand
