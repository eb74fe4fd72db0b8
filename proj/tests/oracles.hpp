#pragma once

// Brute-force reference computations used by the tests. Each one avoids the
// library routine it checks.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gelfand/gelfand.hpp"

namespace oracle {

using namespace gelfand;

// ---- monomial matrices over exact cyclotomics ------------------------------

using Matrix = std::vector<std::vector<Cyclotomic>>;

/// Column j holds zeta_r^{z_j} in row sigma_j.
inline Matrix matrix_of(const ColoredPermutation& g) {
  const auto n = static_cast<std::size_t>(g.n());
  Matrix m(n, std::vector<Cyclotomic>(n, Cyclotomic(0)));
  for (int j = 1; j <= g.n(); ++j) {
    m[static_cast<std::size_t>(g.image(j) - 1)][static_cast<std::size_t>(j - 1)] =
        Cyclotomic::root_of_unity(g.r(), g.color(j));
  }
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Cyclotomic>(n, Cyclotomic(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) t[i][j] = a[j][i];
  }
  return t;
}

inline Matrix negate(Matrix a) {
  for (auto& row : a) {
    for (auto& x : row) x = -x;
  }
  return a;
}

/// Symmetry of a lift from the matrix and its transpose.
inline Symmetry matrix_symmetry(const ColoredPermutation& g) {
  const Matrix m = matrix_of(g);
  const Matrix t = transpose(m);
  if (m == t) return Symmetry::symmetric;
  if (m == negate(t)) return Symmetry::antisymmetric;
  return Symmetry::neither;
}

// ---- enumeration ------------------------------------------------------------

/// Every element of G(r,n), via all permutations and all colorings.
inline std::vector<ColoredPermutation> all_elements(int r, int n) {
  std::vector<ColoredPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    while (true) {
      out.emplace_back(r, perm, colors);
      std::size_t k = colors.size();
      while (k > 0 && colors[k - 1] == r - 1) colors[--k] = 0;
      if (k == 0) break;
      ++colors[k - 1];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::vector<ColoredPermutation> subgroup_elements(int r, int p, int n) {
  std::vector<ColoredPermutation> out;
  for (auto& g : all_elements(r, n)) {
    if (g.total_color() % p == 0) out.push_back(std::move(g));
  }
  return out;
}

/// Conjugation orbits of G(r,p,n) by brute force.
inline std::vector<std::vector<ColoredPermutation>> conjugacy_orbits(int r, int p, int n) {
  const auto group = subgroup_elements(r, p, n);
  std::vector<ColoredPermutation> inverses;
  for (const auto& h : group) inverses.push_back(h.inverse());
  std::set<ColoredPermutation> seen;
  std::vector<std::vector<ColoredPermutation>> out;
  for (const auto& g : group) {
    if (seen.count(g)) continue;
    std::set<ColoredPermutation> orbit;
    for (std::size_t i = 0; i < group.size(); ++i) orbit.insert(group[i] * g * inverses[i]);
    seen.insert(orbit.begin(), orbit.end());
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

/// Absolute involutions of G(r,q,p,n) by filtering every element of G(r,q,n).
inline std::set<ProjectiveElement> absolute_involutions(int r, int q_color, int p_quotient, int n) {
  std::set<ProjectiveElement> out;
  std::set<ColoredPermutation> scalars;
  for (int k = 0; k < p_quotient; ++k) scalars.insert(ColoredPermutation::scalar(r, n, k * (r / p_quotient)));
  for (const auto& g : all_elements(r, n)) {
    if (g.total_color() % q_color != 0) continue;
    if (scalars.count(g * g.conj())) out.insert(ProjectiveElement(g, p_quotient));
  }
  return out;
}

// ---- symmetric group characters by the Frobenius formula -------------------

using Poly = std::map<std::vector<int>, long long>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c[e] += ca * cb;
    }
  }
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

/// chi_lambda(alpha) as the coefficient of x^{lambda+delta} in a_delta * p_alpha.
inline long long frobenius_character(const Partition& lambda, const Partition& alpha) {
  const std::size_t k = std::max<std::size_t>(lambda.size(), 1);
  Poly vandermonde;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> e(k);
    for (std::size_t i = 0; i < k; ++i) e[i] = static_cast<int>(k - 1) - perm[i];
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    }
    vandermonde[e] += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  Poly prod = vandermonde;
  for (int part : alpha) {
    Poly power;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<int> e(k, 0);
      e[i] = part;
      power[e] += 1;
    }
    prod = poly_mul(prod, power);
  }
  std::vector<int> target(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    target[i] = (i < lambda.size() ? lambda[i] : 0) + static_cast<int>(k - 1 - i);
  }
  auto it = prod.find(target);
  return it == prod.end() ? 0 : it->second;
}

/// Standard Young tableaux by removing corners.
inline long long count_syt_by_corners(const Partition& lambda) {
  if (partition_size(lambda) == 0) return 1;
  long long total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const bool corner = i + 1 == lambda.size() || lambda[i + 1] < lambda[i];
    if (!corner) continue;
    Partition smaller = lambda;
    if (--smaller[i] == 0) smaller.pop_back();
    total += count_syt_by_corners(smaller);
  }
  return total;
}

/// chi_lambda(g) of G(r,n) as an induced character: sum over assignments of
/// the points of [n] to blocks B_0..B_{r-1} with |B_i| = |lambda^(i)| that |g|
/// preserves, of prod_i zeta_r^{i z(g|B_i)} chi_{lambda^(i)}(cycle type of g|B_i).
inline Cyclotomic induced_character(const Multipartition& lambda, const ColoredPermutation& g) {
  const int r = lambda.r();
  const int n = g.n();
  Cyclotomic total(0);
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  long long assignments = 1;
  for (int i = 0; i < n; ++i) assignments *= r;
  for (long long code = 0; code < assignments; ++code) {
    long long c = code;
    std::vector<int> sizes(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < n; ++i) {
      block[static_cast<std::size_t>(i)] = static_cast<int>(c % r);
      c /= r;
      ++sizes[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])];
    }
    if (sizes != lambda.sizes()) continue;
    bool stable = true;
    for (int j = 1; j <= n && stable; ++j) stable = block[static_cast<std::size_t>(j - 1)] == block[static_cast<std::size_t>(g.image(j) - 1)];
    if (!stable) continue;
    std::vector<Partition> types(static_cast<std::size_t>(r));
    long long exponent = 0;
    for (const auto& cyc : cycle_decomposition(g)) {
      const int b = block[static_cast<std::size_t>(cyc.min_element() - 1)];
      types[static_cast<std::size_t>(b)].push_back(cyc.length());
      exponent += static_cast<long long>(b) * cyc.color(r);
    }
    long long coeff = 1;
    for (int i = 0; i < r; ++i) {
      auto& t = types[static_cast<std::size_t>(i)];
      std::sort(t.rbegin(), t.rend());
      coeff *= frobenius_character(lambda[i], t);
    }
    total += Cyclotomic(Rational(static_cast<long>(coeff))) * Cyclotomic::root_of_unity(r, exponent);
  }
  return total;
}

// ---- random elements --------------------------------------------------------

inline ColoredPermutation random_element(std::mt19937& rng, int r, int n, int p = 1) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> color(0, r - 1);
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (auto& c : colors) c = color(rng);
  if (n > 0) {
    long long total = std::accumulate(colors.begin(), colors.end(), 0LL);
    colors[0] = static_cast<int>(mod(colors[0] - total % p, r));
  }
  return {r, perm, colors};
}

inline ColoredPermutation random_plain(std::mt19937& rng, int r, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return ColoredPermutation::plain(r, perm);
}

}  // namespace oracle
