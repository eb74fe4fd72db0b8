#pragma once

// Exact irreducible characters of S_m, G(r,n), G(r,p,n) and G(r,p,q,n).

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/conjugacy_classes.hpp"
#include "gelfand/cyclotomic.hpp"
#include "gelfand/group.hpp"
#include "gelfand/shapes_tableaux.hpp"

namespace gelfand {

namespace detail {

/// Read-mostly memo for symmetric-group character values.
class SymCharacterCache {
 public:
  static SymCharacterCache& instance() {
    static SymCharacterCache cache;
    return cache;
  }

  std::optional<long long> find(const std::pair<Partition, Partition>& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(std::pair<Partition, Partition> key, long long value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Partition, Partition>, long long> table_;
};

/// Murnaghan-Nakayama on the beta-set of lambda, removing a rim hook of length
/// alpha.front() and recursing on the rest of alpha.
inline long long mn_recurse(const Partition& lambda, const Partition& alpha) {
  if (alpha.empty()) return lambda.empty() ? 1 : 0;
  auto& cache = SymCharacterCache::instance();
  auto key = std::make_pair(lambda, alpha);
  if (auto hit = cache.find(key)) return *hit;

  const int k = alpha.front();
  const Partition rest(alpha.begin() + 1, alpha.end());
  const int len = static_cast<int>(lambda.size());
  // beta_i = lambda_i + (len - 1 - i), strictly decreasing
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  long long total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)] - k;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    // sign from the number of beta entries strictly between b and beta_i
    int between = 0;
    for (int x : beta) between += (x > b && x < beta[static_cast<std::size_t>(i)]) ? 1 : 0;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = b;
    std::sort(nb.rbegin(), nb.rend());
    Partition mu;
    for (int j = 0; j < len; ++j) {
      const int part = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) mu.push_back(part);
    }
    const long long sub = mn_recurse(mu, rest);
    total += (between % 2 == 0) ? sub : -sub;
  }
  cache.insert(std::move(key), total);
  return total;
}

}  // namespace detail

/// chi_lambda at a permutation of cycle type alpha.
inline long long sym_character(const Partition& lambda, const Partition& alpha) {
  if (!is_partition(lambda) || partition_size(lambda) != partition_size(alpha)) {
    throw DomainError("sym_character needs partitions of the same size");
  }
  for (int a : alpha) {
    if (a <= 0) throw DomainError("cycle lengths must be positive");
  }
  Partition a = alpha;
  std::sort(a.rbegin(), a.rend());
  return detail::mn_recurse(lambda, a);
}

/// chi_lambda of G(r,n) on the class with cycle data alpha: a sum over the
/// assignments of g's cycles to the components of lambda with matching sizes
/// of prod_i chi_{lambda^(i)}(lengths) * zeta_r^{i * (colors assigned to i)}.
inline Cyclotomic wreath_character(const Multipartition& lambda, const Multipartition& alpha) {
  const int r = lambda.r();
  if (alpha.r() != r) throw DimensionError("shape and class label have different r");
  if (lambda.n() != alpha.n()) throw DomainError("shape and class label have different n");
  std::vector<std::pair<int, int>> cycles;  // (length, color)
  for (int c = 0; c < r; ++c) {
    for (int len : alpha[c]) cycles.emplace_back(len, c);
  }
  std::vector<int> room = lambda.sizes();
  std::vector<Partition> assigned(static_cast<std::size_t>(r));
  std::vector<long long> counts(static_cast<std::size_t>(r), 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t k, long long exponent) {
    if (k == cycles.size()) {
      long long coeff = 1;
      for (int i = 0; i < r && coeff != 0; ++i) {
        coeff *= sym_character(lambda[i], assigned[static_cast<std::size_t>(i)]);
      }
      counts[static_cast<std::size_t>(mod(exponent, r))] += coeff;
      return;
    }
    const auto [len, color] = cycles[k];
    for (int i = 0; i < r; ++i) {
      if (room[static_cast<std::size_t>(i)] < len) continue;
      room[static_cast<std::size_t>(i)] -= len;
      assigned[static_cast<std::size_t>(i)].push_back(len);
      rec(k + 1, exponent + static_cast<long long>(i) * color);
      assigned[static_cast<std::size_t>(i)].pop_back();
      room[static_cast<std::size_t>(i)] += len;
    }
  };
  rec(0, 0);
  return Cyclotomic::from_exponent_counts(r, counts);
}

/// Delta^1_{mu,mu} of G(r,p,n), GCD(p,n) = 2, for mu in Fer(r', n'):
/// (-1)^eps 2^{l(alpha)} chi_mu(alpha') on cl^eps_{2 alpha}, where alpha'^(j)
/// halves the parts of alpha^(2j); zero on unsplit classes.
inline Cyclotomic delta1(const Multipartition& mu, const ConjClassLabel& label) {
  if (!label.split_bit) return Cyclotomic(0);
  const Multipartition& alpha = label.alpha;
  const int r = alpha.r();
  if (mu.r() * 2 != r) throw DimensionError("delta1 needs mu with r/2 components");
  std::vector<Partition> halved(static_cast<std::size_t>(r / 2));
  int length = 0;
  for (int j = 0; j < r / 2; ++j) {
    for (int part : alpha[2 * j]) {
      halved[static_cast<std::size_t>(j)].push_back(part / 2);
      ++length;
    }
  }
  Cyclotomic value = wreath_character(mu, Multipartition(std::move(halved)));
  BigInt factor = 1;
  factor <<= static_cast<mp_bitcnt_t>(length);
  value.scale(Rational(factor));
  if (*label.split_bit == 1) value.scale(Rational(-1));
  return value;
}

/// Exact class function on the classes of G(r,p,n).
struct ClassFunction {
  GroupParams group;
  std::vector<ConjClassLabel> classes;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at(const ConjClassLabel& c) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), c);
    if (it == classes.end() || !(*it == c)) throw DomainError("class " + to_string(c) + " is not in the domain");
    return values[static_cast<std::size_t>(it - classes.begin())];
  }

  /// Value at the identity, as a rational.
  Rational degree() const {
    std::vector<Partition> comps(static_cast<std::size_t>(group.r));
    comps[0] = Partition(static_cast<std::size_t>(group.n), 1);
    auto v = at({Multipartition(std::move(comps)), std::nullopt}).is_rational();
    if (!v) throw InconsistencyError("class function has a non-rational value at the identity");
    return *v;
  }

  ClassFunction& operator+=(const ClassFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group == b.group && a.classes == b.classes && a.values == b.values;
  }

  void check_same(const ClassFunction& o) const {
    if (!(group == o.group) || classes != o.classes) throw DomainError("class functions on different groups");
  }
};

/// A zero class function on the classes of G(r,p,n).
inline ClassFunction zero_class_function(const GroupParams& g) {
  ClassFunction f;
  f.group = g;
  f.classes = enumerate_classes(g.r, g.p, g.n);
  f.values.assign(f.classes.size(), Cyclotomic(0));
  return f;
}

/// rho^j_[lambda]: an orbit in Fer(r,q,p,n) and j in [0, m_p - 1].
struct IrreducibleLabel {
  ShapeOrbit orbit;
  int j = 0;

  friend bool operator==(const IrreducibleLabel&, const IrreducibleLabel&) = default;
  friend std::strong_ordering operator<=>(const IrreducibleLabel& a, const IrreducibleLabel& b) {
    if (auto c = a.orbit <=> b.orbit; c != 0) return c;
    return a.j <=> b.j;
  }
};

/// "[((2,1),(2,1))]" for unsplit labels, "[((1),(1))]^1" for split ones.
inline std::string to_string(const IrreducibleLabel& l) {
  std::string out = to_string(l.orbit);
  if (l.orbit.stabilizer() > 1) out += "^" + std::to_string(l.j);
  return out;
}

struct CharacterRow {
  IrreducibleLabel label;
  ClassFunction chi;
};

/// Irreducible characters of G(r,p,q,n) as class functions on G(r,p,n).
inline std::vector<CharacterRow> character_table(const GroupParams& g) {
  if (!g.involutory()) throw UnsupportedError("character tables are provided only when GCD(p,n) is 1 or 2");
  const ClassFunction zero = zero_class_function(g);
  std::vector<CharacterRow> rows;
  for (const auto& orbit : enumerate_shape_orbits(g.r, g.n, g.q, g.p)) {
    const Multipartition& lambda = orbit.canonical();
    ClassFunction res = zero;
    for (std::size_t k = 0; k < res.classes.size(); ++k) res.values[k] = wreath_character(lambda, res.classes[k].alpha);
    const int m = orbit.stabilizer();
    if (m == 1) {
      rows.push_back({{orbit, 0}, std::move(res)});
      continue;
    }
    if (m != 2) throw InconsistencyError("stabilizer larger than 2 under GCD(p,n) = 2");
    const std::vector<Partition> half(lambda.components().begin(), lambda.components().begin() + g.r / 2);
    const Multipartition mu(half);
    for (int j = 0; j < 2; ++j) {
      ClassFunction chi = res;
      for (std::size_t k = 0; k < chi.classes.size(); ++k) {
        Cyclotomic d = delta1(mu, chi.classes[k]);
        if (j == 0) chi.values[k] += d;
        else chi.values[k] -= d;
        chi.values[k] /= Rational(2);
      }
      rows.push_back({{orbit, j}, std::move(chi)});
    }
  }
  return rows;
}

/// (1/|G(r,p,n)|) sum_classes |class| f conj(h).
inline Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
  f.check_same(h);
  Cyclotomic total(0);
  for (std::size_t k = 0; k < f.classes.size(); ++k) {
    Cyclotomic term = f.values[k] * h.values[k].conjugate();
    term.scale(Rational(class_size(f.classes[k], f.group)));
    total += term;
  }
  total /= Rational(f.group.subgroup_order());
  return total;
}

struct Multiplicity {
  IrreducibleLabel label;
  BigInt count;
};

/// Multiplicities <f, chi> over the table; throws InconsistencyError unless
/// they are nonnegative integers that reassemble f exactly.
inline std::vector<Multiplicity> decompose(const ClassFunction& f, const std::vector<CharacterRow>& table) {
  std::vector<Multiplicity> out;
  ClassFunction rebuilt = f;
  for (auto& v : rebuilt.values) v = Cyclotomic(0);
  for (const auto& row : table) {
    const Cyclotomic m = inner_product(f, row.chi);
    const auto q = m.is_rational();
    if (!q || q->get_den() != 1 || *q < 0) {
      throw InconsistencyError("multiplicity of " + to_string(row.label) + " is " + m.to_string() +
                               ", not a nonnegative integer");
    }
    const BigInt count = q->get_num();
    if (count == 0) continue;
    for (std::size_t k = 0; k < rebuilt.values.size(); ++k) {
      Cyclotomic term = row.chi.values[k];
      term.scale(*q);
      rebuilt.values[k] += term;
    }
    out.push_back({row.label, count});
  }
  if (!(rebuilt == f)) throw InconsistencyError("multiplicities do not reassemble the class function");
  return out;
}

}  // namespace gelfand
