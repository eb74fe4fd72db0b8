#pragma once

// The Gelfand model M(r,q,p,n) of G(r,p,q,n): basis C_v indexed by the
// absolute involutions v of the dual group, with the monomial action
//   C_v -> zeta_r^<g,v> (-1)^{inv_v(g)} C_{|g| v |g|^-1}   (v symmetric)
//   C_v -> zeta_r^{<g,v> + a(g,v)} C_{|g| v |g|^-1}        (v antisymmetric)

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gelfand/characters.hpp"
#include "gelfand/colored_perm.hpp"
#include "gelfand/conjugacy_classes.hpp"
#include "gelfand/group.hpp"
#include "gelfand/rs_correspondence.hpp"

namespace gelfand {

/// zeta_N^k with N = lcm(r, 2), so that both zeta_r and -1 are exact powers.
struct RootOfUnity {
  int order = 2;
  int exponent = 0;

  RootOfUnity operator*(const RootOfUnity& o) const { return {order, static_cast<int>(mod(exponent + o.exponent, order))}; }
  Cyclotomic value() const { return Cyclotomic::root_of_unity(order, exponent); }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

inline int model_scalar_order(int r) { return std::lcm(r, 2); }

/// <g,v> = sum_i z_i(g) z_i(v) in Z_r, from any lifts.
inline int pairing(const ColoredPermutation& g, const ColoredPermutation& v) {
  if (g.r() != v.r() || g.n() != v.n()) throw DimensionError("pairing of elements from different groups");
  long long s = 0;
  for (int i = 1; i <= g.n(); ++i) s += static_cast<long long>(g.color(i)) * v.color(i);
  return static_cast<int>(mod(s, g.r()));
}

inline int pairing(const ProjectiveElement& g, const ProjectiveElement& v) { return pairing(g.rep(), v.rep()); }

/// inv_v(g): inversions {i,j} of |g| that are 2-cycles of |v|.
inline int inv_statistic(const ColoredPermutation& g, const ColoredPermutation& v) {
  if (g.n() != v.n()) throw DimensionError("inv_statistic of elements of different rank");
  int count = 0;
  for (int i = 1; i <= v.n(); ++i) {
    const int j = v.image(i);
    if (j > i && g.image(j) < g.image(i)) ++count;
  }
  return count;
}

/// a(g,v) = z_1(v) - z_{|g|^-1(1)}(v) in Z_r.
inline int a_statistic(const ColoredPermutation& g, const ColoredPermutation& v) {
  if (g.r() != v.r() || g.n() != v.n()) throw DimensionError("a_statistic of elements from different groups");
  if (g.n() == 0) return 0;
  int pre = 1;
  for (int j = 1; j <= g.n(); ++j) {
    if (g.image(j) == 1) pre = j;
  }
  return static_cast<int>(mod(v.color(1) - v.color(pre), g.r()));
}

/// standard: the model action; drop_a: the variant without the a(g,v) factor.
enum class ActionVariant { standard, drop_a };

/// The basis of M(r,q,p,n) for the acting group G(r,p,q,n).
class ModelBasis {
 public:
  explicit ModelBasis(const GroupParams& acting, std::uint64_t limit = default_max_group_order) : group_(acting) {
    if (!acting.involutory()) throw UnsupportedError("the model needs GCD(p,n) in {1,2}");
    for (auto& cls : enumerate_involution_classes(acting, limit)) {
      Block block{cls.type, {}};
      for (auto& v : cls.members) {
        block.indices.push_back(elements_.size());
        kinds_.push_back(symmetry_kind_by_cycles(v.rep()));
        block_of_.push_back(blocks_.size());
        elements_.push_back(std::move(v));
      }
      blocks_.push_back(std::move(block));
    }
    order_.resize(elements_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return elements_[a] < elements_[b]; });
  }

  struct Block {
    InvolutionClassType type;
    std::vector<std::size_t> indices;
  };

  const GroupParams& group() const { return group_; }
  GroupParams dual() const { return group_.dual(); }
  std::size_t size() const { return elements_.size(); }
  const ProjectiveElement& element(std::size_t i) const { return elements_[i]; }
  Symmetry kind(std::size_t i) const { return kinds_[i]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }

  std::optional<std::size_t> index_of(const ProjectiveElement& v) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), v,
                               [&](std::size_t a, const ProjectiveElement& x) { return elements_[a] < x; });
    if (it == order_.end() || !(elements_[*it] == v)) return std::nullopt;
    return *it;
  }

  std::optional<std::size_t> block_index(const InvolutionClassType& t) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].type == t) return b;
    }
    return std::nullopt;
  }

 private:
  GroupParams group_;
  std::vector<ProjectiveElement> elements_;
  std::vector<Symmetry> kinds_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> order_;
};

/// rho(g) as a monomial map: C_i -> scalar[i] C_{target[i]}.
struct ModelAction {
  std::vector<std::size_t> target;
  std::vector<RootOfUnity> scalar;

  friend bool operator==(const ModelAction&, const ModelAction&) = default;
};

/// The image of a single basis vector.
inline std::pair<std::size_t, RootOfUnity> act_on(const ColoredPermutation& g, const ModelBasis& basis, std::size_t i,
                                                  ActionVariant variant = ActionVariant::standard) {
  const int r = basis.group().r;
  const int N = model_scalar_order(r);
  const ProjectiveElement& v = basis.element(i);
  const ColoredPermutation abs_g = g.abs();
  const ProjectiveElement image(abs_g * v.rep() * abs_g.inverse(), v.quotient_order());
  const auto j = basis.index_of(image);
  if (!j) throw InconsistencyError("model action left the basis");
  long long e = static_cast<long long>(N / r) * pairing(g, v.rep());
  if (basis.kind(i) == Symmetry::symmetric) {
    e += static_cast<long long>(N / 2) * inv_statistic(g, v.rep());
  } else if (variant == ActionVariant::standard) {
    e += static_cast<long long>(N / r) * a_statistic(g, v.rep());
  }
  return {*j, RootOfUnity{N, static_cast<int>(mod(e, N))}};
}

/// rho(g) for a lift g in G(r,p,n) of an element of G(r,p,q,n).
inline ModelAction model_action(const ColoredPermutation& g, const ModelBasis& basis,
                                ActionVariant variant = ActionVariant::standard) {
  const GroupParams& G = basis.group();
  if (g.r() != G.r || g.n() != G.n) throw DimensionError("element and model belong to different groups");
  if (g.total_color() % G.p != 0) throw DomainError("element is not in G(r,p,n)");
  ModelAction out;
  out.target.resize(basis.size());
  out.scalar.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto [j, s] = act_on(g, basis, i, variant);
    out.target[i] = j;
    out.scalar[i] = s;
  }
  return out;
}

inline ModelAction model_action(const ProjectiveElement& g, const ModelBasis& basis,
                                ActionVariant variant = ActionVariant::standard) {
  return model_action(g.rep(), basis, variant);
}

/// (a o b)(C_i) = a(b(C_i)).
inline ModelAction compose(const ModelAction& a, const ModelAction& b) {
  ModelAction out;
  out.target.resize(b.target.size());
  out.scalar.resize(b.target.size());
  for (std::size_t i = 0; i < b.target.size(); ++i) {
    const std::size_t mid = b.target[i];
    out.target[i] = a.target[mid];
    out.scalar[i] = a.scalar[mid] * b.scalar[i];
  }
  return out;
}

/// Which basis vectors a model character sums over.
struct ModelScope {
  enum class Kind { all, block, symmetric, antisymmetric } kind = Kind::all;
  InvolutionClassType type{};

  static ModelScope everything() { return {}; }
  static ModelScope of_class(InvolutionClassType t) { return {Kind::block, std::move(t)}; }
  /// M^0
  static ModelScope symmetric_part() { return {Kind::symmetric, {}}; }
  /// M^1
  static ModelScope antisymmetric_part() { return {Kind::antisymmetric, {}}; }
};

inline std::vector<std::size_t> scope_indices(const ModelBasis& basis, const ModelScope& scope) {
  std::vector<std::size_t> out;
  switch (scope.kind) {
    case ModelScope::Kind::all:
      out.resize(basis.size());
      std::iota(out.begin(), out.end(), std::size_t{0});
      break;
    case ModelScope::Kind::block: {
      auto b = basis.block_index(scope.type);
      if (!b) throw DomainError("no class of type " + to_string(scope.type) + " in this model");
      out = basis.blocks()[*b].indices;
      break;
    }
    case ModelScope::Kind::symmetric:
    case ModelScope::Kind::antisymmetric: {
      const Symmetry want = scope.kind == ModelScope::Kind::symmetric ? Symmetry::symmetric : Symmetry::antisymmetric;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis.kind(i) == want) out.push_back(i);
      }
      break;
    }
  }
  return out;
}

/// Trace of rho on the scope, at the normal element of every class of G(r,p,n).
inline ClassFunction model_character(const ModelBasis& basis, const ModelScope& scope = ModelScope::everything(),
                                     ActionVariant variant = ActionVariant::standard) {
  ClassFunction f = zero_class_function(basis.group());
  const auto indices = scope_indices(basis, scope);
  const int N = model_scalar_order(basis.group().r);
  for (std::size_t k = 0; k < f.classes.size(); ++k) {
    const ColoredPermutation g = normal_element(f.classes[k]);
    std::vector<long long> counts(static_cast<std::size_t>(N), 0);
    for (std::size_t i : indices) {
      auto [j, s] = act_on(g, basis, i, variant);
      if (j == i) ++counts[static_cast<std::size_t>(s.exponent)];
    }
    f.values[k] = Cyclotomic::from_exponent_counts(N, counts);
  }
  return f;
}

// ---- verification ----------------------------------------------------------

struct ClassReport {
  InvolutionClassType type;
  std::size_t class_size = 0;
  std::vector<IrreducibleLabel> predicted;
  std::vector<IrreducibleLabel> computed;
  bool pass = false;
  std::string error;
};

struct VerificationReport {
  GroupParams group;
  std::vector<ClassReport> classes;

  bool pass() const {
    return std::all_of(classes.begin(), classes.end(), [](const ClassReport& c) { return c.pass; });
  }
};

inline std::vector<IrreducibleLabel> predicted_labels(const InvolutionClassType& type, const GroupParams& g) {
  std::vector<IrreducibleLabel> out;
  for (auto& orbit : predicted_shapes(type, g)) {
    const int j = orbit.stabilizer() > 1 ? iota(type) : 0;
    out.push_back({std::move(orbit), j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Labels with multiplicity (a label repeated m times when it occurs m times).
inline std::vector<IrreducibleLabel> expand(const std::vector<Multiplicity>& ms) {
  std::vector<IrreducibleLabel> out;
  for (const auto& m : ms) {
    for (BigInt k = 0; k < m.count; ++k) out.push_back(m.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline ClassReport verify_block(const ModelBasis& basis, std::size_t b, const std::vector<CharacterRow>& table) {
  const auto& block = basis.blocks()[b];
  ClassReport rep;
  rep.type = block.type;
  rep.class_size = block.indices.size();
  rep.predicted = predicted_labels(block.type, basis.group());
  try {
    rep.computed = expand(decompose(model_character(basis, ModelScope::of_class(block.type)), table));
    rep.pass = rep.computed == rep.predicted;
  } catch (const InconsistencyError& e) {
    rep.error = e.what();
    rep.pass = false;
  }
  return rep;
}

/// Decomposes every M(c) and compares with the predicted label set; blocks are
/// processed on up to `threads` workers, the report order does not depend on it.
inline VerificationReport verify_class_decomposition(const ModelBasis& basis, const std::vector<CharacterRow>& table,
                                                     unsigned threads = 1,
                                                     const std::optional<InvolutionClassType>& only = std::nullopt) {
  VerificationReport report;
  report.group = basis.group();
  std::vector<std::size_t> todo;
  for (std::size_t b = 0; b < basis.blocks().size(); ++b) {
    if (!only || basis.blocks()[b].type == *only) todo.push_back(b);
  }
  if (only && todo.empty()) throw DomainError("no class of type " + to_string(*only) + " in this model");
  report.classes.resize(todo.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(todo.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t k = next++; k < todo.size(); k = next++) report.classes[k] = verify_block(basis, todo[k], table);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, work));
    for (auto& f : pool) f.get();
  }
  return report;
}

inline VerificationReport verify_class_decomposition(const GroupParams& g, unsigned threads = 1,
                                                     std::uint64_t limit = default_max_group_order) {
  ModelBasis basis(g, limit);
  return verify_class_decomposition(basis, character_table(g), threads);
}

// ---- partitions of cycles and the sets A^eps_pi ------------------------------

/// A member of Pi^{2,1}(g): parts are one or two cycle indices (into cycle_decomposition(g)).
struct CyclePartition {
  std::vector<std::vector<std::size_t>> parts;

  std::size_t length() const { return parts.size(); }
  /// Number of parts that are pairs of cycles of length j.
  int pairs_of_length(const std::vector<Cycle>& cycles, int j) const {
    int k = 0;
    for (const auto& s : parts) k += (s.size() == 2 && cycles[s[0]].length() == j) ? 1 : 0;
    return k;
  }
  /// z(s) for each part, in Z_r.
  std::vector<int> part_colors(const std::vector<Cycle>& cycles, int r) const {
    std::vector<int> out;
    for (const auto& s : parts) {
      long long z = 0;
      for (std::size_t c : s) z += cycles[c].color(r);
      out.push_back(static_cast<int>(mod(z, r)));
    }
    return out;
  }

  friend bool operator==(const CyclePartition&, const CyclePartition&) = default;
  friend auto operator<=>(const CyclePartition&, const CyclePartition&) = default;
};

/// Pi^{2,1}(g): partitions of the cycles of g into singletons and pairs of equal length.
inline std::vector<CyclePartition> pi21_partitions(const ColoredPermutation& g) {
  const auto cycles = cycle_decomposition(g);
  std::vector<CyclePartition> out;
  std::vector<bool> used(cycles.size(), false);
  CyclePartition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    while (i < cycles.size() && used[i]) ++i;
    if (i == cycles.size()) {
      CyclePartition sorted = cur;
      std::sort(sorted.parts.begin(), sorted.parts.end());
      out.push_back(std::move(sorted));
      return;
    }
    used[i] = true;
    cur.parts.push_back({i});
    rec(i + 1);
    cur.parts.pop_back();
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (used[j] || cycles[j].length() != cycles[i].length()) continue;
      used[j] = true;
      cur.parts.push_back({i, j});
      rec(i + 1);
      cur.parts.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every antisymmetric element of G(r,n), r even.
inline std::vector<ColoredPermutation> antisymmetric_elements(int r, int n, std::uint64_t limit = default_max_group_order) {
  if (r % 2 != 0) throw DomainError("antisymmetric elements need an even r");
  require_enumerable(r, n, limit);
  std::vector<ColoredPermutation> out;
  if (n % 2 != 0) return out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> rec = [&](int i) {
    while (i <= n && used[static_cast<std::size_t>(i)]) ++i;
    if (i > n) {
      std::vector<int> pc(pairs.size(), 0);
      std::vector<int> colors(static_cast<std::size_t>(n));
      while (true) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          colors[static_cast<std::size_t>(pairs[k].first - 1)] = pc[k];
          colors[static_cast<std::size_t>(pairs[k].second - 1)] = pc[k] + r / 2;
        }
        out.emplace_back(r, images, colors);
        std::size_t k = pairs.size();
        while (k > 0 && pc[k - 1] == r - 1) pc[--k] = 0;
        if (k == 0) break;
        ++pc[k - 1];
      }
      return;
    }
    used[static_cast<std::size_t>(i)] = true;
    for (int j = i + 1; j <= n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      images[static_cast<std::size_t>(i - 1)] = j;
      images[static_cast<std::size_t>(j - 1)] = i;
      pairs.emplace_back(i, j);
      rec(i + 1);
      pairs.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(i)] = false;
  };
  rec(1);
  return out;
}

/// pi(w) for w with |w| commuting with |g|: singletons where |w| keeps a
/// cycle's support, pairs where it swaps two supports.
inline CyclePartition partition_of(const ColoredPermutation& g, const ColoredPermutation& w) {
  const auto cycles = cycle_decomposition(g);
  std::vector<std::size_t> owner(static_cast<std::size_t>(g.n()) + 1);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (const auto& e : cycles[c].entries) owner[static_cast<std::size_t>(e.first)] = c;
  }
  CyclePartition pi;
  std::vector<bool> seen(cycles.size(), false);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (seen[c]) continue;
    const std::size_t d = owner[static_cast<std::size_t>(w.image(cycles[c].entries.front().first))];
    for (const auto& e : cycles[c].entries) {
      if (owner[static_cast<std::size_t>(w.image(e.first))] != d) {
        throw DomainError("|w| does not map cycles of g onto cycles");
      }
    }
    seen[c] = seen[d] = true;
    if (d == c) pi.parts.push_back({c});
    else pi.parts.push_back({std::min(c, d), std::max(c, d)});
  }
  std::sort(pi.parts.begin(), pi.parts.end());
  return pi;
}

/// A^eps(g) = { w antisymmetric : |g| w |g|^-1 = (-1)^eps w }, grouped by pi(w).
inline std::map<CyclePartition, std::vector<ColoredPermutation>> a_sets(const ColoredPermutation& g, int eps,
                                                                        std::uint64_t limit = default_max_group_order) {
  const int r = g.r();
  if (r % 2 != 0) throw DomainError("A-sets need an even r");
  std::map<CyclePartition, std::vector<ColoredPermutation>> out;
  for (const auto& pi : pi21_partitions(g)) out[pi];
  const ColoredPermutation a = g.abs();
  const ColoredPermutation a_inv = a.inverse();
  for (const auto& w : antisymmetric_elements(r, g.n(), limit)) {
    const ColoredPermutation target = (eps % 2 == 0) ? w : w.scaled(r / 2);
    if (!(a * w * a_inv == target)) continue;
    out[partition_of(g, w)].push_back(w);
  }
  return out;
}

}  // namespace gelfand
