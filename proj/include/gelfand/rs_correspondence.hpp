#pragma once

// Colored Robinson-Schensted correspondence for G(r,n) and its projective
// version for G(r,p,q,n).
//
// For each color i, the positions j with z_j = i are read in increasing
// order; the values s_j are row-inserted into P^(i) and the positions j are
// recorded in Q^(i).

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gelfand/colored_perm.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/shapes_tableaux.hpp"

namespace gelfand {

struct RSPair {
  StandardMultitableau P;
  StandardMultitableau Q;

  friend bool operator==(const RSPair&, const RSPair&) = default;
  friend auto operator<=>(const RSPair&, const RSPair&) = default;
};

namespace detail {

using Rows = std::vector<std::vector<int>>;

inline void row_insert(Rows& p, Rows& q, int value, int label) {
  std::size_t row = 0;
  while (true) {
    if (row == p.size()) {
      p.push_back({value});
      q.push_back({label});
      return;
    }
    auto& cur = p[row];
    auto it = std::upper_bound(cur.begin(), cur.end(), value);
    if (it == cur.end()) {
      cur.push_back(value);
      q[row].push_back(label);
      return;
    }
    std::swap(*it, value);
    ++row;
  }
}

/// Reverse bumping out of the corner at the end of `row`; returns the ejected value.
inline int reverse_bump(Rows& p, std::size_t row) {
  int value = p[row].back();
  p[row].pop_back();
  if (p[row].empty()) p.erase(p.begin() + static_cast<std::ptrdiff_t>(row));
  while (row-- > 0) {
    auto& cur = p[row];
    // largest entry smaller than value
    auto it = std::lower_bound(cur.begin(), cur.end(), value);
    --it;
    std::swap(*it, value);
  }
  return value;
}

}  // namespace detail

inline RSPair rs(const ColoredPermutation& g) {
  const int r = g.r();
  RSPair out;
  out.P.rows.resize(static_cast<std::size_t>(r));
  out.Q.rows.resize(static_cast<std::size_t>(r));
  for (int j = 1; j <= g.n(); ++j) {
    const auto c = static_cast<std::size_t>(g.color(j));
    detail::row_insert(out.P.rows[c], out.Q.rows[c], g.image(j), j);
  }
  return out;
}

inline ColoredPermutation rs_inverse(const StandardMultitableau& P, const StandardMultitableau& Q) {
  if (P.r() != Q.r()) throw DomainError("rs_inverse: tableaux have different numbers of components");
  if (!(P.shape() == Q.shape())) throw DomainError("rs_inverse: P and Q have different shapes");
  if (!P.is_standard() || !Q.is_standard()) throw DomainError("rs_inverse: tableaux must be standard");
  const int r = P.r();
  const int n = P.shape().n();
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < r; ++c) {
    detail::Rows p = P.rows[static_cast<std::size_t>(c)];
    detail::Rows q = Q.rows[static_cast<std::size_t>(c)];
    while (!q.empty()) {
      // the largest recording label sits at the end of some row
      std::size_t best = 0;
      for (std::size_t row = 1; row < q.size(); ++row) {
        if (q[row].back() > q[best].back()) best = row;
      }
      const int label = q[best].back();
      q[best].pop_back();
      if (q[best].empty()) q.erase(q.begin() + static_cast<std::ptrdiff_t>(best));
      const int value = detail::reverse_bump(p, best);
      images[static_cast<std::size_t>(label - 1)] = value;
      colors[static_cast<std::size_t>(label - 1)] = c;
    }
  }
  return {r, std::move(images), std::move(colors)};
}

inline Multipartition shape_of(const ColoredPermutation& g) { return rs(g).P.shape(); }

/// Canonical member of the orbit of T under shifts by r/q.
inline StandardMultitableau canonical_tableau(const StandardMultitableau& T, int q) {
  const int r = T.r();
  if (q < 1 || r % q != 0) throw DomainError("q must divide r");
  StandardMultitableau best = T;
  for (int k = 1; k < q; ++k) {
    StandardMultitableau t = T.shifted(k * (r / q));
    if (t < best) best = std::move(t);
  }
  return best;
}

/// The projective image ([P],[Q]) of g in G(r,p,q,n): each tableau is replaced
/// independently by the canonical member of its Gamma_q orbit.
inline RSPair projective_rs(const ProjectiveElement& g) {
  RSPair pq = rs(g.rep());
  const int q = g.quotient_order();
  return {canonical_tableau(pq.P, q), canonical_tableau(pq.Q, q)};
}

/// Sh(v): the orbit, under shifts by r/p with p the quotient order of v, of
/// the common RS shape of the lifts of an absolute involution v.
inline ShapeOrbit shape_of(const ProjectiveElement& v) {
  if (!is_absolute_involution(v)) throw DomainError("shape_of needs an absolute involution");
  return orbit_of(shape_of(v.rep()), v.quotient_order());
}

inline nlohmann::json tableau_to_json(const StandardMultitableau& t) { return t.rows; }

inline StandardMultitableau tableau_from_json(const nlohmann::json& j) {
  StandardMultitableau t;
  try {
    t.rows = j.get<std::vector<std::vector<std::vector<int>>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid tableau JSON: ") + e.what());
  }
  return t;
}

}  // namespace gelfand
