#pragma once

// Exact arithmetic in Q(zeta_r), stored in the power basis of Q[x]/(Phi_r).

#include <gmpxx.h>

#include <complex>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gelfand/errors.hpp"

namespace gelfand {

using Rational = mpq_class;
using BigInt = mpz_class;

inline long long mod(long long a, long long m) {
  long long x = a % m;
  return x < 0 ? x + m : x;
}

namespace detail {

using IntPoly = std::vector<long>;  // coefficient of x^k at index k

/// Data attached to one cyclotomic field Q(zeta_r).
struct CyclotomicField {
  int order = 1;
  int degree = 1;
  IntPoly phi;                        // monic, size degree + 1
  std::vector<IntPoly> power_images;  // x^k mod Phi_r for k in [0, order)
};

inline IntPoly exact_divide(IntPoly num, const IntPoly& den) {
  // den is monic
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InconsistencyError("cyclotomic polynomial division underflow");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    long c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (long long c : num) {
    if (c != 0) throw InconsistencyError("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

class FieldCache {
 public:
  static FieldCache& instance() {
    static FieldCache cache;
    return cache;
  }

  std::shared_ptr<const CyclotomicField> get(int r) {
    if (r < 1) throw DomainError("cyclotomic order must be positive");
    {
      std::shared_lock lock(mutex_);
      auto it = fields_.find(r);
      if (it != fields_.end()) return it->second;
    }
    auto built = build(r);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = fields_.emplace(r, std::move(built));
    return it->second;
  }

 private:
  std::shared_ptr<const CyclotomicField> build(int r) {
    // x^r - 1 divided by Phi_d for every proper divisor d
    IntPoly poly(static_cast<std::size_t>(r) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(r)] = 1;
    for (int d = 1; d < r; ++d) {
      if (r % d == 0) poly = exact_divide(poly, get(d)->phi);
    }
    auto field = std::make_shared<CyclotomicField>();
    field->order = r;
    field->degree = static_cast<int>(poly.size()) - 1;
    field->phi = poly;
    const auto deg = static_cast<std::size_t>(field->degree);
    IntPoly current(deg, 0);
    current[0] = 1;
    for (int k = 0; k < r; ++k) {
      field->power_images.push_back(current);
      // multiply by x and reduce
      long top = current[deg - 1];
      for (std::size_t j = deg - 1; j > 0; --j) current[j] = current[j - 1];
      current[0] = 0;
      if (top != 0) {
        for (std::size_t j = 0; j < deg; ++j) current[j] -= top * field->phi[j];
      }
    }
    return field;
  }

  std::shared_mutex mutex_;
  std::map<int, std::shared_ptr<const CyclotomicField>> fields_;
};

inline std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace detail

/// The r-th cyclotomic polynomial, lowest degree coefficient first.
inline std::vector<long> cyclotomic_polynomial(int r) {
  return detail::FieldCache::instance().get(r)->phi;
}

inline int euler_phi(int r) { return detail::FieldCache::instance().get(r)->degree; }

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}

  template <std::integral T>
  Cyclotomic(T value) : Cyclotomic(Rational(static_cast<long>(value))) {}

  Cyclotomic(const Rational& value, int order = 1) : field_(field_for(order)) {
    coeffs_.assign(static_cast<std::size_t>(field_->degree), Rational(0));
    coeffs_[0] = value;
  }

  /// zeta_r^k.
  static Cyclotomic root_of_unity(int r, long long k) {
    Cyclotomic out(Rational(0), r);
    const auto& img = out.field_->power_images[static_cast<std::size_t>(mod(k, r))];
    for (std::size_t j = 0; j < img.size(); ++j) out.coeffs_[j] = img[j];
    return out;
  }

  /// sum_k counts[k] * zeta_r^k; counts may have any length (indices taken mod r).
  static Cyclotomic from_exponent_counts(int r, std::span<const long long> counts) {
    Cyclotomic out(Rational(0), r);
    std::vector<long long> acc(out.coeffs_.size(), 0);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      const auto& img = out.field_->power_images[static_cast<std::size_t>(mod(static_cast<long long>(k), r))];
      for (std::size_t j = 0; j < img.size(); ++j) acc[j] += counts[k] * img[j];
    }
    for (std::size_t j = 0; j < acc.size(); ++j) out.coeffs_[j] = static_cast<long>(acc[j]);
    return out;
  }

  /// Builds an element from power-basis coefficients; length must be phi(order).
  static Cyclotomic from_coefficients(int order, std::vector<Rational> coeffs) {
    Cyclotomic out(Rational(0), order);
    if (coeffs.size() != out.coeffs_.size()) {
      throw DimensionError("coefficient vector length must equal phi(order)");
    }
    out.coeffs_ = std::move(coeffs);
    return out;
  }

  int order() const { return field_->order; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Image under Q(zeta_r) -> Q(zeta_R), zeta_r -> zeta_R^(R/r).
  Cyclotomic lifted(int target_order) const {
    const int r = order();
    if (target_order % r != 0) throw DimensionError("lift target must be a multiple of the order");
    if (target_order == r) return *this;
    Cyclotomic out(Rational(0), target_order);
    const int step = target_order / r;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      const auto& img = out.field_->power_images[k * static_cast<std::size_t>(step)];
      for (std::size_t j = 0; j < img.size(); ++j) {
        if (img[j] != 0) out.coeffs_[j] += coeffs_[k] * img[j];
      }
    }
    return out;
  }

  /// Complex conjugation, zeta_r -> zeta_r^-1.
  Cyclotomic conjugate() const {
    const int r = order();
    Cyclotomic out(Rational(0), r);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      const auto& img = field_->power_images[static_cast<std::size_t>(mod(-static_cast<long long>(k), r))];
      for (std::size_t j = 0; j < img.size(); ++j) {
        if (img[j] != 0) out.coeffs_[j] += coeffs_[k] * img[j];
      }
    }
    return out;
  }

  std::optional<Rational> is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) return std::nullopt;
    }
    return coeffs_[0];
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    align(o, [](Rational& a, const Rational& b) { a += b; });
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    align(o, [](Rational& a, const Rational& b) { a -= b; });
    return *this;
  }
  Cyclotomic& scale(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Cyclotomic& operator/=(const Rational& s) {
    if (s == 0) throw DomainError("division of a cyclotomic by zero");
    for (auto& c : coeffs_) c /= s;
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    if (auto q = o.is_rational()) return scale(*q);
    const int target = std::lcm(order(), o.order());
    Cyclotomic a = lifted(target);
    Cyclotomic b = o.lifted(target);
    const std::size_t deg = a.coeffs_.size();
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < deg; ++j) {
        if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    const auto& phi = a.field_->phi;
    for (std::size_t k = prod.size(); k-- > deg;) {
      if (prod[k] == 0) continue;
      Rational c = prod[k];
      for (std::size_t j = 0; j <= deg; ++j) prod[k - deg + j] -= c * phi[j];
    }
    prod.resize(deg);
    a.coeffs_ = std::move(prod);
    *this = std::move(a);
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& s) { return a /= s; }
  friend Cyclotomic operator-(Cyclotomic a) { return a.scale(Rational(-1)); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
    const int target = std::lcm(a.order(), b.order());
    return a.lifted(target).coeffs_ == b.lifted(target).coeffs_;
  }

  /// Monomial sum in the power basis, e.g. "2 - ζ8^3".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    const int r = order();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      Rational c = coeffs_[k];
      if (c == 0) continue;
      bool negative = c < 0;
      if (negative) c = -c;
      std::string mono;
      if (k == 1) mono = "ζ" + std::to_string(r);
      if (k > 1) mono = "ζ" + std::to_string(r) + "^" + std::to_string(k);
      std::string term;
      if (mono.empty()) {
        term = detail::rational_to_string(c);
      } else if (c == 1) {
        term = mono;
      } else {
        term = detail::rational_to_string(c) + "*" + mono;
      }
      if (first) {
        os << (negative ? "-" : "") << term;
      } else {
        os << (negative ? " - " : " + ") << term;
      }
      first = false;
    }
    if (first) return "0";
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : coeffs_) coeffs.push_back(detail::rational_to_string(c));
    return {{"order", order()}, {"coeffs", coeffs}};
  }

  static Cyclotomic from_json(const nlohmann::json& j) {
    try {
      const int order = j.at("order").get<int>();
      std::vector<Rational> coeffs;
      for (const auto& c : j.at("coeffs")) {
        Rational q(c.get<std::string>());
        q.canonicalize();
        coeffs.push_back(q);
      }
      return from_coefficients(order, std::move(coeffs));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed cyclotomic JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("malformed rational in cyclotomic JSON: ") + e.what());
    }
  }

  /// Floating-point value; display only.
  std::complex<double> approx() const {
    std::complex<double> z = 0;
    const double angle = 2.0 * std::acos(-1.0) / order();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      z += coeffs_[k].get_d() * std::polar(1.0, angle * static_cast<double>(k));
    }
    return z;
  }

 private:
  static std::shared_ptr<const detail::CyclotomicField> field_for(int order) {
    return detail::FieldCache::instance().get(order);
  }

  template <class Op>
  void align(const Cyclotomic& o, Op op) {
    if (o.order() == order()) {
      for (std::size_t k = 0; k < coeffs_.size(); ++k) op(coeffs_[k], o.coeffs_[k]);
      return;
    }
    const int target = std::lcm(order(), o.order());
    Cyclotomic b = o.lifted(target);
    *this = lifted(target);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) op(coeffs_[k], b.coeffs_[k]);
  }

  std::shared_ptr<const detail::CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace gelfand
