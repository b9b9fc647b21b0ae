#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "gdet/ints.hpp"

namespace gdet {

// Dense integer polynomials, little-endian coefficients. Only what the
// cyclotomic machinery needs: multiply, exact division, normalization.
using ZPoly = std::vector<Int>;

inline void zpoly_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Long division by a monic divisor; throws unless the remainder vanishes.
inline ZPoly zpoly_divexact_monic(ZPoly num, const ZPoly& den) {
  if (den.empty() || den.back() != 1)
    throw std::invalid_argument("zpoly_divexact_monic: divisor not monic");
  zpoly_trim(num);
  if (num.size() < den.size()) {
    if (!num.empty()) throw std::domain_error("zpoly_divexact_monic: inexact");
    return {};
  }
  ZPoly q(num.size() - den.size() + 1);
  for (size_t i = q.size(); i-- > 0;) {
    Int c = num[i + den.size() - 1];
    if (c == 0) continue;
    q[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::domain_error("zpoly_divexact_monic: inexact");
  return q;
}

// Phi_n, computed as (x^n - 1) / prod of Phi_d over proper divisors d.
inline ZPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  ZPoly xn1(static_cast<size_t>(n) + 1);
  xn1[0] = -1;
  xn1[n] = 1;
  ZPoly den{1};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) den = zpoly_mul(den, cyclotomic_polynomial(d));
  return zpoly_divexact_monic(std::move(xn1), den);
}

// The ring Z[zeta_N] = Z[x]/Phi_N. Values are canonical coefficient vectors
// in the power basis 1, zeta, ..., zeta^(phi(N)-1), so equality is
// coefficient equality. Ring descriptors are immutable once built.
class CycloRing {
 public:
  explicit CycloRing(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
    degree_ = static_cast<int>(phi_.size()) - 1;
    // zeta^k for k in [0, N): repeated shift-by-one with reduction.
    zeta_pow_.resize(n_);
    std::vector<Int> cur(degree_, 0);
    cur[0] = 1;
    for (int k = 0; k < n_; ++k) {
      zeta_pow_[k] = cur;
      std::vector<Int> next(degree_, 0);
      // multiply by x: shift, then fold x^degree = -(phi minus leading term)
      Int top = cur[degree_ - 1];
      for (int i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (top != 0)
        for (int i = 0; i < degree_; ++i) next[i] -= top * phi_[i];
      cur = std::move(next);
    }
  }

  int order() const { return n_; }
  int degree() const { return degree_; }
  const ZPoly& polynomial() const { return phi_; }

  const std::vector<Int>& zeta_power(long long k) const {
    long long r = k % n_;
    if (r < 0) r += n_;
    return zeta_pow_[static_cast<size_t>(r)];
  }

  // Reduce an arbitrary-degree coefficient vector modulo Phi_N.
  std::vector<Int> reduce(std::vector<Int> c) const {
    for (size_t d = c.size(); d-- > static_cast<size_t>(degree_);) {
      Int top = c[d];
      if (top == 0) continue;
      c[d] = 0;
      for (int i = 0; i < degree_; ++i)
        c[d - degree_ + i] -= top * phi_[i];
    }
    c.resize(degree_);
    return c;
  }

  // Shared descriptor per N; independently built rings of equal N are
  // interchangeable (values compare by N, not by pointer).
  static std::shared_ptr<const CycloRing> get(int n) {
    static std::mutex mu;
    static std::unordered_map<int, std::shared_ptr<const CycloRing>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<CycloRing>(n);
    return slot;
  }

 private:
  int n_;
  int degree_;
  ZPoly phi_;
  std::vector<std::vector<Int>> zeta_pow_;
};

using CycloRingPtr = std::shared_ptr<const CycloRing>;

class Cyclo {
 public:
  Cyclo() = default;

  static Cyclo zero(CycloRingPtr ring) {
    return Cyclo(std::move(ring), {});
  }
  static Cyclo integer(CycloRingPtr ring, Int v) {
    std::vector<Int> c(ring->degree(), 0);
    c[0] = std::move(v);
    return Cyclo(std::move(ring), std::move(c));
  }
  // zeta_N^k, any integer k.
  static Cyclo root_of_unity(CycloRingPtr ring, long long k) {
    auto c = ring->zeta_power(k);
    return Cyclo(std::move(ring), std::move(c));
  }
  // Reduces an arbitrary polynomial in zeta.
  static Cyclo from_poly(CycloRingPtr ring, std::vector<Int> coeffs) {
    auto c = ring->reduce(std::move(coeffs));
    return Cyclo(std::move(ring), std::move(c));
  }

  const CycloRingPtr& ring() const { return ring_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int& c) { return c == 0; });
  }

  std::optional<Int> as_integer() const {
    if (!ring_) return Int(0);
    for (size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_.empty() ? Int(0) : coeffs_[0];
  }

  Cyclo operator-() const {
    Cyclo r = *this;
    for (Int& c : r.coeffs_) c = -c;
    return r;
  }

  Cyclo operator+(const Cyclo& o) const {
    check_same_ring(o);
    Cyclo r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }

  Cyclo operator-(const Cyclo& o) const {
    check_same_ring(o);
    Cyclo r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
  }

  Cyclo operator*(const Cyclo& o) const {
    check_same_ring(o);
    const int deg = ring_->degree();
    std::vector<Int> prod(2 * static_cast<size_t>(deg) - 1, 0);
    for (int i = 0; i < deg; ++i) {
      if (coeffs_[i] == 0) continue;
      for (int j = 0; j < deg; ++j) {
        if (o.coeffs_[j] == 0) continue;
        prod[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return Cyclo(ring_, ring_->reduce(std::move(prod)));
  }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  Cyclo operator*(const Int& s) const {
    Cyclo r = *this;
    for (Int& c : r.coeffs_) c *= s;
    return r;
  }

  Cyclo& operator*=(const Int& s) {
    for (Int& c : coeffs_) c *= s;
    return *this;
  }

  // Complex conjugation, zeta -> zeta^(N-1).
  Cyclo conjugate() const {
    const int n = ring_->order();
    std::vector<Int> acc(ring_->degree(), 0);
    for (int i = 0; i < ring_->degree(); ++i) {
      if (coeffs_[i] == 0) continue;
      const auto& p = ring_->zeta_power((n - i) % n);
      for (int j = 0; j < ring_->degree(); ++j) acc[j] += coeffs_[i] * p[j];
    }
    return Cyclo(ring_, std::move(acc));
  }

  bool operator==(const Cyclo& o) const {
    return ring_->order() == o.ring_->order() && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // "a0 + a1*z + a2*z^2", zero terms omitted; "0" when zero. Round-trips
  // through parse().
  std::string str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      const Int& c = coeffs_[i];
      if (c == 0) continue;
      Int mag = c < 0 ? Int(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (i == 0) {
        out << mag.str();
      } else {
        if (mag != 1) out << mag.str() << "*";
        out << "z";
        if (i > 1) out << "^" << i;
      }
    }
    if (first) out << "0";
    return out.str();
  }

  static Cyclo parse(CycloRingPtr ring, const std::string& text) {
    std::vector<Int> c(ring->degree(), 0);
    size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    bool any = false;
    while (pos < text.size()) {
      int sign = 1;
      if (text[pos] == '+' || text[pos] == '-') {
        if (text[pos] == '-') sign = -1;
        ++pos;
        skip_ws();
      } else if (any) {
        throw std::invalid_argument("Cyclo::parse: missing +/- between terms");
      }
      Int mag = 1;
      bool have_digits = false;
      std::string digits;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits.push_back(text[pos++]);
        have_digits = true;
      }
      if (have_digits) mag = Int(digits);
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
      size_t power = 0;
      if (pos < text.size() && text[pos] == 'z') {
        ++pos;
        power = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::string exp;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            exp.push_back(text[pos++]);
          if (exp.empty()) throw std::invalid_argument("Cyclo::parse: bad exponent");
          power = std::stoul(exp);
        }
      } else if (!have_digits) {
        throw std::invalid_argument("Cyclo::parse: empty term");
      }
      if (power >= c.size())
        throw std::invalid_argument("Cyclo::parse: exponent out of range");
      c[power] += sign * mag;
      any = true;
      skip_ws();
    }
    if (!any) throw std::invalid_argument("Cyclo::parse: empty input");
    return Cyclo(std::move(ring), std::move(c));
  }

 private:
  Cyclo(CycloRingPtr ring, std::vector<Int> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(ring_->degree(), Int(0));
  }

  void check_same_ring(const Cyclo& o) const {
    if (!ring_ || !o.ring_ || ring_->order() != o.ring_->order())
      throw std::invalid_argument("Cyclo: ring mismatch");
  }

  CycloRingPtr ring_;
  std::vector<Int> coeffs_;
};

inline Cyclo operator*(const Int& s, const Cyclo& v) { return v * s; }

}  // namespace gdet
