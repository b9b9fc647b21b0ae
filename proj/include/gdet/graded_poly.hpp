#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "gdet/cyclotomic.hpp"
#include "gdet/groups.hpp"

namespace gdet {

// Exponent vector of a monomial in the variables {x_g : g in G}, indexed by
// the group's element enumeration.
using ExpVec = std::vector<uint16_t>;

inline int expvec_degree(const ExpVec& e) {
  int d = 0;
  for (uint16_t v : e) d += v;
  return d;
}

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    int da = expvec_degree(a), db = expvec_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

struct Monomial {
  ExpVec exponents;

  int degree() const { return expvec_degree(exponents); }

  // Product of the variables' group elements, with multiplicity.
  size_t grade(const Group& g) const {
    size_t acc = g.identity();
    for (size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] != 0) acc = g.op(acc, g.power(i, exponents[i]));
    return acc;
  }
};

namespace detail {
inline bool coef_is_zero(const Int& c) { return c == 0; }
inline bool coef_is_zero(const Cyclo& c) { return c.is_zero(); }
}  // namespace detail

// Sparse polynomial in {x_g} with coefficients in Z or Z[zeta], canonical:
// no zero coefficients are stored and terms sit in a grlex-ordered map.
template <typename C>
class GradedPoly {
 public:
  using TermMap = std::map<ExpVec, C, GrlexLess>;

  explicit GradedPoly(GroupPtr group) : group_(std::move(group)) {}

  static GradedPoly variable(GroupPtr group, size_t g, C coef) {
    GradedPoly p(std::move(group));
    ExpVec e(p.group_->size(), 0);
    e[g] = 1;
    p.add_term(e, std::move(coef));
    return p;
  }

  static GradedPoly constant(GroupPtr group, C coef) {
    GradedPoly p(std::move(group));
    p.add_term(ExpVec(p.group_->size(), 0), std::move(coef));
    return p;
  }

  const GroupPtr& group() const { return group_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const ExpVec& e, C coef) {
    if (detail::coef_is_zero(coef)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, std::move(coef));
    } else {
      it->second += coef;
      if (detail::coef_is_zero(it->second)) terms_.erase(it);
    }
  }

  GradedPoly operator+(const GradedPoly& o) const {
    check_compatible(o);
    GradedPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  GradedPoly operator-() const {
    GradedPoly r(group_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, negate(c));
    return r;
  }

  GradedPoly operator-(const GradedPoly& o) const { return *this + (-o); }

  GradedPoly operator*(const GradedPoly& o) const {
    check_compatible(o);
    GradedPoly r(group_);
    const size_t n = group_->size();
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        ExpVec e(n);
        for (size_t i = 0; i < n; ++i)
          e[i] = static_cast<uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }

  GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }
  GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

  // Sub-polynomial of the terms whose monomial grade is h.
  GradedPoly graded_component(size_t h) const {
    GradedPoly r(group_);
    for (const auto& [e, c] : terms_)
      if (Monomial{e}.grade(*group_) == h) r.terms_.emplace(e, c);
    return r;
  }

  // Distinct grades present, ascending.
  std::vector<size_t> support_grades() const {
    std::vector<size_t> grades;
    for (const auto& [e, c] : terms_) grades.push_back(Monomial{e}.grade(*group_));
    std::sort(grades.begin(), grades.end());
    grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
    return grades;
  }

  bool homogeneous_of_degree(int d) const {
    for (const auto& [e, c] : terms_)
      if (expvec_degree(e) != d) return false;
    return true;
  }

  // Exact evaluation; the assignment must cover every variable that occurs.
  C substitute(const std::map<size_t, Int>& assignment, C zero, C one) const {
    C acc = zero;
    for (const auto& [e, c] : terms_) {
      C term = c;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = assignment.find(i);
        if (it == assignment.end())
          throw std::invalid_argument("GradedPoly::substitute: missing variable");
        C v = one;
        v *= it->second;  // scalar into coefficient space
        for (int k = 0; k < e[i]; ++k) term *= v;
      }
      acc += term;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest grlex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      write_term(out, it->first, it->second, first);
      first = false;
    }
    return out.str();
  }

 private:
  static Int negate(const Int& c) { return -c; }
  static Cyclo negate(const Cyclo& c) { return -c; }

  void check_compatible(const GradedPoly& o) const {
    if (group_->orders() != o.group_->orders())
      throw std::invalid_argument("GradedPoly: group mismatch");
  }

  static void write_term(std::ostringstream& out, const ExpVec& e, const Int& c,
                         bool first) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = mag == 1;
    bool wrote = false;
    if (!unit) {
      out << mag.str();
      wrote = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << "x_" << i;
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
    if (!wrote) out << "1";
  }

  static void write_term(std::ostringstream& out, const ExpVec& e,
                         const Cyclo& c, bool first) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*x_" << i;
      if (e[i] > 1) out << "^" << e[i];
    }
  }

  GroupPtr group_;
  TermMap terms_;
};

using ZGradedPoly = GradedPoly<Int>;
using CycloGradedPoly = GradedPoly<Cyclo>;

inline Int substitute(const ZGradedPoly& f, const std::map<size_t, Int>& a) {
  return f.substitute(a, Int(0), Int(1));
}

// Integer-coefficient view of a cyclotomic-coefficient polynomial; throws
// if any coefficient has a nonzero zeta part.
inline ZGradedPoly to_integer_poly(const CycloGradedPoly& f) {
  ZGradedPoly r(f.group());
  for (const auto& [e, c] : f.terms()) {
    auto v = c.as_integer();
    if (!v) throw std::domain_error("to_integer_poly: non-integer coefficient");
    r.add_term(e, *v);
  }
  return r;
}

}  // namespace gdet
