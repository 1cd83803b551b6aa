#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "contig/mpoly.hpp"
#include "contig/rational.hpp"
#include "contig/ring.hpp"

namespace contig {

/// Laurent polynomial in the torus variables: integer exponents of any sign,
/// rational coefficients. Same deterministic term order as MPoly, extended to
/// negative exponents by grading with the sum of absolute values.
struct LaurentLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (int x : a) da += std::abs(x);
    for (int x : b) db += std::abs(x);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational, LaurentLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}
  LaurentPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_[Exponents(ring_->size(), 0)] = c;
  }

  static LaurentPoly variable(const RingPtr& ring, int idx, int power = 1) {
    LaurentPoly p(ring);
    Exponents e(ring->size(), 0);
    e[idx] = power;
    p.terms_[e] = Rational(1);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly r(ring_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    require_same_ring(ring_, o.ring_);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    require_same_ring(ring_, o.ring_);
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_ring(a.ring_, b.ring_);
    LaurentPoly r(a.ring_);
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Rational& c) const {
    LaurentPoly r(ring_);
    if (c.is_zero()) return r;
    for (auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  LaurentPoly pow(int m) const {
    if (m < 0) {
      if (terms_.size() != 1)
        throw std::domain_error("LaurentPoly::pow: negative power of a non-monomial");
      LaurentPoly r(ring_);
      Exponents e(terms_.begin()->first);
      for (auto& x : e) x *= m;
      Rational c = terms_.begin()->second;
      Rational ci = c.inverse();
      Rational acc(1);
      for (int i = 0; i < -m; ++i) acc *= ci;
      r.terms_[e] = acc;
      return r;
    }
    LaurentPoly r(ring_, Rational(1));
    LaurentPoly base = *this;
    while (m > 0) {
      if (m & 1) r = r * base;
      base = base * base;
      m >>= 1;
    }
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly derivative(int var) const {
    LaurentPoly r(ring_);
    for (auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents ne(e);
      ne[var] -= 1;
      r.add_term(ne, c * Rational(e[var]));
    }
    return r;
  }

  std::complex<double> evaluate(const std::vector<std::complex<double>>& x) const {
    std::complex<double> acc = 0.0;
    for (auto& [e, c] : terms_) {
      std::complex<double> t = c.to_double();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0)
          for (int k = 0; k < e[i]; ++k) t *= x[i];
        else
          for (int k = 0; k < -e[i]; ++k) t /= x[i];
      }
      acc += t;
    }
    return acc;
  }

  int min_exponent(int var) const {
    int m = 0;
    for (auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
  }
  int max_total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational a = c;
      if (first) {
        if (a.sign() < 0) {
          os << "-";
          a = -a;
        }
        first = false;
      } else {
        os << (a.sign() < 0 ? " - " : " + ");
        if (a.sign() < 0) a = -a;
      }
      std::ostringstream mono;
      bool any = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) mono << "*";
        mono << ring_->vars[i];
        if (e[i] != 1) mono << "^" << e[i];
        any = true;
      }
      if (!any) {
        os << a.to_string();
      } else if (a.is_one()) {
        os << mono.str();
      } else {
        os << a.to_string() << "*" << mono.str();
      }
    }
    return os.str();
  }

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// The input problem: Laurent polynomials f_1, ..., f_l in n torus variables
/// whose nonvanishing locus is the very affine variety under study.
struct ModelSpec {
  RingPtr x_ring;
  std::vector<LaurentPoly> f;

  int n() const { return static_cast<int>(x_ring->size()); }
  int l() const { return static_cast<int>(f.size()); }

  void validate() const {
    if (!x_ring || x_ring->size() == 0) throw std::invalid_argument("model: needs n >= 1 variables");
    if (f.empty()) throw std::invalid_argument("model: needs l >= 1 polynomials");
    for (auto& fi : f) {
      if (!same_ring(fi.ring(), x_ring))
        throw std::invalid_argument("model: polynomials use different variable sets");
      if (fi.is_zero()) throw std::invalid_argument("model: zero polynomial");
    }
  }

  RingPtr param_ring() const { return parameter_ring(l(), n()); }
  RingPtr param_ring_delta() const { return parameter_ring_delta(l(), n()); }
};

}  // namespace contig
