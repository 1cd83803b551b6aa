#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "contig/mpoly.hpp"

namespace contig {

/// Element of the fraction field K of the parameter polynomial ring, kept in
/// reduced form. Unique representative: gcd(num, den) constant, denominator
/// with coprime integer coefficients and positive leading coefficient.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(RingPtr ring)
      : num_(MPoly(ring)), den_(MPoly(ring, Rational(1))) {}
  RatFun(RingPtr ring, const Rational& c)
      : num_(MPoly(ring, c)), den_(MPoly(std::move(ring), Rational(1))) {}
  explicit RatFun(MPoly num)
      : num_(std::move(num)), den_(MPoly(num_.ring(), Rational(1))) {}
  RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_ring(num_.ring(), den_.ring());
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    reduce();
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const {
    if (!is_constant()) throw std::logic_error("RatFun: not constant");
    return num_.constant_value();
  }

  RatFun operator-() const { return RatFun(unchecked(), -num_, den_); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun inverse() const {
    if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
    return RatFun(den_, num_);
  }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// Substitute parameter -> parameter + amount in numerator and denominator.
  RatFun shifted(int var, long amount) const {
    return RatFun(num_.shifted(var, amount), den_.shifted(var, amount));
  }

  RatFun shifted(const std::vector<int>& amounts) const {
    MPoly n = num_, d = den_;
    for (std::size_t i = 0; i < amounts.size(); ++i) {
      if (amounts[i] == 0) continue;
      n = n.shifted(static_cast<int>(i), amounts[i]);
      d = d.shifted(static_cast<int>(i), amounts[i]);
    }
    return RatFun(std::move(n), std::move(d));
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw std::domain_error("RatFun: evaluation hits a pole");
    return num_.evaluate(point) / d;
  }

  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const {
    return num_.evaluate(point) / den_.evaluate(point);
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  struct unchecked {};
  RatFun(unchecked, MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  void reduce() {
    if (num_.is_zero()) {
      den_ = MPoly(den_.ring(), Rational(1));
      return;
    }
    MPoly g = gcd_mpoly(num_, den_);
    if (!g.is_constant()) {
      num_ = *MPoly::divide_exact(num_, g);
      den_ = *MPoly::divide_exact(den_, g);
    }
    Rational c = den_.content();
    if (den_.leading_coefficient().sign() < 0) c = -c;
    num_ = num_.scaled(c.inverse());
    den_ = den_.scaled(c.inverse());
  }

  MPoly num_;
  MPoly den_;
};

/// r(s, nu) -> r(s/delta, nu/delta), cleared to a fraction of polynomials in
/// (s, nu, delta). Every parameter variable of the input ring is scaled; the
/// output lives in the ring extended by delta (last variable).
inline RatFun substitute_scaled(const RatFun& r, const RingPtr& delta_ring) {
  const RingPtr& src = r.ring();
  int dvar = static_cast<int>(delta_ring->size()) - 1;
  if (delta_ring->vars[dvar] != "delta")
    throw std::invalid_argument("substitute_scaled: target ring must end in delta");

  int dn = r.num().is_zero() ? 0 : r.num().degree();
  int dd = r.den().degree();
  int top = std::max(dn, dd);

  auto lift = [&](const MPoly& p) {
    MPoly out(delta_ring);
    for (auto& [e, c] : p.terms()) {
      Exponents ne(delta_ring->size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        int w = delta_ring->index_of(src->vars[i]);
        if (w < 0) throw std::invalid_argument("substitute_scaled: incompatible rings");
        ne[w] = e[i];
      }
      ne[dvar] = top - total_degree(e);
      out.add_term(ne, c);
    }
    return out;
  };

  return RatFun(lift(r.num()), lift(r.den()));
}

/// Exact value at delta = 0. Throws when the entry has a pole there.
inline RatFun at_delta_zero(const RatFun& r, const RingPtr& param_ring) {
  int dvar = static_cast<int>(r.ring()->size()) - 1;
  if (r.ring()->vars[dvar] != "delta")
    throw std::invalid_argument("at_delta_zero: input ring must end in delta");
  MPoly d0 = r.den().substituted(dvar, Rational(0));
  if (d0.is_zero())
    throw std::domain_error("at_delta_zero: pole at delta = 0 in " + r.to_string());
  MPoly n0 = r.num().substituted(dvar, Rational(0));
  return RatFun(n0.dropped_var(dvar, param_ring), d0.dropped_var(dvar, param_ring));
}

}  // namespace contig
