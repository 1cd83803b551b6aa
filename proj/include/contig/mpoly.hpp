#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "contig/rational.hpp"
#include "contig/ring.hpp"

namespace contig {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// Graded lexicographic order: total degree first, lexicographic tie-break
/// with the first ring variable most significant. Used for all exponent maps
/// so that serialization is deterministic.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Sparse multivariate polynomial over Q.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_[Exponents(ring_->size(), 0)] = c;
  }

  static MPoly variable(const RingPtr& ring, int idx, int power = 1) {
    if (idx < 0 || idx >= static_cast<int>(ring->size()))
      throw std::out_of_range("MPoly::variable: index");
    MPoly p(ring);
    Exponents e(ring->size(), 0);
    e[idx] = power;
    p.terms_[e] = Rational(1);
    return p;
  }

  static MPoly from_terms(RingPtr ring, TermMap terms) {
    MPoly p(std::move(ring));
    for (auto& [e, c] : terms)
      if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("MPoly: not a constant");
    return terms_.begin()->second;
  }
  bool is_one() const { return is_constant() && constant_value().is_one(); }

  int degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return terms_.empty() ? -1 : d;
  }

  int degree_in(int var) const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  /// Leading term in graded-lex order.
  const std::pair<const Exponents, Rational>& leading_term() const {
    if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
    return *terms_.rbegin();
  }
  Rational leading_coefficient() const { return leading_term().second; }

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

  MPoly operator-() const {
    MPoly r(ring_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    require_same_ring(ring_, o.ring_);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    require_same_ring(ring_, o.ring_);
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    require_same_ring(a.ring_, b.ring_);
    MPoly r(a.ring_);
    for (auto& [ea, ca] : a.terms_) {
      for (auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scaled(const Rational& c) const {
    MPoly r(ring_);
    if (c.is_zero()) return r;
    for (auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  MPoly mul_term(const Exponents& shift, const Rational& c) const {
    MPoly r(ring_);
    if (c.is_zero()) return r;
    for (auto& [e, k] : terms_) {
      Exponents ne(e);
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += shift[i];
      r.terms_.emplace(ne, k * c);
    }
    return r;
  }

  MPoly pow(int m) const {
    if (m < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
    MPoly r(ring_, Rational(1));
    MPoly base = *this;
    while (m > 0) {
      if (m & 1) r = r * base;
      base = base * base;
      m >>= 1;
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Positive rational c such that p/c has coprime integer coefficients.
  Rational content() const {
    Rational c(0);
    for (auto& [e, k] : terms_) c = Rational::gcd(c, k);
    return c;
  }

  /// Divide every coefficient by the content, then flip sign so the leading
  /// coefficient is positive. Zero stays zero.
  MPoly normalized() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (leading_coefficient().sign() < 0) c = -c;
    return scaled(c.inverse());
  }

  /// Exact quotient, or nullopt when the division leaves a remainder.
  static std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q) {
    require_same_ring(p.ring_, q.ring_);
    if (q.is_zero()) throw std::domain_error("MPoly: division by zero");
    MPoly rem = p;
    MPoly quot(p.ring_);
    const auto& [qe, qc] = q.leading_term();
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.leading_term();
      Exponents d(re);
      for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] -= qe[i];
        if (d[i] < 0) return std::nullopt;
      }
      Rational c = rc / qc;
      quot.add_term(d, c);
      rem -= q.mul_term(d, c);
    }
    return quot;
  }

  bool divides(const MPoly& p) const { return divide_exact(p, *this).has_value(); }

  /// Substitute variable -> variable + amount (binomial expansion).
  MPoly shifted(int var, long amount) const {
    if (amount == 0) return *this;
    MPoly r(ring_);
    for (auto& [e, c] : terms_) {
      int m = e[var];
      // (x + amount)^m expanded; m is small in practice.
      Rational binom(1);
      Rational apow(1);
      for (int j = m; j >= 0; --j) {
        // coefficient of x^j: C(m, j) * amount^(m-j)
        Exponents ne(e);
        ne[var] = j;
        r.add_term(ne, c * binom * apow);
        if (j > 0) {
          binom *= Rational(j);
          binom /= Rational(m - j + 1);
          apow *= Rational(amount);
        }
      }
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const {
    std::complex<double> acc = 0.0;
    for (auto& [e, c] : terms_) {
      std::complex<double> t = c.to_double();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  /// Map into another ring containing the same variable names (by name).
  MPoly mapped_to(const RingPtr& target) const {
    std::vector<int> where(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      where[i] = target->index_of(ring_->vars[i]);
      if (where[i] < 0)
        throw std::invalid_argument("MPoly::mapped_to: variable " + ring_->vars[i] +
                                    " missing from target ring");
    }
    MPoly r(target);
    for (auto& [e, c] : terms_) {
      Exponents ne(target->size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
      r.add_term(ne, c);
    }
    return r;
  }

  /// Substitute one variable by a rational constant.
  MPoly substituted(int var, const Rational& value) const {
    MPoly r(ring_);
    for (auto& [e, c] : terms_) {
      Rational k = c;
      for (int j = 0; j < e[var]; ++j) k *= value;
      Exponents ne(e);
      ne[var] = 0;
      r.add_term(ne, k);
    }
    return r;
  }

  /// Drop a variable that no longer occurs (it must have exponent 0 everywhere).
  MPoly dropped_var(int var, const RingPtr& target) const {
    MPoly r(target);
    for (auto& [e, c] : terms_) {
      if (e[var] != 0) throw std::logic_error("MPoly::dropped_var: variable still occurs");
      Exponents ne;
      ne.reserve(e.size() - 1);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (static_cast<int>(i) != var) ne.push_back(e[i]);
      r.add_term(ne, c);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading term first.
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
      std::string mono = monomial_string(e);
      if (mono.empty()) {
        os << a.to_string();
      } else if (a.is_one()) {
        os << mono;
      } else {
        os << a.to_string() << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  std::string monomial_string(const Exponents& e) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      os << ring_->vars[i];
      if (e[i] != 1) os << "^" << e[i];
      any = true;
    }
    return os.str();
  }

  RingPtr ring_;
  TermMap terms_;
};

namespace detail {

/// View of p as a univariate polynomial in variable `var`, coefficients in
/// the remaining variables (stored with exponent 0 in `var`).
inline std::map<int, MPoly> univariate_view(const MPoly& p, int var) {
  std::map<int, MPoly> coeffs;
  for (auto& [e, c] : p.terms()) {
    Exponents ne(e);
    int d = ne[var];
    ne[var] = 0;
    auto it = coeffs.find(d);
    if (it == coeffs.end()) it = coeffs.emplace(d, MPoly(p.ring())).first;
    it->second.add_term(ne, c);
  }
  return coeffs;
}

inline MPoly from_univariate(const std::map<int, MPoly>& coeffs, int var, const RingPtr& ring) {
  MPoly p(ring);
  for (auto& [d, c] : coeffs) {
    Exponents shift(ring->size(), 0);
    shift[var] = d;
    p += c.mul_term(shift, Rational(1));
  }
  return p;
}

inline MPoly univariate_lc(const MPoly& p, int var) {
  auto view = univariate_view(p, var);
  if (view.empty()) return MPoly(p.ring());
  return view.rbegin()->second;
}

/// Pseudo-remainder of a by b in variable `var`: lc(b)^(da-db+1) * a mod b.
inline MPoly pseudo_remainder(const MPoly& a, const MPoly& b, int var) {
  int da = a.degree_in(var), db = b.degree_in(var);
  if (db < 0) throw std::domain_error("pseudo_remainder: zero divisor");
  if (da < db) return a;
  MPoly lc_b = univariate_lc(b, var);
  MPoly rem = a;
  int steps = da - db + 1;
  for (int i = 0; i < steps && rem.degree_in(var) >= db; ++i) {
    auto rv = univariate_view(rem, var);
    int dr = rv.rbegin()->first;
    MPoly lc_r = rv.rbegin()->second;
    Exponents shift(rem.ring()->size(), 0);
    shift[var] = dr - db;
    rem = rem * lc_b - b.mul_term(shift, Rational(1)) * lc_r;
  }
  return rem;
}

}  // namespace detail

MPoly gcd_mpoly(const MPoly& p, const MPoly& q);

namespace detail {

inline MPoly content_in(const MPoly& p, int var) {
  auto view = univariate_view(p, var);
  MPoly c(p.ring());
  for (auto& [d, coeff] : view) c = gcd_mpoly(c, coeff);
  return c;
}

}  // namespace detail

/// Greatest common divisor by recursive primitive-part PRS: treat both
/// polynomials as univariate in the highest occurring variable over the ring
/// in the remaining ones. The result is normalized (coprime integer
/// coefficients, positive leading coefficient); gcd(p, 0) = normalized p.
inline MPoly gcd_mpoly(const MPoly& p, const MPoly& q) {
  require_same_ring(p.ring(), q.ring());
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();
  if (p.is_constant() || q.is_constant()) return MPoly(p.ring(), Rational(1));

  int var = -1;
  for (int i = static_cast<int>(p.ring()->size()) - 1; i >= 0; --i) {
    if (p.degree_in(i) > 0 || q.degree_in(i) > 0) {
      var = i;
      break;
    }
  }
  if (var < 0) return MPoly(p.ring(), Rational(1));

  MPoly cont_p = detail::content_in(p, var);
  MPoly cont_q = detail::content_in(q, var);
  MPoly pp_p = *MPoly::divide_exact(p, cont_p);
  MPoly pp_q = *MPoly::divide_exact(q, cont_q);
  MPoly cont_gcd = gcd_mpoly(cont_p, cont_q);

  MPoly a = pp_p, b = pp_q;
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  MPoly result(p.ring());
  while (true) {
    MPoly r = detail::pseudo_remainder(a, b, var);
    if (r.is_zero()) {
      MPoly cont_b = detail::content_in(b, var);
      result = *MPoly::divide_exact(b, cont_b);
      break;
    }
    if (r.degree_in(var) == 0) {
      result = MPoly(p.ring(), Rational(1));
      break;
    }
    a = b;
    MPoly cont_r = detail::content_in(r, var);
    b = *MPoly::divide_exact(r, cont_r);
  }
  return (cont_gcd * result).normalized();
}

inline MPoly lcm_mpoly(const MPoly& p, const MPoly& q) {
  if (p.is_zero() || q.is_zero()) return MPoly(p.ring());
  return (*MPoly::divide_exact(p * q, gcd_mpoly(p, q))).normalized();
}

}  // namespace contig
