#pragma once

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "contig/laurent.hpp"
#include "contig/ratfun.hpp"

namespace contig {

/// Laurent monomial in the shift operators: exponent vector over the l + n
/// directions (s-block first, then the nu-block).
struct DiffMonomial {
  std::vector<int> e;

  DiffMonomial() = default;
  explicit DiffMonomial(std::vector<int> exps) : e(std::move(exps)) {}
  DiffMonomial(std::vector<int> a, const std::vector<int>& b) : e(std::move(a)) {
    e.insert(e.end(), b.begin(), b.end());
  }
  static DiffMonomial unit(int dims) { return DiffMonomial(std::vector<int>(dims, 0)); }

  int dims() const { return static_cast<int>(e.size()); }
  int abs_degree() const {
    int d = 0;
    for (int x : e) d += std::abs(x);
    return d;
  }
  bool is_unit() const {
    for (int x : e)
      if (x != 0) return false;
    return true;
  }

  std::vector<int> s_part(int l) const { return {e.begin(), e.begin() + l}; }
  std::vector<int> nu_part(int l) const { return {e.begin() + l, e.end()}; }

  DiffMonomial translated(const std::vector<int>& c) const {
    DiffMonomial m(*this);
    for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += c[i];
    return m;
  }

  friend bool operator==(const DiffMonomial& a, const DiffMonomial& b) { return a.e == b.e; }
  friend bool operator!=(const DiffMonomial& a, const DiffMonomial& b) { return !(a == b); }

  std::string to_string(const RingPtr& param_ring) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      os << "σ" << param_ring->vars[i];
      if (e[i] != 1) os << "^" << e[i];
      any = true;
    }
    return any ? os.str() : "1";
  }
};

/// Graded order by total absolute degree, lexicographic tie-break.
struct DiffMonomialLess {
  bool operator()(const DiffMonomial& a, const DiffMonomial& b) const {
    int da = a.abs_degree(), db = b.abs_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
  }
};

/// Finite K-linear combination of difference monomials, kept normal-ordered:
/// coefficients stand to the left of the shift monomials.
class DiffElement {
 public:
  using TermMap = std::map<DiffMonomial, RatFun, DiffMonomialLess>;

  DiffElement() = default;
  explicit DiffElement(RingPtr param_ring) : ring_(std::move(param_ring)) {}

  static DiffElement monomial(const RingPtr& ring, const DiffMonomial& m,
                              const RatFun& coeff) {
    DiffElement e(ring);
    e.add_term(m, coeff);
    return e;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const DiffMonomial& m, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  DiffElement& operator+=(const DiffElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  DiffElement& operator-=(const DiffElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend DiffElement operator+(DiffElement a, const DiffElement& b) { return a += b; }
  friend DiffElement operator-(DiffElement a, const DiffElement& b) { return a -= b; }

  DiffElement scaled(const RatFun& c) const {
    DiffElement r(ring_);
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  friend bool operator==(const DiffElement& a, const DiffElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Left multiplication by the shift monomial sigma^c: each coefficient is
  /// shifted by c in the parameters, each monomial translated by c.
  DiffElement shifted_by(const std::vector<int>& c) const {
    DiffElement r(ring_);
    for (auto& [m, k] : terms_) r.terms_.emplace(m.translated(c), k.shifted(c));
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")*" << m.to_string(ring_);
    }
    return os.str();
  }

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// Left multiplication by a single generator sigma_dir^{+-1}.
inline DiffElement left_multiply(int dir, int sign, const DiffElement& e) {
  std::vector<int> c(e.ring()->size() /* l + n, delta never present here */, 0);
  if (dir < 0 || dir >= static_cast<int>(c.size()))
    throw std::out_of_range("left_multiply: direction");
  if (sign != 1 && sign != -1) throw std::invalid_argument("left_multiply: sign");
  c[dir] = sign;
  return e.shifted_by(c);
}

/// The l + n generators of the left ideal J. The first family is
/// 1 - sigma_{s_i} f_i(sigma_nu); the second family, normal-ordered, is
/// (nu_j - 1) sigma_{nu_j}^{-1} - sum_i s_i sigma_{s_i} (df_i/dx_j)(sigma_nu).
inline std::vector<DiffElement> j_generators(const ModelSpec& model, const RingPtr& K) {
  model.validate();
  const int l = model.l(), n = model.n();
  std::vector<DiffElement> gens;
  gens.reserve(l + n);

  for (int i = 0; i < l; ++i) {
    DiffElement g(K);
    g.add_term(DiffMonomial::unit(l + n), RatFun(K, Rational(1)));
    for (auto& [beta, c] : model.f[i].terms()) {
      std::vector<int> a(l, 0);
      a[i] = 1;
      g.add_term(DiffMonomial(a, beta), RatFun(K, -c));
    }
    gens.push_back(std::move(g));
  }

  for (int j = 0; j < n; ++j) {
    DiffElement g(K);
    std::vector<int> b(n, 0);
    b[j] = -1;
    MPoly nu_j = MPoly::variable(K, l + j);
    g.add_term(DiffMonomial(std::vector<int>(l, 0), b),
               RatFun(nu_j - MPoly(K, Rational(1))));
    for (int i = 0; i < l; ++i) {
      LaurentPoly df = model.f[i].derivative(j);
      MPoly s_i = MPoly::variable(K, i);
      for (auto& [beta, c] : df.terms()) {
        std::vector<int> a(l, 0);
        a[i] = 1;
        g.add_term(DiffMonomial(a, beta), RatFun(s_i.scaled(-c)));
      }
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

namespace detail {

inline void enumerate_shifts(int dims, int budget, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == dims) {
    out.push_back(cur);
    return;
  }
  for (int v = -budget; v <= budget; ++v) {
    cur.push_back(v);
    enumerate_shifts(dims, budget - std::abs(v), cur, out);
    cur.pop_back();
  }
}

/// All integer vectors with |c|_1 <= k, deterministic order, zero included.
inline std::vector<std::vector<int>> shift_vectors(int dims, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate_shifts(dims, k, cur, out);
  return out;
}

}  // namespace detail

/// Generators of S^{[k]}: the originals together with every element reached
/// by up to k successive single-direction left multiplications. The sigma's
/// commute, so these are exactly the shifts by vectors of 1-norm <= k.
/// Deduplication is syntactic (exact equality).
inline std::vector<DiffElement> plus_closure_step(const std::vector<DiffElement>& span, int k) {
  if (k < 1) throw std::invalid_argument("plus_closure_step: k >= 1 required");
  if (span.empty()) return {};
  const int dims = span.front().terms().empty()
                       ? static_cast<int>(span.front().ring()->size())
                       : span.front().terms().begin()->first.dims();
  std::vector<DiffElement> out;
  std::set<std::string> seen;
  for (auto& c : detail::shift_vectors(dims, k)) {
    for (auto& v : span) {
      DiffElement w = v.shifted_by(c);
      if (w.is_zero()) continue;
      std::string key = w.to_string();
      if (seen.insert(std::move(key)).second) out.push_back(std::move(w));
    }
  }
  return out;
}

/// Ordered set of distinct difference monomials. For the window E the
/// ordering is: columns outside B first (canonical order), then B in its own
/// order, so that the pivot block of the final normalization is a prefix.
struct MonomialSet {
  std::vector<DiffMonomial> items;

  int size() const { return static_cast<int>(items.size()); }
  const DiffMonomial& operator[](int i) const { return items[i]; }

  int index_of(const DiffMonomial& m) const {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i] == m) return static_cast<int>(i);
    return -1;
  }
  bool contains(const DiffMonomial& m) const { return index_of(m) >= 0; }
};

/// Which generator supports enter E. The definition takes all of them; the
/// paper's computed examples use only the supports of the first family
/// (1 - sigma_{s_i} f_i(sigma_nu)), which keeps the window free of the
/// inverse monomials sigma_{nu_j}^{-1}.
enum class EGenMode { AllGenerators, SigmaSFamily };

/// E = B, shifted copies sigma_alpha * B for every direction, and the chosen
/// generator supports. Columns outside B come first, in canonical order.
/// `l_take` limits the support union to the first l_take generators; pass the
/// model's l for EGenMode::SigmaSFamily (j_generators puts that family first).
inline MonomialSet build_E(const MonomialSet& B, const std::vector<DiffElement>& generators,
                           EGenMode mode = EGenMode::AllGenerators, int l_take = -1) {
  if (B.size() == 0) throw std::invalid_argument("build_E: empty basis");
  const int dims = B.items.front().dims();

  std::set<DiffMonomial, DiffMonomialLess> extra;
  auto add = [&](const DiffMonomial& m) {
    if (!B.contains(m)) extra.insert(m);
  };

  for (int d = 0; d < dims; ++d) {
    std::vector<int> c(dims, 0);
    c[d] = 1;
    for (auto& m : B.items) add(m.translated(c));
  }

  std::size_t take = generators.size();
  if (mode == EGenMode::SigmaSFamily) {
    if (l_take < 0 || l_take > static_cast<int>(generators.size()))
      throw std::invalid_argument("build_E: SigmaSFamily mode needs the model's l");
    take = static_cast<std::size_t>(l_take);
  }
  for (std::size_t gi = 0; gi < take; ++gi)
    for (auto& [m, c] : generators[gi].terms()) add(m);

  MonomialSet E;
  E.items.assign(extra.begin(), extra.end());
  E.items.insert(E.items.end(), B.items.begin(), B.items.end());
  return E;
}

}  // namespace contig
