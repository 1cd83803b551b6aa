#pragma once

#include <complex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "contig/diffring.hpp"
#include "contig/ratfun.hpp"

namespace contig {

class SupportEscapeError : public std::runtime_error {
 public:
  explicit SupportEscapeError(const std::string& mono)
      : std::runtime_error("element support escapes the column set at " + mono) {}
};

class SingularPivotError : public std::runtime_error {
 public:
  SingularPivotError()
      : std::runtime_error("singular pivot block: the chosen B is not a basis over K") {}
};

/// Dense matrix over K with optional monomial column labels.
struct MatK {
  RingPtr ring;
  std::vector<std::vector<RatFun>> rows;
  MonomialSet col_labels;  // may be empty when columns are anonymous

  MatK() = default;
  MatK(RingPtr r, int nrows, int ncols)
      : ring(std::move(r)), rows(nrows, std::vector<RatFun>(ncols, RatFun(ring))) {}

  int nrows() const { return static_cast<int>(rows.size()); }
  int ncols() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }

  RatFun& at(int i, int j) { return rows[i][j]; }
  const RatFun& at(int i, int j) const { return rows[i][j]; }

  static MatK identity(const RingPtr& ring, int n) {
    MatK m(ring, n, n);
    for (int i = 0; i < n; ++i) m.rows[i][i] = RatFun(ring, Rational(1));
    return m;
  }

  MatK transposed() const {
    MatK t(ring, ncols(), nrows());
    for (int i = 0; i < nrows(); ++i)
      for (int j = 0; j < ncols(); ++j) t.rows[j][i] = rows[i][j];
    return t;
  }

  MatK submatrix_cols(int begin, int end) const {
    MatK m(ring, nrows(), end - begin);
    for (int i = 0; i < nrows(); ++i)
      for (int j = begin; j < end; ++j) m.rows[i][j - begin] = rows[i][j];
    return m;
  }

  /// Entrywise parameter shift (matrix evaluated at shifted arguments).
  MatK shifted(const std::vector<int>& amounts) const {
    MatK m = *this;
    for (auto& row : m.rows)
      for (auto& v : row) v = v.shifted(amounts);
    return m;
  }

  std::vector<std::vector<std::complex<double>>> evaluate(
      const std::vector<std::complex<double>>& point) const {
    std::vector<std::vector<std::complex<double>>> out(nrows());
    for (int i = 0; i < nrows(); ++i) {
      out[i].resize(ncols());
      for (int j = 0; j < ncols(); ++j) out[i][j] = rows[i][j].evaluate(point);
    }
    return out;
  }

  friend bool operator==(const MatK& a, const MatK& b) { return a.rows == b.rows; }

  /// Text format: header of column labels, then tab-separated canonical
  /// entries, one row per line.
  std::string to_text() const {
    std::ostringstream os;
    if (col_labels.size() > 0) {
      for (int j = 0; j < col_labels.size(); ++j) {
        if (j) os << "\t";
        os << col_labels[j].to_string(ring);
      }
      os << "\n";
    }
    for (int i = 0; i < nrows(); ++i) {
      for (int j = 0; j < ncols(); ++j) {
        if (j) os << "\t";
        os << rows[i][j].to_string();
      }
      os << "\n";
    }
    return os.str();
  }
};

inline MatK operator*(const MatK& a, const MatK& b) {
  if (a.ncols() != b.nrows()) throw std::invalid_argument("MatK: shape mismatch");
  MatK c(a.ring, a.nrows(), b.ncols());
  for (int i = 0; i < a.nrows(); ++i)
    for (int k = 0; k < a.ncols(); ++k) {
      if (a.rows[i][k].is_zero()) continue;
      for (int j = 0; j < b.ncols(); ++j) {
        if (b.rows[k][j].is_zero()) continue;
        c.rows[i][j] += a.rows[i][k] * b.rows[k][j];
      }
    }
  return c;
}

/// Row i holds the coefficients of element i on the given columns. An
/// element whose support is not covered raises SupportEscapeError.
inline MatK build_matrix(const std::vector<DiffElement>& elements, const MonomialSet& columns,
                         const RingPtr& ring) {
  MatK m(ring, static_cast<int>(elements.size()), columns.size());
  m.col_labels = columns;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (auto& [mono, c] : elements[i].terms()) {
      int j = columns.index_of(mono);
      if (j < 0) throw SupportEscapeError(mono.to_string(ring));
      m.rows[i][j] = c;
    }
  }
  return m;
}

namespace detail {

/// Pivot preference: low total degree, then few terms, then column order.
inline long pivot_weight(const RatFun& v) {
  long deg = std::max(v.num().degree(), 0) + std::max(v.den().degree(), 0);
  long terms = static_cast<long>(v.num().term_count() + v.den().term_count());
  return (deg << 20) + terms;
}

struct Elimination {
  std::vector<std::vector<RatFun>> m;
  std::vector<int> pivot_cols;  // one per eliminated row, in elimination order
  std::vector<int> pivot_rows;
};

/// In-place fraction Gaussian elimination. Returns pivot structure; the
/// matrix ends in (unnormalized) echelon form with zeroed-out lower parts.
inline Elimination eliminate(std::vector<std::vector<RatFun>> m) {
  Elimination e;
  if (m.empty()) return {std::move(m), {}, {}};
  const int nr = static_cast<int>(m.size());
  const int nc = static_cast<int>(m.front().size());
  std::vector<bool> row_done(nr, false);
  std::vector<bool> col_done(nc, false);

  while (true) {
    int best_r = -1, best_c = -1;
    long best_w = 0;
    for (int j = 0; j < nc; ++j) {
      if (col_done[j]) continue;
      for (int i = 0; i < nr; ++i) {
        if (row_done[i] || m[i][j].is_zero()) continue;
        long w = pivot_weight(m[i][j]);
        if (best_r < 0 || w < best_w) {
          best_r = i;
          best_c = j;
          best_w = w;
        }
      }
    }
    if (best_r < 0) break;
    row_done[best_r] = true;
    col_done[best_c] = true;
    e.pivot_rows.push_back(best_r);
    e.pivot_cols.push_back(best_c);
    const RatFun piv = m[best_r][best_c];
    for (int i = 0; i < nr; ++i) {
      if (i == best_r || m[i][best_c].is_zero()) continue;
      RatFun factor = m[i][best_c] / piv;
      for (int j = 0; j < nc; ++j) {
        if (m[best_r][j].is_zero()) continue;
        m[i][j] -= factor * m[best_r][j];
      }
      m[i][best_c] = RatFun(m[i][best_c].ring());  // exact zero by construction
    }
  }
  e.m = std::move(m);
  return e;
}

}  // namespace detail

/// Exact rank over K.
inline int rank(const MatK& m) {
  return static_cast<int>(detail::eliminate(m.rows).pivot_cols.size());
}

/// Fraction-free Bareiss elimination on denominator-cleared rows; used as an
/// independent route for the rank.
inline int rank_bareiss(const MatK& m) {
  if (m.nrows() == 0 || m.ncols() == 0) return 0;
  const RingPtr& R = m.ring;
  std::vector<std::vector<MPoly>> a(m.nrows(), std::vector<MPoly>(m.ncols(), MPoly(R)));
  for (int i = 0; i < m.nrows(); ++i) {
    MPoly common(R, Rational(1));
    for (int j = 0; j < m.ncols(); ++j) common = lcm_mpoly(common, m.rows[i][j].den());
    for (int j = 0; j < m.ncols(); ++j)
      a[i][j] = m.rows[i][j].num() * *MPoly::divide_exact(common, m.rows[i][j].den());
  }
  const int nr = m.nrows(), nc = m.ncols();
  MPoly prev(R, Rational(1));
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < nr; ++i) {
      for (int j = c + 1; j < nc; ++j) {
        MPoly t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = *MPoly::divide_exact(t, prev);
      }
      a[i][c] = MPoly(R);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Basis of the left nullspace {v : v m = 0}; each row scaled so its first
/// nonzero entry is 1.
inline MatK cokernel(const MatK& m) {
  const int nr = m.nrows();
  const RingPtr& R = m.ring;
  // Augment with the identity and eliminate only on the m-columns.
  std::vector<std::vector<RatFun>> aug(nr, std::vector<RatFun>(m.ncols() + nr, RatFun(R)));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < m.ncols(); ++j) aug[i][j] = m.rows[i][j];
    aug[i][m.ncols() + i] = RatFun(R, Rational(1));
  }

  const int nc = m.ncols();
  std::vector<bool> row_done(nr, false);
  std::vector<bool> col_done(nc, false);
  while (true) {
    int best_r = -1, best_c = -1;
    long best_w = 0;
    for (int j = 0; j < nc; ++j) {
      if (col_done[j]) continue;
      for (int i = 0; i < nr; ++i) {
        if (row_done[i] || aug[i][j].is_zero()) continue;
        long w = detail::pivot_weight(aug[i][j]);
        if (best_r < 0 || w < best_w) {
          best_r = i;
          best_c = j;
          best_w = w;
        }
      }
    }
    if (best_r < 0) break;
    row_done[best_r] = true;
    col_done[best_c] = true;
    const RatFun piv = aug[best_r][best_c];
    for (int i = 0; i < nr; ++i) {
      if (i == best_r || aug[i][best_c].is_zero()) continue;
      RatFun factor = aug[i][best_c] / piv;
      for (int j = 0; j < nc + nr; ++j) {
        if (aug[best_r][j].is_zero()) continue;
        aug[i][j] -= factor * aug[best_r][j];
      }
      aug[i][best_c] = RatFun(R);
    }
  }

  MatK out(R, 0, 0);
  for (int i = 0; i < nr; ++i) {
    if (row_done[i]) continue;  // pivot rows span the row space, not the kernel
    bool zero = true;
    for (int j = 0; j < nc; ++j)
      if (!aug[i][j].is_zero()) zero = false;
    if (!zero) continue;
    std::vector<RatFun> v(aug[i].begin() + nc, aug[i].end());
    RatFun lead(R);
    for (auto& x : v)
      if (!x.is_zero()) {
        lead = x;
        break;
      }
    for (auto& x : v) x = x / lead;
    out.rows.push_back(std::move(v));
  }
  if (out.nrows() == 0) out = MatK(R, 0, nr);
  return out;
}

/// Select the first maximal independent set of rows (in stored order),
/// then left-multiply by the inverse of their pivot block: the first
/// `pivot_width` columns of the result carry an exact identity block.
inline MatK normalize_rows(const MatK& m, int pivot_width) {
  const RingPtr& R = m.ring;
  // Greedy independence test on the full rows.
  std::vector<int> chosen;
  std::vector<std::vector<RatFun>> ech;  // reduced copies of chosen rows
  std::vector<int> lead_cols;
  for (int i = 0; i < m.nrows(); ++i) {
    std::vector<RatFun> r = m.rows[i];
    for (std::size_t t = 0; t < ech.size(); ++t) {
      int lc = lead_cols[t];
      if (r[lc].is_zero()) continue;
      RatFun f = r[lc] / ech[t][lc];
      for (int j = 0; j < m.ncols(); ++j)
        if (!ech[t][j].is_zero()) r[j] -= f * ech[t][j];
      r[lc] = RatFun(R);
    }
    int lc = -1;
    for (int j = 0; j < m.ncols(); ++j)
      if (!r[j].is_zero()) {
        lc = j;
        break;
      }
    if (lc < 0) continue;
    chosen.push_back(i);
    ech.push_back(std::move(r));
    lead_cols.push_back(lc);
  }

  const int rk = static_cast<int>(chosen.size());
  if (rk != pivot_width) throw SingularPivotError();

  // Gauss-Jordan on [P | full rows] where P is the pivot block.
  std::vector<std::vector<RatFun>> aug(rk, std::vector<RatFun>(pivot_width + m.ncols(), RatFun(R)));
  for (int i = 0; i < rk; ++i) {
    for (int j = 0; j < pivot_width; ++j) aug[i][j] = m.rows[chosen[i]][j];
    for (int j = 0; j < m.ncols(); ++j) aug[i][pivot_width + j] = m.rows[chosen[i]][j];
  }
  for (int c = 0; c < pivot_width; ++c) {
    int piv = -1;
    long best_w = 0;
    for (int i = c; i < rk; ++i) {
      if (aug[i][c].is_zero()) continue;
      long w = detail::pivot_weight(aug[i][c]);
      if (piv < 0 || w < best_w) {
        piv = i;
        best_w = w;
      }
    }
    if (piv < 0) throw SingularPivotError();
    std::swap(aug[c], aug[piv]);
    RatFun p = aug[c][c];
    for (int j = 0; j < pivot_width + m.ncols(); ++j)
      if (!aug[c][j].is_zero()) aug[c][j] /= p;
    for (int i = 0; i < rk; ++i) {
      if (i == c || aug[i][c].is_zero()) continue;
      RatFun f = aug[i][c];
      for (int j = 0; j < pivot_width + m.ncols(); ++j)
        if (!aug[c][j].is_zero()) aug[i][j] -= f * aug[c][j];
      aug[i][c] = RatFun(R);
    }
  }

  MatK out(R, rk, m.ncols());
  out.col_labels = m.col_labels;
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < m.ncols(); ++j) out.rows[i][j] = aug[i][pivot_width + j];
  return out;
}

/// Row spans over K coincide: every row of one reduces to zero against the
/// other, both ways.
inline bool row_space_equal(const MatK& a, const MatK& b) {
  if (a.ncols() != b.ncols()) return false;
  auto reduces_into = [](const MatK& x, const MatK& basis) {
    auto e = detail::eliminate(basis.rows);
    // Collect echelon rows with their pivot columns.
    std::vector<std::pair<int, const std::vector<RatFun>*>> piv;
    for (std::size_t t = 0; t < e.pivot_rows.size(); ++t)
      piv.emplace_back(e.pivot_cols[t], &e.m[e.pivot_rows[t]]);
    for (auto& row : x.rows) {
      std::vector<RatFun> r = row;
      for (auto& [pc, prow] : piv) {
        if (r[pc].is_zero()) continue;
        RatFun f = r[pc] / (*prow)[pc];
        for (std::size_t j = 0; j < r.size(); ++j)
          if (!(*prow)[j].is_zero()) r[j] -= f * (*prow)[j];
        r[pc] = RatFun(r[pc].ring());
      }
      for (auto& v : r)
        if (!v.is_zero()) return false;
    }
    return true;
  };
  return reduces_into(a, b) && reduces_into(b, a);
}

/// Exact inverse of a square matrix over K.
inline MatK inverse(const MatK& m) {
  if (m.nrows() != m.ncols()) throw std::invalid_argument("inverse: not square");
  const int n = m.nrows();
  const RingPtr& R = m.ring;
  std::vector<std::vector<RatFun>> aug(n, std::vector<RatFun>(2 * n, RatFun(R)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m.rows[i][j];
    aug[i][n + i] = RatFun(R, Rational(1));
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    long best_w = 0;
    for (int i = c; i < n; ++i) {
      if (aug[i][c].is_zero()) continue;
      long w = detail::pivot_weight(aug[i][c]);
      if (piv < 0 || w < best_w) {
        piv = i;
        best_w = w;
      }
    }
    if (piv < 0) throw SingularPivotError();
    std::swap(aug[c], aug[piv]);
    RatFun p = aug[c][c];
    for (int j = 0; j < 2 * n; ++j)
      if (!aug[c][j].is_zero()) aug[c][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == c || aug[i][c].is_zero()) continue;
      RatFun f = aug[i][c];
      for (int j = 0; j < 2 * n; ++j)
        if (!aug[c][j].is_zero()) aug[i][j] -= f * aug[c][j];
      aug[i][c] = RatFun(R);
    }
  }
  MatK out(R, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.rows[i][j] = aug[i][n + j];
  return out;
}

inline RatFun determinant(const MatK& m) {
  if (m.nrows() != m.ncols()) throw std::invalid_argument("determinant: not square");
  const int n = m.nrows();
  const RingPtr& R = m.ring;
  std::vector<std::vector<RatFun>> a = m.rows;
  RatFun det(R, Rational(1));
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return RatFun(R);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    RatFun p = a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      RatFun f = a[i][c] / p;
      for (int j = c; j < n; ++j)
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace contig
