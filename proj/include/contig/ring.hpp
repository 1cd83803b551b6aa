#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace contig {

/// An ordered list of variable names. Polynomials carry a shared handle to
/// their ring; operations require both operands to live in the same ring.
struct Ring {
  std::vector<std::string> vars;

  std::size_t size() const { return vars.size(); }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const Ring& o) const { return vars == o.vars; }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const Ring>(Ring{std::move(vars)});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("operands live in different rings");
}

/// Parameter names follow the model shape: a single polynomial gets plain
/// "s"/"nu", otherwise "s1",... / "nu1",...
inline std::vector<std::string> parameter_names(int l, int n) {
  std::vector<std::string> names;
  if (l == 1) {
    names.push_back("s");
  } else {
    for (int i = 1; i <= l; ++i) names.push_back("s" + std::to_string(i));
  }
  if (n == 1) {
    names.push_back("nu");
  } else {
    for (int j = 1; j <= n; ++j) names.push_back("nu" + std::to_string(j));
  }
  return names;
}

/// K = Q(s, nu): the coefficient field of all exact matrices.
inline RingPtr parameter_ring(int l, int n) { return make_ring(parameter_names(l, n)); }

/// Same with the degeneration parameter appended as the last variable.
inline RingPtr parameter_ring_delta(int l, int n) {
  auto names = parameter_names(l, n);
  names.push_back("delta");
  return make_ring(std::move(names));
}

}  // namespace contig
