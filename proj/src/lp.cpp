#include "isa/lp.hpp"

#include <stdexcept>

namespace isa {

std::optional<RatVector> lp_feasible(const RationalMatrix& eq, const RatVector& rhs) {
  if (static_cast<int>(rhs.size()) != eq.rows())
    throw std::invalid_argument("lp_feasible: rhs length must equal row count");
  const int n = eq.cols();

  // Row-reduce [eq | rhs] first: redundant constraints vanish and an
  // inconsistent equality system is detected before any pivoting.
  const int sentinel = n;
  RrefBuilder builder(n + 1);
  for (int i = 0; i < eq.rows(); ++i) {
    SparseRow row = to_sparse(eq.row(i));
    if (!rhs[i].is_zero()) row.emplace_back(sentinel, rhs[i]);
    builder.insert(std::move(row));
  }
  if (builder.has_pivot(sentinel)) return std::nullopt;

  std::vector<RatVector> a;
  RatVector b;
  for (const auto& row : builder.rows_sorted()) {
    RatVector dense(n);
    Rational r;
    for (const auto& [c, x] : row) {
      if (c == sentinel)
        r = x;
      else
        dense[c] = x;
    }
    if (r.sign() < 0) {
      for (auto& x : dense) x = -x;
      r = -r;
    }
    a.push_back(std::move(dense));
    b.push_back(std::move(r));
  }
  const int m = static_cast<int>(a.size());
  if (m == 0) return RatVector(n);

  // Phase 1: minimize the sum of artificial variables over
  //   a x + I art = b,  x >= 0, art >= 0, b >= 0.
  const int total = n + m;
  std::vector<RatVector> t(m, RatVector(total + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][total] = b[i];
    basis[i] = n + i;
  }

  auto cost = [&](int j) { return j >= n ? Rational(1) : Rational(0); };

  for (;;) {
    // Reduced costs d_j = c_j - sum_i c_{basis i} t[i][j]; Bland: enter the
    // lowest-index column with d_j < 0.
    int enter = -1;
    for (int j = 0; j < total && enter < 0; ++j) {
      Rational d = cost(j);
      for (int i = 0; i < m; ++i)
        if (basis[i] >= n && !t[i][j].is_zero()) d -= t[i][j];
      if (d.sign() < 0) enter = j;
    }
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rational ratio = t[i][total] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) throw std::logic_error("lp_feasible: unbounded phase-1 objective");

    const Rational piv = t[leave][enter];
    if (!piv.is_one()) {
      const Rational inv = piv.inverse();
      for (auto& x : t[leave]) x *= inv;
    }
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j <= total; ++j)
        if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rational objective;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n) objective += t[i][total];
  if (!objective.is_zero()) return std::nullopt;

  RatVector x(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][total];
  return x;
}

}  // namespace isa
