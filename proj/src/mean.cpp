#include "isa/mean.hpp"

#include "isa/lp.hpp"

namespace isa {

namespace {

// Coefficients of sum_{t : s t = u} mu(t) - mu(u) (left) or the
// transposed-product version (right).
RatVector invariance_row(const FiniteInverseSemigroup& sg, MeanSide side, int s, int u) {
  RatVector row(sg.order);
  for (int t = 0; t < sg.order; ++t) {
    int p = side == MeanSide::Left ? sg.table[s][t] : sg.table[t][s];
    if (p == u) row[t] += 1;
  }
  row[u] -= 1;
  return row;
}

}  // namespace

std::optional<MeanCertificate> find_invariant_mean(const FiniteInverseSemigroup& s,
                                                   MeanSide side) {
  const int n = s.order;
  std::vector<RatVector> rows;
  rows.emplace_back(n, Rational(1));  // normalization
  RatVector rhs{Rational(1)};
  auto add_side = [&](MeanSide one) {
    for (int a = 0; a < n; ++a)
      for (int u = 0; u < n; ++u) {
        RatVector row = invariance_row(s, one, a, u);
        bool zero = true;
        for (const auto& x : row) zero = zero && x.is_zero();
        if (zero) continue;
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
      }
  };
  if (side != MeanSide::Right) add_side(MeanSide::Left);
  if (side != MeanSide::Left) add_side(MeanSide::Right);

  RationalMatrix eq(static_cast<int>(rows.size()), n);
  for (int i = 0; i < eq.rows(); ++i)
    for (int j = 0; j < n; ++j) eq.at(i, j) = rows[i][j];
  auto x = lp_feasible(eq, rhs);
  if (!x) return std::nullopt;
  return MeanCertificate{std::move(*x)};
}

std::vector<MeanViolation> verify_mean(const FiniteInverseSemigroup& s, const RatVector& mu,
                                       MeanSide side) {
  if (static_cast<int>(mu.size()) != s.order)
    throw std::invalid_argument("verify_mean: vector length does not match the order");
  std::vector<MeanViolation> out;
  for (int i = 0; i < s.order; ++i)
    if (mu[i].sign() < 0)
      out.push_back({MeanViolation::Kind::Negative, side, i, -1, mu[i]});
  Rational total;
  for (const auto& x : mu) total += x;
  if (total != Rational(1))
    out.push_back({MeanViolation::Kind::Normalization, side, -1, -1, total - Rational(1)});
  auto check_side = [&](MeanSide one) {
    for (int a = 0; a < s.order; ++a)
      for (int u = 0; u < s.order; ++u) {
        Rational r;
        for (int t = 0; t < s.order; ++t) {
          int p = one == MeanSide::Left ? s.table[a][t] : s.table[t][a];
          if (p == u) r += mu[t];
        }
        r -= mu[u];
        if (!r.is_zero())
          out.push_back({MeanViolation::Kind::Invariance, one, a, u, r});
      }
  };
  if (side != MeanSide::Right) check_side(MeanSide::Left);
  if (side != MeanSide::Left) check_side(MeanSide::Right);
  return out;
}

}  // namespace isa
