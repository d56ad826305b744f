#include "isa/diagonals.hpp"

#include <algorithm>
#include <map>

namespace isa {

namespace {

struct ProductTables {
  // pre_left[a][u] = {s : a s = u}, pre_right[a][v] = {t : t a = v},
  // cells_by_product[v] = {(s, t) : s t = v} as flat tensor indices.
  std::vector<std::vector<std::vector<int>>> pre_left, pre_right;
  std::vector<std::vector<int>> cells_by_product;

  explicit ProductTables(const FiniteInverseSemigroup& s) {
    const int n = s.order;
    pre_left.assign(n, std::vector<std::vector<int>>(n));
    pre_right.assign(n, std::vector<std::vector<int>>(n));
    cells_by_product.assign(n, {});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        pre_left[a][s.table[a][b]].push_back(b);
        pre_right[b][s.table[a][b]].push_back(a);
        cells_by_product[s.table[a][b]].push_back(a * n + b);
      }
  }
};

SparseRow make_row(std::map<int, Rational>& acc) {
  SparseRow row;
  row.reserve(acc.size());
  for (auto& [c, v] : acc)
    if (!v.is_zero()) row.emplace_back(c, std::move(v));
  acc.clear();
  return row;
}

// Stacks the classical system into the builder; the last column is the
// right-hand side.
void build_classical_system(const FiniteInverseSemigroup& s, bool two_sided, RrefBuilder& b) {
  const int n = s.order;
  const int sentinel = n * n;
  ProductTables tab(s);
  std::map<int, Rational> acc;

  // a.M - M.a = 0, coordinatewise over (u, v).
  for (int a = 0; a < n; ++a)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        for (int x : tab.pre_left[a][u]) acc[x * n + v] += 1;
        for (int t : tab.pre_right[a][v]) acc[u * n + t] -= 1;
        b.insert(make_row(acc));
      }

  // omega(M) * delta_a = delta_a (and the mirrored family when two-sided).
  for (int a = 0; a < n; ++a)
    for (int r = 0; r < n; ++r) {
      for (int v : tab.pre_right[a][r])
        for (int cell : tab.cells_by_product[v]) acc[cell] += 1;
      if (r == a) acc[sentinel] += 1;
      b.insert(make_row(acc));
      if (!two_sided) continue;
      for (int v : tab.pre_left[a][r])
        for (int cell : tab.cells_by_product[v]) acc[cell] += 1;
      if (r == a) acc[sentinel] += 1;
      b.insert(make_row(acc));
    }
}

void build_module_system(const FiniteInverseSemigroup& s, const IdealData& ideals,
                         RrefBuilder& b) {
  const int n = s.order;
  const int sentinel = n * n;
  std::map<int, Rational> acc;

  // <M, s.f - f.s> = 0 for f in the I-perp basis:
  //   sum_{t,t'} M(t,t') (f(t, t' a) - f(a t, t')) = 0.
  const RationalMatrix& fper = ideals.i_perp.basis();
  for (int a = 0; a < n; ++a)
    for (int fi = 0; fi < fper.rows(); ++fi) {
      for (int t = 0; t < n; ++t)
        for (int tp = 0; tp < n; ++tp) {
          const Rational& right = fper.at(fi, t * n + s.table[tp][a]);
          const Rational& left = fper.at(fi, s.table[a][t] * n + tp);
          if (right != left) acc[t * n + tp] += right - left;
        }
      b.insert(make_row(acc));
    }

  // <M, s.(omega^*(h))> = h(s) for h in the J-perp basis:
  //   sum_{t,t'} M(t,t') h(t t' a) = h(a).
  const RationalMatrix& hper = ideals.j_perp.basis();
  for (int a = 0; a < n; ++a)
    for (int hi = 0; hi < hper.rows(); ++hi) {
      for (int t = 0; t < n; ++t)
        for (int tp = 0; tp < n; ++tp) {
          const Rational& c = hper.at(hi, s.table[s.table[t][tp]][a]);
          if (!c.is_zero()) acc[t * n + tp] += c;
        }
      acc[sentinel] += hper.at(hi, a);
      b.insert(make_row(acc));
    }
}

std::optional<RatVector> particular_solution(const RrefBuilder& b, int unknowns) {
  const int sentinel = unknowns;
  if (b.has_pivot(sentinel)) return std::nullopt;
  RatVector x(unknowns);
  for (int p : b.pivot_cols_sorted()) x[p] = b.entry(p, sentinel);
  return x;
}

}  // namespace

std::vector<DiagonalViolation> verify_classical_diagonal(const FiniteInverseSemigroup& s,
                                                         const RatVector& m, bool two_sided) {
  const int n = s.order;
  if (static_cast<int>(m.size()) != n * n)
    throw std::invalid_argument("verify_classical_diagonal: length must be order^2");
  std::vector<DiagonalViolation> out;
  TensorSquare ts(s);
  for (int a = 0; a < n; ++a) {
    RatVector left_image = ts.act_left(a, m);
    RatVector right_image = ts.act_right(m, a);
    for (int k = 0; k < n * n; ++k) {
      Rational r = left_image[k] - right_image[k];
      if (!r.is_zero()) out.push_back({"commutator", a, k / n, k % n, r});
    }
  }
  RatVector w = omega_apply(s, m);
  for (int a = 0; a < n; ++a) {
    RatVector lhs(n);
    for (int v = 0; v < n; ++v)
      if (!w[v].is_zero()) lhs[s.table[v][a]] += w[v];
    for (int r = 0; r < n; ++r) {
      Rational res = lhs[r] - Rational(r == a ? 1 : 0);
      if (!res.is_zero()) out.push_back({"unit-left", a, r, -1, res});
    }
    if (!two_sided) continue;
    RatVector rhs(n);
    for (int v = 0; v < n; ++v)
      if (!w[v].is_zero()) rhs[s.table[a][v]] += w[v];
    for (int r = 0; r < n; ++r) {
      Rational res = rhs[r] - Rational(r == a ? 1 : 0);
      if (!res.is_zero()) out.push_back({"unit-right", a, r, -1, res});
    }
  }
  return out;
}

std::vector<DiagonalViolation> verify_module_diagonal(const FiniteInverseSemigroup& s,
                                                      const IdealData& ideals,
                                                      const RatVector& m) {
  const int n = s.order;
  if (static_cast<int>(m.size()) != n * n)
    throw std::invalid_argument("verify_module_diagonal: length must be order^2");
  std::vector<DiagonalViolation> out;
  const RationalMatrix& fper = ideals.i_perp.basis();
  for (int a = 0; a < n; ++a)
    for (int fi = 0; fi < fper.rows(); ++fi) {
      Rational r;
      for (int k = 0; k < n * n; ++k) {
        if (m[k].is_zero()) continue;
        const int t = k / n, tp = k % n;
        r += m[k] * (fper.at(fi, t * n + s.table[tp][a]) - fper.at(fi, s.table[a][t] * n + tp));
      }
      if (!r.is_zero()) out.push_back({"annihilator", a, fi, -1, r});
    }
  const RationalMatrix& hper = ideals.j_perp.basis();
  for (int a = 0; a < n; ++a)
    for (int hi = 0; hi < hper.rows(); ++hi) {
      Rational r = -hper.at(hi, a);
      for (int k = 0; k < n * n; ++k) {
        if (m[k].is_zero()) continue;
        r += m[k] * hper.at(hi, s.table[s.table[k / n][k % n]][a]);
      }
      if (!r.is_zero()) out.push_back({"omega-unit", a, hi, -1, r});
    }
  return out;
}

std::optional<DiagonalCertificate> find_classical_diagonal(const FiniteInverseSemigroup& s,
                                                           bool two_sided) {
  const int n2 = s.order * s.order;
  RrefBuilder b(n2 + 1);
  build_classical_system(s, two_sided, b);
  auto x = particular_solution(b, n2);
  if (!x) return std::nullopt;
  DiagonalCertificate cert{DiagonalKind::Classical, std::move(*x), {}};
  cert.residual_report = verify_classical_diagonal(s, cert.m, two_sided);
  if (!cert.residual_report.empty())
    throw std::logic_error("find_classical_diagonal: solver witness failed verification");
  return cert;
}

std::optional<DiagonalCertificate> find_module_diagonal(const FiniteInverseSemigroup& s,
                                                        const IdealData& ideals) {
  const int n2 = s.order * s.order;
  RrefBuilder b(n2 + 1);
  build_module_system(s, ideals, b);
  auto x = particular_solution(b, n2);
  if (!x) return std::nullopt;
  DiagonalCertificate cert{DiagonalKind::Module, std::move(*x), {}};
  cert.residual_report = verify_module_diagonal(s, ideals, cert.m);
  if (!cert.residual_report.empty())
    throw std::logic_error("find_module_diagonal: solver witness failed verification");
  return cert;
}

std::optional<DiagonalCertificate> find_module_diagonal(const FiniteInverseSemigroup& s) {
  return find_module_diagonal(s, ideal_I(s));
}

std::optional<int> classical_solution_dimension(const FiniteInverseSemigroup& s,
                                                bool two_sided) {
  const int n2 = s.order * s.order;
  RrefBuilder b(n2 + 1);
  build_classical_system(s, two_sided, b);
  if (b.has_pivot(n2)) return std::nullopt;
  return n2 - b.rank();
}

std::optional<int> module_solution_dimension(const FiniteInverseSemigroup& s) {
  const int n2 = s.order * s.order;
  RrefBuilder b(n2 + 1);
  build_module_system(s, ideal_I(s), b);
  if (b.has_pivot(n2)) return std::nullopt;
  return n2 - b.rank();
}

DiagonalCertificate diagonal_from_mean(const FiniteInverseSemigroup& s,
                                       const MeanCertificate& mean) {
  auto right = verify_mean(s, mean.mu, MeanSide::Right);
  if (!right.empty())
    throw std::invalid_argument("diagonal_from_mean: mean is not right-invariant");
  const int n = s.order;
  DiagonalCertificate cert{DiagonalKind::Module, RatVector(n * n), {}};
  for (int t = 0; t < n; ++t)
    if (!mean.mu[t].is_zero()) cert.m[s.star[t] * n + t] += mean.mu[t];

  Rational total;  // <M, 1 (x) 1>
  for (const auto& v : cert.m) total += v;
  cert.residual_report = verify_module_diagonal(s, ideal_I(s), cert.m);
  if (total != Rational(1))
    cert.residual_report.push_back({"normalization", -1, -1, -1, total - Rational(1)});
  if (!cert.residual_report.empty())
    throw DiagonalError(DiagonalError::Kind::ConstructionFailed,
                        "mean-to-diagonal construction produced nonzero residuals",
                        cert.residual_report);
  return cert;
}

DiagonalCertificate pushforward_diagonal(const FiniteInverseSemigroup& s, const GroupImage& g,
                                         const RatVector& m) {
  const int n = s.order;
  if (static_cast<int>(m.size()) != n * n)
    throw std::invalid_argument("pushforward_diagonal: length must be order^2");
  const int k = g.order();
  DiagonalCertificate cert{DiagonalKind::Classical, RatVector(k * k), {}};
  for (int idx = 0; idx < n * n; ++idx)
    if (!m[idx].is_zero()) cert.m[g.pi(idx / n) * k + g.pi(idx % n)] += m[idx];
  FiniteInverseSemigroup group = g.as_semigroup(s.name + "_quotient");
  cert.residual_report = verify_classical_diagonal(group, cert.m);
  if (!cert.residual_report.empty())
    throw DiagonalError(DiagonalError::Kind::PushforwardInvalid,
                        "pushforward failed classical verification", cert.residual_report);
  return cert;
}

}  // namespace isa
