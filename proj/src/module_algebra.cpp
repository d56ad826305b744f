#include "isa/module_algebra.hpp"

#include <algorithm>
#include <set>

namespace isa {

RatVector SemigroupAlgebra::multiply(const RatVector& x, const RatVector& y) const {
  RatVector out(dim());
  for (int a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim(); ++b)
      if (!y[b].is_zero()) out[s.table[a][b]] += x[a] * y[b];
  }
  return out;
}

SemigroupAlgebra build_algebra(const FiniteInverseSemigroup& s) {
  SemigroupAlgebra alg{s};
  const auto& t = s.table;
  for (int e : s.idempotents)
    for (int a = 0; a < s.order; ++a)
      for (int b = 0; b < s.order; ++b) {
        // alpha.(a b) = (alpha.a) b and (a b).alpha = a (b.alpha)
        if (t[a][b] != t[alg.module_left_index(e, a)][b] ||
            alg.module_right_index(t[a][b], e) != t[a][alg.module_right_index(b, e)])
          throw AlgebraError(AlgebraError::Kind::CompatibilityViolation,
                             "module action incompatible with the product", {e, a, b});
      }
  for (int e : s.idempotents)
    for (int f : s.idempotents) {
      // E is closed under the product, and (alpha beta).a = alpha.(beta.a),
      // a.(alpha beta) = (a.alpha).beta.
      int ef = t[e][f];
      if (t[ef][ef] != ef)
        throw AlgebraError(AlgebraError::Kind::CompatibilityViolation,
                           "idempotents are not closed under the product", {e, f});
      for (int a = 0; a < s.order; ++a) {
        if (alg.module_left_index(ef, a) != alg.module_left_index(e, alg.module_left_index(f, a)) ||
            alg.module_right_index(a, ef) !=
                alg.module_right_index(alg.module_right_index(a, e), f))
          throw AlgebraError(AlgebraError::Kind::CompatibilityViolation,
                             "module action is not multiplicative", {e, f, a});
        // (alpha.a).beta = alpha.(a.beta)
        if (alg.module_right_index(alg.module_left_index(e, a), f) !=
            alg.module_left_index(e, alg.module_right_index(a, f)))
          throw AlgebraError(AlgebraError::Kind::CompatibilityViolation,
                             "mixed action compatibility fails", {e, f, a});
      }
    }
  return alg;
}

RatVector TensorSquare::act_left(int a, const RatVector& m) const {
  RatVector out(dim());
  for (int k = 0; k < dim(); ++k)
    if (!m[k].is_zero()) out[left_target(a, k)] += m[k];
  return out;
}

RatVector TensorSquare::act_right(const RatVector& m, int a) const {
  RatVector out(dim());
  for (int k = 0; k < dim(); ++k)
    if (!m[k].is_zero()) out[right_target(k, a)] += m[k];
  return out;
}

IdealData ideal_I(const FiniteInverseSemigroup& s) {
  const int n = s.order;
  TensorSquare ts(s);

  // Distinct first-coordinate pairs {s e t, s t}; each generator is
  // (delta_u - delta_v) (x) delta_x.
  std::set<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = s.table[a][b];
      for (int e : s.idempotents) {
        const int aeb = s.table[s.table[a][e]][b];
        if (aeb != ab) pairs.insert(std::minmax(aeb, ab));
      }
    }

  RrefBuilder bi(ts.dim());
  for (const auto& [u, v] : pairs)
    for (int x = 0; x < n; ++x)
      bi.insert({{ts.index(u, x), Rational(1)}, {ts.index(v, x), Rational(-1)}});

  RrefBuilder bj(n);
  for (const auto& row : bi.rows_sorted()) {
    SparseRow image;
    for (const auto& [k, val] : row) {
      auto [a, b] = ts.unindex(k);
      image.emplace_back(s.table[a][b], val);
    }
    std::sort(image.begin(), image.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    bj.insert(std::move(image));
  }

  IdealData out;
  out.i = Subspace::from_matrix(bi.to_matrix());
  out.j = Subspace::from_matrix(bj.to_matrix());
  out.i_perp = nullspace(out.i.basis());
  out.j_perp = nullspace(out.j.basis());
  return out;
}

RationalMatrix omega_matrix(const FiniteInverseSemigroup& s) {
  const int n = s.order;
  RationalMatrix m(n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.at(s.table[a][b], a * n + b) = 1;
  return m;
}

RatVector omega_apply(const FiniteInverseSemigroup& s, const RatVector& m) {
  const int n = s.order;
  RatVector out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Rational& v = m[a * n + b];
      if (!v.is_zero()) out[s.table[a][b]] += v;
    }
  return out;
}

RatVector omega_star_apply(const FiniteInverseSemigroup& s, const RatVector& h) {
  const int n = s.order;
  RatVector out(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[a * n + b] = h[s.table[a][b]];
  return out;
}

bool ideal_closure_crosscheck(const FiniteInverseSemigroup& s) {
  const int n = s.order;
  TensorSquare ts(s);

  RrefBuilder closure(ts.dim());
  for (int a = 0; a < n; ++a)
    for (int e : s.idempotents) {
      const int ae = s.table[a][e];
      if (ae == a) continue;
      for (int x = 0; x < n; ++x) {
        SparseRow g{{ts.index(ae, x), Rational(1)}, {ts.index(a, x), Rational(-1)}};
        std::sort(g.begin(), g.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        closure.insert(std::move(g));
      }
    }

  // Fixed point under both actions: sweep the current basis until stable.
  bool grew = true;
  while (grew) {
    grew = false;
    const auto rows = closure.rows_sorted();
    for (const auto& row : rows)
      for (int a = 0; a < n; ++a) {
        SparseRow left, right;
        for (const auto& [k, val] : row) {
          left.emplace_back(ts.left_target(a, k), val);
          right.emplace_back(ts.right_target(k, a), val);
        }
        auto bycol = [](const auto& p, const auto& q) { return p.first < q.first; };
        std::sort(left.begin(), left.end(), bycol);
        std::sort(right.begin(), right.end(), bycol);
        if (closure.insert(std::move(left))) grew = true;
        if (closure.insert(std::move(right))) grew = true;
      }
  }

  Subspace closed = Subspace::from_matrix(closure.to_matrix());
  return closed == ideal_I(s).i;
}

bool omega_multiplicative_on_basis(const FiniteInverseSemigroup& s) {
  const auto& t = s.table;
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b)
      for (int c = 0; c < s.order; ++c)
        for (int d = 0; d < s.order; ++d)
          // (a (x) b)(c (x) d) = a c (x) d b, so images must satisfy
          // (a c)(d b) = (a b)(c d).
          if (t[t[a][c]][t[d][b]] != t[t[a][b]][t[c][d]]) return false;
  return true;
}

bool omega_bimodule_map_on_basis(const FiniteInverseSemigroup& s) {
  const auto& t = s.table;
  for (int a = 0; a < s.order; ++a)
    for (int x = 0; x < s.order; ++x)
      for (int y = 0; y < s.order; ++y) {
        // omega(a.(x (x) y)) = a omega(x (x) y), omega((x (x) y).a) = omega(x (x) y) a
        if (t[t[a][x]][y] != t[a][t[x][y]]) return false;
        if (t[x][t[y][a]] != t[t[x][y]][a]) return false;
      }
  return true;
}

}  // namespace isa
