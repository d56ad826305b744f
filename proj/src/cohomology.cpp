#include "isa/cohomology.hpp"

#include <algorithm>
#include <map>

namespace isa {

namespace {

void require(bool ok, const char* msg, std::vector<int> witness) {
  if (!ok) throw AlgebraError(AlgebraError::Kind::IncompatibleModule, msg, std::move(witness));
}

}  // namespace

FiniteBimodule regular_bimodule(const FiniteInverseSemigroup& s) {
  const int n = s.order;
  FiniteBimodule x;
  x.dim = n;
  x.a_left.assign(n, RationalMatrix(n, n));
  x.a_right.assign(n, RationalMatrix(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      x.a_left[a].at(s.table[a][b], b) = 1;   // column b -> a b
      x.a_right[a].at(s.table[b][a], b) = 1;  // column b -> b a
    }
  for (int e : s.idempotents) {
    x.e_left.push_back(RationalMatrix::identity(n));  // trivial left action
    x.e_right.push_back(x.a_right[e]);                // multiplication
  }
  return x;
}

FiniteBimodule zero_action_bimodule(const FiniteInverseSemigroup& s, int dim) {
  FiniteBimodule x;
  x.dim = dim;
  x.a_left.assign(s.order, RationalMatrix(dim, dim));
  x.a_right.assign(s.order, RationalMatrix(dim, dim));
  x.e_left.assign(s.idempotents.size(), RationalMatrix(dim, dim));
  x.e_right.assign(s.idempotents.size(), RationalMatrix(dim, dim));
  return x;
}

void validate_bimodule(const FiniteInverseSemigroup& s, const FiniteBimodule& x) {
  const int n = s.order;
  const int ne = static_cast<int>(s.idempotents.size());
  require(static_cast<int>(x.a_left.size()) == n && static_cast<int>(x.a_right.size()) == n &&
              static_cast<int>(x.e_left.size()) == ne && static_cast<int>(x.e_right.size()) == ne,
          "action table sizes do not match the semigroup", {});
  for (const auto& lst : {x.a_left, x.a_right, x.e_left, x.e_right})
    for (const auto& m : lst)
      require(m.rows() == x.dim && m.cols() == x.dim, "action matrix has wrong shape", {});

  // Multiplicativity: (ab).x = a.(b.x), x.(ab) = (x.a).b.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      require(matmul(x.a_left[a], x.a_left[b]) == x.a_left[s.table[a][b]],
              "left action is not multiplicative", {a, b});
      require(matmul(x.a_right[b], x.a_right[a]) == x.a_right[s.table[a][b]],
              "right action is not multiplicative", {a, b});
    }
  for (int ei = 0; ei < ne; ++ei)
    for (int fi = 0; fi < ne; ++fi) {
      const int ef = s.table[s.idempotents[ei]][s.idempotents[fi]];
      const auto it = std::find(s.idempotents.begin(), s.idempotents.end(), ef);
      require(it != s.idempotents.end(), "idempotents are not closed", {ei, fi});
      const int gi = static_cast<int>(it - s.idempotents.begin());
      require(matmul(x.e_left[ei], x.e_left[fi]) == x.e_left[gi],
              "left module action is not multiplicative", {ei, fi});
      require(matmul(x.e_right[fi], x.e_right[ei]) == x.e_right[gi],
              "right module action is not multiplicative", {ei, fi});
    }

  // Compatibilities, with alpha.a = a and a.alpha = a alpha on the algebra:
  //   alpha.(a.x) = (alpha.a).x     (x.a).alpha = x.(a.alpha)
  //   (a.x).alpha = a.(x.alpha)     alpha.(x.a) = (alpha.x).a
  for (int ei = 0; ei < ne; ++ei) {
    const int e = s.idempotents[ei];
    for (int a = 0; a < n; ++a) {
      require(matmul(x.e_left[ei], x.a_left[a]) == x.a_left[a],
              "left module action clashes with the left algebra action", {e, a});
      require(matmul(x.e_right[ei], x.a_right[a]) == x.a_right[s.table[a][e]],
              "right module action clashes with the right algebra action", {e, a});
      require(matmul(x.e_right[ei], x.a_left[a]) == matmul(x.a_left[a], x.e_right[ei]),
              "left algebra and right module actions do not commute", {e, a});
      require(matmul(x.e_left[ei], x.a_right[a]) == matmul(x.a_right[a], x.e_left[ei]),
              "right algebra and left module actions do not commute", {e, a});
    }
  }
}

namespace {

struct DualActions {
  // X^* actions: (a.f)(x) = f(x.a), (f.a)(x) = f(a.x), and likewise for
  // idempotents, i.e. transposes of the X actions with the sides swapped.
  std::vector<RationalMatrix> left, right;      // by S
  std::vector<RationalMatrix> eleft, eright;    // by idempotent position

  DualActions(const FiniteInverseSemigroup& s, const FiniteBimodule& x) {
    for (int a = 0; a < s.order; ++a) {
      left.push_back(transpose(x.a_right[a]));
      right.push_back(transpose(x.a_left[a]));
    }
    for (size_t ei = 0; ei < s.idempotents.size(); ++ei) {
      eleft.push_back(transpose(x.e_right[ei]));
      eright.push_back(transpose(x.e_left[ei]));
    }
  }
};

}  // namespace

Subspace derivation_space(const FiniteInverseSemigroup& s, const FiniteBimodule& x) {
  validate_bimodule(s, x);
  const int n = s.order;
  const int dx = x.dim;
  const int unknowns = n * dx;  // D(delta_a) occupies block a
  DualActions dual(s, x);
  RrefBuilder b(unknowns);
  std::map<int, Rational> acc;
  auto flush = [&]() {
    SparseRow row;
    for (auto& [c, v] : acc)
      if (!v.is_zero()) row.emplace_back(c, std::move(v));
    acc.clear();
    b.insert(std::move(row));
  };

  // Leibniz on all basis pairs: D(ab) = a.D(b) + D(a).b.
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const int ac = s.table[a][c];
      for (int r = 0; r < dx; ++r) {
        acc[ac * dx + r] += 1;
        for (int y = 0; y < dx; ++y) {
          const Rational& l = dual.left[a].at(r, y);
          if (!l.is_zero()) acc[c * dx + y] -= l;
          const Rational& rr = dual.right[c].at(r, y);
          if (!rr.is_zero()) acc[a * dx + y] -= rr;
        }
        flush();
      }
    }

  // Module conditions on all (idempotent, basis) pairs:
  //   D(alpha.a) = alpha.D(a) with alpha.a = a, and
  //   D(a.alpha) = D(a).alpha with a.alpha = a alpha.
  const int ne = static_cast<int>(s.idempotents.size());
  for (int ei = 0; ei < ne; ++ei) {
    const int e = s.idempotents[ei];
    for (int a = 0; a < n; ++a) {
      for (int r = 0; r < dx; ++r) {
        acc[a * dx + r] += 1;
        for (int y = 0; y < dx; ++y) {
          const Rational& l = dual.eleft[ei].at(r, y);
          if (!l.is_zero()) acc[a * dx + y] -= l;
        }
        flush();
      }
      const int ae = s.table[a][e];
      for (int r = 0; r < dx; ++r) {
        acc[ae * dx + r] += 1;
        for (int y = 0; y < dx; ++y) {
          const Rational& rr = dual.eright[ei].at(r, y);
          if (!rr.is_zero()) acc[a * dx + y] -= rr;
        }
        flush();
      }
    }
  }

  // Null space of the stacked constraints.
  std::vector<SparseRow> gens;
  for (int f : b.free_cols()) {
    SparseRow v;
    v.emplace_back(f, Rational(1));
    for (int p : b.pivot_cols_sorted()) {
      Rational e = b.entry(p, f);
      if (!e.is_zero()) v.emplace_back(p, -e);
    }
    std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    gens.push_back(std::move(v));
  }
  return Subspace::from_sparse_rows(unknowns, gens);
}

Subspace inner_derivation_space(const FiniteInverseSemigroup& s, const FiniteBimodule& x) {
  const int n = s.order;
  const int dx = x.dim;
  DualActions dual(s, x);
  std::vector<RatVector> gens;
  for (int f = 0; f < dx; ++f) {
    RatVector v(n * dx);
    for (int a = 0; a < n; ++a)
      for (int r = 0; r < dx; ++r) v[a * dx + r] = dual.left[a].at(r, f) - dual.right[a].at(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::from_dense_rows(n * dx, gens);
}

CohomologyResult h1_dimension(const FiniteInverseSemigroup& s, const FiniteBimodule& x) {
  Subspace z = derivation_space(s, x);
  Subspace inner = inner_derivation_space(s, x);
  CohomologyResult r;
  r.dim_z = z.dim();
  r.dim_b = z.intersection_dim(inner);
  r.dim_h1 = r.dim_z - r.dim_b;
  return r;
}

}  // namespace isa
