#include "isa/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace isa {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

RatVector matvec(const RationalMatrix& m, const RatVector& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("matvec: shape mismatch");
  RatVector out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

SparseRow to_sparse(const RatVector& v) {
  SparseRow r;
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    if (!v[j].is_zero()) r.emplace_back(j, v[j]);
  return r;
}

RatVector to_dense(const SparseRow& r, int cols) {
  RatVector v(cols);
  for (const auto& [c, x] : r) v[c] = x;
  return v;
}

namespace {

const Rational* find_col(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// dst += c * src for sorted sparse rows.  Columns newly introduced into dst
// are appended to *gained when non-null.
void axpy(SparseRow& dst, const Rational& c, const SparseRow& src, std::vector<int>* gained) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Rational v = c * src[j].second;
      if (!v.is_zero()) {
        if (gained) gained->push_back(src[j].first);
        out.emplace_back(src[j].first, std::move(v));
      }
      ++j;
    } else {
      Rational v = dst[i].second + c * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

void sanitize(SparseRow& v) {
  if (!std::is_sorted(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; }))
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge duplicate columns, drop exact zeros.
  SparseRow out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& e) { return e.second.is_zero(); }),
            out.end());
  v = std::move(out);
}

}  // namespace

RrefBuilder::RrefBuilder(int cols) : cols_(cols), row_of_col_(cols, -1), col_users_(cols) {}

SparseRow RrefBuilder::reduce(SparseRow v) const {
  sanitize(v);
  for (;;) {
    size_t hit = v.size();
    for (size_t i = 0; i < v.size(); ++i)
      if (row_of_col_[v[i].first] >= 0) {
        hit = i;
        break;
      }
    if (hit == v.size()) break;
    const int r = row_of_col_[v[hit].first];
    axpy(v, -v[hit].second, rows_[r], nullptr);
  }
  return v;
}

bool RrefBuilder::insert(SparseRow v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;

  const Rational lead = v.front().second;
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    for (auto& e : v) e.second *= inv;
  }
  const int p = v.front().first;
  const int k = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  pivot_of_row_.push_back(p);
  row_of_col_[p] = k;
  for (const auto& e : rows_[k]) col_users_[e.first].push_back(k);

  // Back-eliminate the new pivot column from the existing basis rows.
  std::vector<int> users = col_users_[p];
  for (int r : users) {
    if (r == k) continue;
    const Rational* c = find_col(rows_[r], p);
    if (c == nullptr) continue;  // stale occupancy entry
    std::vector<int> gained;
    axpy(rows_[r], -*c, rows_[k], &gained);
    for (int col : gained) col_users_[col].push_back(r);
  }
  col_users_[p].assign(1, k);
  return true;
}

std::vector<int> RrefBuilder::pivot_cols_sorted() const {
  std::vector<int> p = pivot_of_row_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<int> RrefBuilder::free_cols() const {
  std::vector<int> f;
  for (int c = 0; c < cols_; ++c)
    if (row_of_col_[c] < 0) f.push_back(c);
  return f;
}

std::vector<SparseRow> RrefBuilder::rows_sorted() const {
  std::vector<int> order(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
  std::vector<SparseRow> out;
  out.reserve(rows_.size());
  for (int i : order) out.push_back(rows_[i]);
  return out;
}

RationalMatrix RrefBuilder::to_matrix() const {
  RationalMatrix m(rank(), cols_);
  int i = 0;
  for (const auto& row : rows_sorted()) {
    for (const auto& [c, x] : row) m.at(i, c) = x;
    ++i;
  }
  return m;
}

Rational RrefBuilder::entry(int pivot_col, int col) const {
  const int r = row_of_col_[pivot_col];
  if (r < 0) throw std::invalid_argument("RrefBuilder::entry: not a pivot column");
  const Rational* v = find_col(rows_[r], col);
  return v ? *v : Rational(0);
}

RationalMatrix rref(const RationalMatrix& m) {
  RrefBuilder b(m.cols());
  for (int i = 0; i < m.rows(); ++i) b.insert_dense(m.row(i));
  RationalMatrix out(m.rows(), m.cols());
  int i = 0;
  for (const auto& row : b.rows_sorted()) {
    for (const auto& [c, x] : row) out.at(i, c) = x;
    ++i;
  }
  return out;
}

int rank(const RationalMatrix& m) {
  RrefBuilder b(m.cols());
  for (int i = 0; i < m.rows(); ++i) b.insert_dense(m.row(i));
  return b.rank();
}

Subspace Subspace::from_sparse_rows(int ambient, const std::vector<SparseRow>& gens) {
  RrefBuilder b(ambient);
  for (const auto& g : gens) b.insert(g);
  Subspace s(ambient);
  s.basis_ = b.to_matrix();
  return s;
}

Subspace Subspace::from_dense_rows(int ambient, const std::vector<RatVector>& gens) {
  std::vector<SparseRow> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(to_sparse(g));
  return from_sparse_rows(ambient, rows);
}

Subspace Subspace::from_matrix(const RationalMatrix& gens) {
  std::vector<SparseRow> rows;
  rows.reserve(gens.rows());
  for (int i = 0; i < gens.rows(); ++i) rows.push_back(to_sparse(gens.row(i)));
  return from_sparse_rows(gens.cols(), rows);
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  s.basis_ = RationalMatrix::identity(ambient);
  return s;
}

bool Subspace::contains(const RatVector& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace::contains: dimension mismatch");
  RrefBuilder b(ambient_);
  for (int i = 0; i < basis_.rows(); ++i) b.insert_dense(basis_.row(i));
  return b.reduce(to_sparse(v)).empty();
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  RrefBuilder b(ambient_);
  for (int i = 0; i < basis_.rows(); ++i) b.insert_dense(basis_.row(i));
  for (int i = 0; i < o.basis_.rows(); ++i) b.insert_dense(o.basis_.row(i));
  Subspace s(ambient_);
  s.basis_ = b.to_matrix();
  return s;
}

int Subspace::intersection_dim(const Subspace& o) const {
  return dim() + o.dim() - sum(o).dim();
}

Subspace nullspace(const RationalMatrix& m) {
  RrefBuilder b(m.cols());
  for (int i = 0; i < m.rows(); ++i) b.insert_dense(m.row(i));
  std::vector<SparseRow> gens;
  for (int f : b.free_cols()) {
    SparseRow v;
    v.emplace_back(f, Rational(1));
    for (int p : b.pivot_cols_sorted()) {
      Rational e = b.entry(p, f);
      if (!e.is_zero()) v.emplace_back(p, -e);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    gens.push_back(std::move(v));
  }
  return Subspace::from_sparse_rows(m.cols(), gens);
}

std::optional<RatVector> solve(const RationalMatrix& m, const RatVector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  const int n = m.cols();
  const int sentinel = n;
  RrefBuilder builder(n + 1);
  for (int i = 0; i < m.rows(); ++i) {
    SparseRow row = to_sparse(m.row(i));
    if (!b[i].is_zero()) row.emplace_back(sentinel, b[i]);
    builder.insert(std::move(row));
  }
  if (builder.has_pivot(sentinel)) return std::nullopt;
  RatVector x(n);
  for (int p : builder.pivot_cols_sorted()) x[p] = builder.entry(p, sentinel);
  return x;
}

}  // namespace isa
