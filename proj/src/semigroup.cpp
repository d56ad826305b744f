#include "isa/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace isa {

std::optional<int> FiniteInverseSemigroup::identity_element() const {
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int s = 0; s < order && ok; ++s) ok = table[e][s] == s && table[s][e] == s;
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<int> FiniteInverseSemigroup::zero_element() const {
  for (int z = 0; z < order; ++z) {
    bool ok = true;
    for (int s = 0; s < order && ok; ++s) ok = table[z][s] == z && table[s][z] == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::vector<int> FiniteInverseSemigroup::generating_set() const {
  std::vector<int> gens;
  std::vector<char> closed(order, 0);
  auto close = [&]() {
    // Closure of gens under the product.
    std::fill(closed.begin(), closed.end(), 0);
    std::vector<int> work = gens;
    for (int g : gens) closed[g] = 1;
    while (!work.empty()) {
      int a = work.back();
      work.pop_back();
      for (int b = 0; b < order; ++b) {
        if (!closed[b]) continue;
        for (int c : {table[a][b], table[b][a]}) {
          if (!closed[c]) {
            closed[c] = 1;
            work.push_back(c);
          }
        }
      }
    }
  };
  for (int s = 0; s < order; ++s) {
    if (s > 0 && closed[s]) continue;
    gens.push_back(s);
    close();
  }
  return gens;
}

FiniteInverseSemigroup validate(const CayleyTable& table, std::string name,
                                std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("validate: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("validate: table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("validate: entry out of range");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("validate: label count mismatch");

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u)
        if (table[table[s][t]][u] != table[s][table[t][u]])
          throw SemigroupError(SemigroupError::Kind::NotAssociative,
                               "product is not associative", {s, t, u});

  FiniteInverseSemigroup out;
  out.name = std::move(name);
  out.order = n;
  out.table = table;
  out.labels = std::move(labels);
  out.star.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int x = 0; x < n; ++x) {
      if (table[table[s][x]][s] == s && table[table[x][s]][x] == x) {
        if (out.star[s] >= 0)
          throw SemigroupError(SemigroupError::Kind::NonUniqueInverse,
                               "element has more than one inverse", {s, out.star[s], x});
        out.star[s] = x;
      }
    }
    if (out.star[s] < 0)
      throw SemigroupError(SemigroupError::Kind::NoInverse, "element has no inverse", {s});
  }
  for (int s = 0; s < n; ++s)
    if (table[s][s] == s) out.idempotents.push_back(s);
  return out;
}

bool is_group(const FiniteInverseSemigroup& s) { return s.idempotents.size() == 1; }

FiniteInverseSemigroup gen_cyclic_group(int k) {
  if (k < 1) throw SemigroupError(SemigroupError::Kind::InvalidParameters, "cyclic: order >= 1");
  CayleyTable t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = (i + j) % k;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("g" + std::to_string(i));
  return validate(t, "cyclic_" + std::to_string(k), std::move(labels));
}

FiniteInverseSemigroup gen_brandt(const FiniteInverseSemigroup& group, int index_size) {
  if (!is_group(group))
    throw SemigroupError(SemigroupError::Kind::InvalidGroup, "brandt: base is not a group");
  if (index_size < 1)
    throw SemigroupError(SemigroupError::Kind::InvalidParameters, "brandt: index size >= 1");
  const int g = group.order;
  const int n = index_size;
  const int order = n * n * g + 1;
  // Element 0 is the zero; (i, x, j) sits at 1 + (i*g + x)*n + j.
  auto id = [&](int i, int x, int j) { return 1 + (i * g + x) * n + j; };
  CayleyTable t(order, std::vector<int>(order, 0));
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < g; ++x)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int y = 0; y < g; ++y)
            for (int l = 0; l < n; ++l)
              t[id(i, x, j)][id(k, y, l)] = (j == k) ? id(i, group.table[x][y], l) : 0;
  std::vector<std::string> labels(order);
  labels[0] = "0";
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < g; ++x)
      for (int j = 0; j < n; ++j)
        labels[id(i, x, j)] = "(" + std::to_string(i + 1) + "," + std::to_string(x) + "," +
                              std::to_string(j + 1) + ")";
  return validate(t, "brandt_" + group.name + "_" + std::to_string(index_size),
                  std::move(labels));
}

namespace {

// Partial injective maps on {0..n-1}: img[i] in {-1} u {0..n-1}, injective on
// the defined part.  Enumerated in base-(n+1) code order.
std::vector<std::vector<int>> enumerate_partial_bijections(int n) {
  std::vector<std::vector<int>> maps;
  std::vector<int> img(n, -1);
  for (;;) {
    std::set<int> seen;
    bool injective = true;
    for (int v : img) {
      if (v < 0) continue;
      if (!seen.insert(v).second) {
        injective = false;
        break;
      }
    }
    if (injective) maps.push_back(img);
    int pos = n - 1;
    while (pos >= 0) {
      if (img[pos] + 1 < n) {
        ++img[pos];
        break;
      }
      img[pos] = -1;
      --pos;
    }
    if (pos < 0) break;
  }
  return maps;
}

std::string partial_map_label(const std::vector<int>& img) {
  std::string s = "[";
  bool first = true;
  for (int i = 0; i < static_cast<int>(img.size()); ++i) {
    if (img[i] < 0) continue;
    if (!first) s += " ";
    s += std::to_string(i + 1) + ">" + std::to_string(img[i] + 1);
    first = false;
  }
  return s + "]";
}

}  // namespace

FiniteInverseSemigroup gen_symmetric_inverse(int n) {
  if (n < 1) throw SemigroupError(SemigroupError::Kind::InvalidParameters, "sym_inv: n >= 1");
  if (n > 4) throw SemigroupError(SemigroupError::Kind::TooLarge, "sym_inv: n <= 4", {n});
  auto maps = enumerate_partial_bijections(n);
  const int order = static_cast<int>(maps.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[maps[i]] = i;
  CayleyTable t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      // Product is composition: (f.g)(x) = f(g(x)).
      std::vector<int> c(n, -1);
      for (int x = 0; x < n; ++x) {
        int y = maps[b][x];
        if (y >= 0) c[x] = maps[a][y];
      }
      t[a][b] = index.at(c);
    }
  std::vector<std::string> labels;
  for (const auto& m : maps) labels.push_back(partial_map_label(m));
  return validate(t, "sym_inv_" + std::to_string(n), std::move(labels));
}

FiniteInverseSemigroup gen_semilattice_chain(int n) {
  if (n < 1) throw SemigroupError(SemigroupError::Kind::InvalidParameters, "chain: n >= 1");
  CayleyTable t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = std::max(i, j);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return validate(t, "chain_" + std::to_string(n), std::move(labels));
}

FiniteInverseSemigroup gen_clifford(const FiniteInverseSemigroup& group, int levels) {
  if (!is_group(group))
    throw SemigroupError(SemigroupError::Kind::InvalidGroup, "clifford: base is not a group");
  if (levels < 1)
    throw SemigroupError(SemigroupError::Kind::InvalidParameters, "clifford: levels >= 1");
  // Chain of copies of the group with identity connecting maps: elements
  // (level, g), product (max of levels, product in the group).
  const int g = group.order;
  const int order = levels * g;
  auto id = [&](int l, int x) { return l * g + x; };
  CayleyTable t(order, std::vector<int>(order));
  for (int l1 = 0; l1 < levels; ++l1)
    for (int x = 0; x < g; ++x)
      for (int l2 = 0; l2 < levels; ++l2)
        for (int y = 0; y < g; ++y)
          t[id(l1, x)][id(l2, y)] = id(std::max(l1, l2), group.table[x][y]);
  std::vector<std::string> labels(order);
  for (int l = 0; l < levels; ++l)
    for (int x = 0; x < g; ++x) labels[id(l, x)] = "(" + std::to_string(l) + ",g" + std::to_string(x) + ")";
  return validate(t, "clifford_" + group.name + "_" + std::to_string(levels), std::move(labels));
}

FiniteInverseSemigroup gen_product(const FiniteInverseSemigroup& a,
                                   const FiniteInverseSemigroup& b) {
  const int order = a.order * b.order;
  auto id = [&](int x, int y) { return x * b.order + y; };
  CayleyTable t(order, std::vector<int>(order));
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          t[id(x1, y1)][id(x2, y2)] = id(a.table[x1][x2], b.table[y1][y2]);
  return validate(t, a.name + "_x_" + b.name);
}

}  // namespace isa
