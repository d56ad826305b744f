#include "isa/group_image.hpp"

#include <algorithm>
#include <numeric>

namespace isa {

FiniteInverseSemigroup GroupImage::as_semigroup(const std::string& name) const {
  return validate(table, name);
}

namespace {

bool related(const FiniteInverseSemigroup& s, int a, int b) {
  for (int e : s.idempotents)
    if (s.table[a][e] == s.table[b][e]) return true;
  return false;
}

}  // namespace

std::vector<std::vector<int>> min_group_congruence(const FiniteInverseSemigroup& s) {
  const int n = s.order;
  // Union-find over the raw relation, then verify the relation was already
  // transitive and is compatible with the product on both sides.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (related(s, a, b)) parent[find(a)] = find(b);

  std::vector<std::vector<int>> classes;
  std::vector<int> class_of(n, -1);
  for (int a = 0; a < n; ++a) {
    int r = find(a);
    if (class_of[r] < 0) {
      class_of[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    class_of[a] = class_of[r];
    classes[class_of[a]].push_back(a);
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if ((class_of[a] == class_of[b]) != related(s, a, b))
        throw CongruenceError("minimum group relation is not transitive");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (class_of[a] != class_of[b]) continue;
      for (int u = 0; u < n; ++u) {
        if (class_of[s.table[u][a]] != class_of[s.table[u][b]] ||
            class_of[s.table[a][u]] != class_of[s.table[b][u]])
          throw CongruenceError("minimum group relation is not a congruence");
      }
    }
  return classes;
}

GroupImage quotient_group(const FiniteInverseSemigroup& s) {
  GroupImage g;
  g.classes = min_group_congruence(s);
  const int n = s.order;
  const int k = static_cast<int>(g.classes.size());
  g.class_of.assign(n, -1);
  for (int c = 0; c < k; ++c)
    for (int a : g.classes[c]) g.class_of[a] = c;

  g.table.assign(k, std::vector<int>(k, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int& cell = g.table[g.class_of[a]][g.class_of[b]];
      int p = g.class_of[s.table[a][b]];
      if (cell < 0)
        cell = p;
      else if (cell != p)
        throw CongruenceError("quotient product is not well-defined");
    }

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw CongruenceError("quotient is not associative");
  for (int e = 0; e < k; ++e) {
    bool ident = true;
    for (int a = 0; a < k && ident; ++a) ident = g.table[e][a] == a && g.table[a][e] == a;
    if (ident) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw CongruenceError("quotient has no identity");
  for (int a = 0; a < k; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < k && !has_inverse; ++b)
      has_inverse = g.table[a][b] == g.identity && g.table[b][a] == g.identity;
    if (!has_inverse) throw CongruenceError("quotient element has no inverse");
  }
  return g;
}

bool induced_actions_trivial(const FiniteInverseSemigroup& s, const GroupImage& g) {
  for (int a = 0; a < s.order; ++a)
    for (int e : s.idempotents)
      if (g.class_of[s.table[a][e]] != g.class_of[a]) return false;
  return true;
}

}  // namespace isa
