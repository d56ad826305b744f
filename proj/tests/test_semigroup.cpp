#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "isa/semigroup.hpp"

using namespace isa;

namespace {

std::vector<FiniteInverseSemigroup> sample_family() {
  std::vector<FiniteInverseSemigroup> out;
  out.push_back(gen_cyclic_group(4));
  out.push_back(gen_semilattice_chain(3));
  out.push_back(gen_brandt(gen_cyclic_group(2), 2));
  out.push_back(gen_clifford(gen_cyclic_group(2), 2));
  out.push_back(gen_product(gen_cyclic_group(2), gen_semilattice_chain(2)));
  out.push_back(gen_symmetric_inverse(2));
  out.push_back(gen_symmetric_inverse(3));
  return out;
}

// Counts partial injective maps on {0..n-1} without going through the
// generator: every function code {0..n} per point, filtered for injectivity.
long count_partial_injections(int n) {
  long count = 0;
  std::vector<int> img(n, -1);
  for (;;) {
    std::set<int> seen;
    bool injective = true;
    for (int v : img)
      if (v >= 0 && !seen.insert(v).second) injective = false;
    if (injective) ++count;
    int pos = n - 1;
    while (pos >= 0 && img[pos] == n - 1) img[pos--] = -1;
    if (pos < 0) break;
    ++img[pos];
  }
  return count;
}

}  // namespace

TEST_CASE("a cyclic group validates with group star and a single idempotent") {
  auto z3 = gen_cyclic_group(3);
  CHECK(z3.order == 3);
  CHECK(z3.idempotents == std::vector<int>{0});
  CHECK(z3.star == std::vector<int>{0, 2, 1});
  CHECK(is_group(z3));
}

TEST_CASE("the left-zero semigroup has non-unique inverses") {
  CayleyTable t{{0, 0}, {1, 1}};  // s t = s
  try {
    validate(t);
    FAIL("expected NonUniqueInverse");
  } catch (const SemigroupError& e) {
    CHECK(e.kind == SemigroupError::Kind::NonUniqueInverse);
    REQUIRE(e.witness.size() == 3);
  }
}

TEST_CASE("the null semigroup has elements with no inverse") {
  CayleyTable t{{0, 0}, {0, 0}};  // s t = 0
  try {
    validate(t);
    FAIL("expected NoInverse");
  } catch (const SemigroupError& e) {
    CHECK(e.kind == SemigroupError::Kind::NoInverse);
    CHECK(e.witness == std::vector<int>{1});
  }
}

TEST_CASE("every brandt semigroup contains a two-sided zero") {
  for (int g : {1, 2, 3})
    for (int n : {1, 2}) {
      auto b = gen_brandt(gen_cyclic_group(g), n);
      CHECK(b.order == n * n * g + 1);
      REQUIRE(b.zero_element().has_value());
      CHECK(b.idempotents.size() == static_cast<size_t>(n + 1));
    }
}

TEST_CASE("a semilattice chain is all idempotent with identity star") {
  auto c = gen_semilattice_chain(3);
  CHECK(c.idempotents == std::vector<int>{0, 1, 2});
  CHECK(c.star == std::vector<int>{0, 1, 2});
  CHECK(c.identity_element() == 0);
  CHECK(c.zero_element() == 2);
}

TEST_CASE("validate rejects malformed tables before the axioms") {
  CHECK_THROWS_AS(validate(CayleyTable{{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(CayleyTable{{0, 5}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(CayleyTable{}), std::invalid_argument);
}

TEST_CASE("validate names an associativity witness") {
  // A magma that is not associative: x*y = x except 1*1 = 0.
  CayleyTable t{{0, 0}, {1, 0}};
  try {
    validate(t);
    FAIL("expected NotAssociative");
  } catch (const SemigroupError& e) {
    CHECK(e.kind == SemigroupError::Kind::NotAssociative);
    REQUIRE(e.witness.size() == 3);
    int s = e.witness[0], u = e.witness[1], v = e.witness[2];
    CHECK(t[t[s][u]][v] != t[s][t[u][v]]);
  }
}

TEST_CASE("brandt semigroups have the expected order and idempotent count") {
  auto b = gen_brandt(gen_cyclic_group(2), 2);
  CHECK(b.order == 9);
  // Idempotents are the diagonal identity triples plus the zero.
  CHECK(b.idempotents.size() == 3);
  CHECK(b.zero_element().has_value());
  CHECK_FALSE(b.identity_element().has_value());

  auto b1 = gen_brandt(gen_cyclic_group(1), 1);
  CHECK(b1.order == 2);
  CHECK(b1.idempotents.size() == 2);

  auto b3 = gen_brandt(gen_cyclic_group(3), 2);
  CHECK(b3.order == 13);
  CHECK(b3.zero_element().has_value());
}

TEST_CASE("brandt rejects a non-group base") {
  CHECK_THROWS_AS(gen_brandt(gen_semilattice_chain(2), 2), SemigroupError);
}

TEST_CASE("symmetric inverse monoids have the enumerated orders") {
  CHECK(gen_symmetric_inverse(1).order == count_partial_injections(1));
  CHECK(gen_symmetric_inverse(2).order == count_partial_injections(2));
  CHECK(gen_symmetric_inverse(3).order == count_partial_injections(3));
  CHECK(count_partial_injections(1) == 2);
  CHECK(count_partial_injections(2) == 7);
  CHECK(count_partial_injections(3) == 34);
  CHECK_THROWS_AS(gen_symmetric_inverse(5), SemigroupError);
}

TEST_CASE("symmetric inverse monoids contain a zero and an identity") {
  for (int n = 1; n <= 3; ++n) {
    auto s = gen_symmetric_inverse(n);
    CHECK(s.zero_element().has_value());
    CHECK(s.identity_element().has_value());
  }
}

TEST_CASE("products are componentwise") {
  auto p = gen_product(gen_cyclic_group(2), gen_semilattice_chain(2));
  CHECK(p.order == 4);
  CHECK(p.idempotents.size() == 2);
}

TEST_CASE("clifford chains of groups validate with componentwise star") {
  auto c = gen_clifford(gen_cyclic_group(2), 2);
  CHECK(c.order == 4);
  CHECK(c.idempotents.size() == 2);
  for (int s = 0; s < c.order; ++s) {
    // Idempotents are central in a Clifford semigroup.
    for (int e : c.idempotents) CHECK(c.table[s][e] == c.table[e][s]);
  }
}

TEST_CASE("inverse-semigroup identities hold exhaustively on the family") {
  for (const auto& s : sample_family()) {
    for (int a = 0; a < s.order; ++a) {
      CHECK(s.table[s.table[a][s.star[a]]][a] == a);
      CHECK(s.table[s.table[s.star[a]][a]][s.star[a]] == s.star[a]);
      CHECK(s.star[s.star[a]] == a);
      for (int b = 0; b < s.order; ++b)
        CHECK(s.star[s.table[a][b]] == s.table[s.star[b]][s.star[a]]);
    }
    for (int e : s.idempotents) {
      CHECK(s.star[e] == e);
      for (int f : s.idempotents) CHECK(s.table[e][f] == s.table[f][e]);
    }
  }
}

TEST_CASE("generating sets actually generate") {
  for (const auto& s : sample_family()) {
    auto gens = s.generating_set();
    CHECK_FALSE(gens.empty());
    std::set<int> closed(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a : std::set<int>(closed))
        for (int b : std::set<int>(closed))
          if (closed.insert(s.table[a][b]).second) grew = true;
    }
    CHECK(static_cast<int>(closed.size()) == s.order);
  }
}
