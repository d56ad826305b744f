#ifndef ISA_SEMIGROUP_HPP
#define ISA_SEMIGROUP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isa {

using CayleyTable = std::vector<std::vector<int>>;

class SemigroupError : public std::runtime_error {
public:
  enum class Kind {
    NotAssociative,     // witness {s, t, u}
    NoInverse,          // witness {s}
    NonUniqueInverse,   // witness {s, x1, x2}
    InvalidGroup,
    InvalidParameters,
    TooLarge,           // witness {n}
  };

  SemigroupError(Kind kind, std::string message, std::vector<int> witness = {})
      : std::runtime_error(std::move(message)), kind(kind), witness(std::move(witness)) {}

  Kind kind;
  std::vector<int> witness;

  const char* kind_name() const {
    switch (kind) {
      case Kind::NotAssociative: return "NotAssociative";
      case Kind::NoInverse: return "NoInverse";
      case Kind::NonUniqueInverse: return "NonUniqueInverse";
      case Kind::InvalidGroup: return "InvalidGroup";
      case Kind::InvalidParameters: return "InvalidParameters";
      case Kind::TooLarge: return "TooLarge";
    }
    return "SemigroupError";
  }
};

// A finite inverse semigroup on indices 0..n-1.  The Cayley table is the
// single source of truth; star and idempotents are always recomputed.
struct FiniteInverseSemigroup {
  std::string name;
  int order = 0;
  CayleyTable table;
  std::vector<int> star;
  std::vector<int> idempotents;       // sorted
  std::vector<std::string> labels;    // optional, size order when present

  int mul(int s, int t) const { return table[s][t]; }
  bool is_idempotent(int s) const { return table[s][s] == s; }

  std::optional<int> identity_element() const;
  std::optional<int> zero_element() const;

  // A small generating set, greedy by index.
  std::vector<int> generating_set() const;
};

// Checks the inverse-semigroup axioms (associativity, existence and
// uniqueness of s* with s s* s = s and s* s s* = s*) and returns the
// validated structure.  The table must be square with entries in range;
// anything else throws std::invalid_argument.
FiniteInverseSemigroup validate(const CayleyTable& table, std::string name = "",
                                std::vector<std::string> labels = {});

// Standard families.  All outputs are validated before return.
FiniteInverseSemigroup gen_cyclic_group(int k);
FiniteInverseSemigroup gen_brandt(const FiniteInverseSemigroup& group, int index_size);
FiniteInverseSemigroup gen_symmetric_inverse(int n);  // 1 <= n <= 4
FiniteInverseSemigroup gen_semilattice_chain(int n);
FiniteInverseSemigroup gen_clifford(const FiniteInverseSemigroup& group, int levels);
FiniteInverseSemigroup gen_product(const FiniteInverseSemigroup& a,
                                   const FiniteInverseSemigroup& b);

bool is_group(const FiniteInverseSemigroup& s);

}  // namespace isa

#endif  // ISA_SEMIGROUP_HPP
