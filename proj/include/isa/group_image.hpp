#ifndef ISA_GROUP_IMAGE_HPP
#define ISA_GROUP_IMAGE_HPP

#include "isa/semigroup.hpp"

namespace isa {

class CongruenceError : public std::runtime_error {
public:
  explicit CongruenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Quotient of S by the minimum group congruence: s ~ t iff s e = t e for
// some idempotent e.  Holds the class map pi, the classes, and the quotient
// group's Cayley table.
struct GroupImage {
  std::vector<int> class_of;            // length n, s -> class index
  std::vector<std::vector<int>> classes;  // sorted members, classes ordered by least member
  CayleyTable table;                    // quotient group table
  int identity = -1;

  int order() const { return static_cast<int>(classes.size()); }
  int pi(int s) const { return class_of[s]; }

  FiniteInverseSemigroup as_semigroup(const std::string& name) const;
};

// Partition of S under the minimum group congruence.  The relation is
// checked to be an equivalence and a two-sided congruence before return;
// a failure signals an internal bug or invalid input, never an expected
// outcome on validated semigroups.
std::vector<std::vector<int>> min_group_congruence(const FiniteInverseSemigroup& s);

// Quotient group with verified group axioms and well-definedness.
GroupImage quotient_group(const FiniteInverseSemigroup& s);

// True iff pi(s e) = pi(s) for every s in S and e in E, i.e. the right
// action of l1(E) induced on the quotient is trivial.  Checked, not assumed.
bool induced_actions_trivial(const FiniteInverseSemigroup& s, const GroupImage& g);

}  // namespace isa

#endif  // ISA_GROUP_IMAGE_HPP
