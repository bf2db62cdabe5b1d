#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewcat/word.hpp"

namespace skewcat {

// The word problem in Z_2^{*n}/N is not decidable in general, so membership
// answers are three-valued.
enum class Verdict { In, NotIn, Unknown };

std::string to_text(Verdict v);

// N as the kernel of the homomorphism a_i -> images[i-1] into the symmetric
// group on {1..degree}. Exact: never answers Unknown.
struct FiniteQuotient {
  int rank = 0;                           // ambient rank n
  int degree = 0;                         // permutations of {1..degree}
  std::vector<std::vector<int>> images;   // one permutation per generator, 1-based entries

  void validate() const;
  std::vector<int> image_of(const Word& w) const;
  bool maps_to_identity(const Word& w) const;
};

// N as the S_n-invariant normal closure of a generator set, explored
// breadth-first up to the given bounds. In is certain; NotIn is reported
// only when a separating finite quotient is supplied or when the search
// saturated strictly within its bounds (then the closed set is all of N).
struct BoundedSearchSpec {
  int rank = 0;
  std::vector<Word> generators;
  int max_length = 16;
  int max_depth = 6;
  std::optional<FiniteQuotient> separating;
};

// A membership strategy for an S_n-invariant normal subgroup N of Z_2^{*n}.
// Read-only after construction; a BoundedSearch oracle computes its closed
// set eagerly, so instances may be shared across threads.
class SubgroupOracle {
 public:
  static SubgroupOracle quotient(FiniteQuotient q);
  static SubgroupOracle search(BoundedSearchSpec spec);

  int rank() const;
  // In/NotIn/Unknown for a word with letters within 1..rank(); throws
  // std::invalid_argument if a letter exceeds the ambient rank.
  Verdict member(const Word& w) const;
  // True when member never answers Unknown.
  bool exact() const;

  const BoundedSearchSpec* search_spec() const;  // null for quotient oracles
  const FiniteQuotient* quotient_spec() const;   // null for search oracles

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Membership in the lift N_infty of N to Z_2^{*infty}: a word whose support
// fits injectively into 1..rank is relabelled and delegated; otherwise
// Unknown (the lift only restricts back to N on the ambient rank).
Verdict lift_member(const SubgroupOracle& oracle, const Word& w);

struct InvarianceWitness {
  Word generator;
  std::string map_description;
  Word image;
};

struct InvarianceResult {
  Verdict verdict = Verdict::Unknown;  // In = sS_n-invariant
  std::optional<InvarianceWitness> witness;
};

// Decides sS_n-invariance of N = <<generators>> by checking every elementary
// merge and every transposition image of every generator. Merges and
// transpositions generate sS_n as a monoid and endomorphism images of a
// normal closure are controlled by the generator images, so In on all checks
// implies invariance; one NotIn witness refutes it.
InvarianceResult is_strongly_invariant(const SubgroupOracle& oracle,
                                       const std::vector<Word>& generators);

struct Sandwich {
  // x in N_1 iff every relabelling of x through a map support(x) -> 1..n
  // stays in N.
  std::function<Verdict(const Word&)> n1_member;
  // Normal-closure generators of N_2: all sS_n images of the input
  // generators.
  std::vector<Word> n2_generators;
};

Sandwich sandwich_n1_n2(const SubgroupOracle& oracle, const std::vector<Word>& generators);

// One defining relation of the semi-direct product presentation, derived
// from a relator multi-index: sum over f in [n]^k of u_{f1 i1} ... u_{fk ik}
// equals 1. Standing relations carry empty indices.
struct RelationDescriptor {
  Labels indices;
  std::string relation;
};

std::vector<RelationDescriptor> presentation_relations(
    const std::vector<Labels>& relator_indices, int n);

}  // namespace skewcat
