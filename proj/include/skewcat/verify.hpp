#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewcat/closure.hpp"
#include "skewcat/linmap.hpp"
#include "skewcat/partition.hpp"
#include "skewcat/subgroup.hpp"
#include "skewcat/word.hpp"

namespace skewcat {

enum class CaseStatus { Pass, Fail, Unknown };

struct ReportCase {
  std::string description;
  CaseStatus status = CaseStatus::Unknown;
  std::string witness;  // replayable counterexample payload on failure
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<ReportCase> cases;

  void pass(std::string description);
  void fail(std::string description, std::string witness);
  void unknown(std::string description, std::string witness);
  void expect(bool ok, std::string description, std::string witness);
  int failures() const;
  int unknowns() const;
  bool all_passed() const { return failures() == 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 20230811;

// Exhaustive sweep of the functor identities (adjoint, connected tensor,
// connected conditioned composition with loop factors) over all pairs with
// at most arity_bound points each, plus full-rank checks of the t_hat
// families. Guarded to n <= 4, arity_bound <= 6.
Report suite_functor(int n, int arity_bound);

// Both closure directions of the partition-word correspondence at bounds:
// the oracle-derived truncation of the category is closed under every
// in-bounds skew operation, the saturated closure of the generators maps
// into the subgroup, and the two agree. A corrupted oracle must fail.
Report suite_skew_word_correspondence(const std::vector<Partition>& generators,
                                      const SubgroupOracle& oracle,
                                      const ClosureBounds& bounds);

// Easiness detection: sS_n-invariance of the subgroup, cross-checked for
// n = 3 by exhaustive enumeration of all 27 self-maps of {1,2,3}.
Report suite_easiness(const std::vector<Word>& generators, const SubgroupOracle& oracle);

// Tensor-category axioms on the span of the t_hat family of the category
// attached to the oracle, with exact-membership backfill at every arity the
// products reach. Passing a null oracle checks the truncation set as given.
Report suite_tensor_category(const std::vector<Partition>& generators,
                             const SubgroupOracle* oracle, int n,
                             const ClosureBounds& bounds, int arity_bound);

// The complete worked example: the reflection-group subgroup N_S of
// Z_2^{*n}, its quotient oracle into S_{n+1}, non-easiness, exact membership
// verdicts, the hat/plain expansion identities, the N_1/N_2 sandwich and the
// emitted presentation families. n >= 4 recommended so that three distinct
// indices exist.
Report section_five_suite(int n);

// The reflection-group example apparatus, reusable across suites and the CLI.
namespace example_s {

// Reduced normal-closure generators: (a_i a_j)^3 for i != j and
// (a_b a_c a_b a_d)^2 for distinct b, c, d.
std::vector<Word> subgroup_generators(int n);

// Relator multi-indices of the displayed presentation families:
// (i,i), (i,j,j,i,j,j), (i,j,i,j,i,j) and (b,c,b,d,b,c,b,d).
std::vector<Labels> relator_indices(int n);

// The quotient oracle a_i -> (i, n+1) in S_{n+1}.
SubgroupOracle oracle(int n);

// Same oracle with one generator image replaced by the identity permutation;
// its kernel is strictly larger and not S_n-invariant, so correspondence
// checks must fail against it.
SubgroupOracle corrupted_oracle(int n);

// h_3, r and the expansion reference partitions of the worked example.
Partition h3();
Partition r();
Partition r1();
Partition r2();
Partition r3();

}  // namespace example_s

}  // namespace skewcat
