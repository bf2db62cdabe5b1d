#pragma once

#include <optional>
#include <vector>

#include "skewcat/partition.hpp"
#include "skewcat/subgroup.hpp"

namespace skewcat {

// Closures are infinite sets; saturation runs within explicit bounds.
struct ClosureBounds {
  int max_points = 10;              // bound on k + l per element, >= 2
  std::optional<int> max_blocks;    // optional block-count bound
};

enum class ClosureKind { Skew, Classic };

// A finite, bound-stamped under-approximation of <E>_skew or <E>. Always
// contains the cup and the identity partition; every element respects the
// bounds; saturated means no in-bounds operation application yields a new
// element. The set within bounds is sound but not claimed complete: an
// element of the full closure with few points might only be derivable
// through larger intermediates. member_exact compensates via the word side.
struct ClosureTruncation {
  ClosureKind kind = ClosureKind::Skew;
  std::vector<Partition> generators;
  ClosureBounds bounds;
  std::vector<Partition> elements;  // sorted canonically
  bool saturated = false;

  bool contains(const Partition& p) const;
};

// Least fixpoint within bounds of involution, rotation, connected tensor
// products (all pairings) and conditioned composition, starting from
// E together with the cap and the identity partition. The result set does
// not depend on iteration order.
ClosureTruncation skew_closure(const std::vector<Partition>& generators,
                               const ClosureBounds& bounds);

// Same scheme with involution, rotation, plain tensor products and plain
// composition.
ClosureTruncation classic_closure(const std::vector<Partition>& generators,
                                  const ClosureBounds& bounds);

// Exact membership of p in the skew category attached to the oracle's
// subgroup: rotates p to one row, reads off the word and delegates to the
// oracle. Requires block_count(p) <= oracle rank.
Verdict member_exact(const Partition& p, const SubgroupOracle& oracle);

}  // namespace skewcat
