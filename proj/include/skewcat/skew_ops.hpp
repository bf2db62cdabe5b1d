#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "skewcat/partition.hpp"

namespace skewcat {

// Distinguishes the modified-composition failure mode from a plain arity
// mismatch; the zero-map semantics for incompatible pairs lives in linmap.
class IncompatiblePair : public std::invalid_argument {
 public:
  IncompatiblePair() : std::invalid_argument("partitions are not compatible") {}
};

// Joining data of a connected tensor product: pairs (block of p, block of q),
// 1-based. A partial matching: no block may occur in two pairs.
struct BlockPairing {
  std::vector<std::pair<int, int>> pairs;
};

// The connected tensor product of p and q along the pairing: horizontal
// concatenation with each paired block of q merged into its partner block of
// p. The empty pairing reproduces tensor(p, q).
Partition connected_tensor(const Partition& p, const Partition& q,
                           const BlockPairing& pairing);

// The set L of all connected tensor products of p and q (one per partial
// matching of block sets), deduplicated and sorted canonically.
std::vector<Partition> connected_tensor_set(const Partition& p, const Partition& q);

// True iff the lower-row block structure of p equals the upper-row block
// structure of q. Requires lower arity of p == upper arity of q.
bool compatible(const Partition& p, const Partition& q);

// The conditioned composition: the usual composition, defined only on
// compatible pairs. Throws IncompatiblePair otherwise.
Composition conditioned_compose(const Partition& q, const Partition& p);

// The set M of all connected conditioned compositions of p and q: the
// conditioned composition followed by every partial matching that joins a
// block of p without lower points to a block of q without upper points.
// Requires compatibility.
std::vector<Partition> connected_composition_set(const Partition& q, const Partition& p);

struct LoopFactors {
  int a = 0;  // middle blocks connected to outer points
  int b = 0;  // blocks of the middle row
};

// b = block count of ker(j^(p)) (the shared middle row), a = b - l(q, p).
// Requires compatibility.
LoopFactors loop_factors(const Partition& q, const Partition& p);

}  // namespace skewcat
