#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace skewcat {

// A labelling row: positive integer labels, one per point.
using Labels = std::vector<int>;

// A pair of multi-indices (i, j) labelling the k upper and l lower points of
// a two-row diagram. Entries are arbitrary positive integers.
struct MultiIndexPair {
  Labels upper;
  Labels lower;

  bool operator==(const MultiIndexPair&) const = default;
};

// A two-row set partition in canonical kernel form.
//
// The stored rows are always ind(p): block ids are exactly 1..block_count()
// and appear in ascending order of first occurrence when scanning the upper
// row and then the lower row. Because of this, structural equality is
// semantic equality of partitions, and membership of a labelling in the
// orbit of ind(p) reduces to a kernel comparison.
//
// The empty partition P(0,0) has block count 0; it is the tensor unit and
// appears as the scalar object under the fiber functors.
class Partition {
 public:
  Partition() = default;  // empty partition

  // Kernel of a labelling: two points share a block iff their entries agree.
  static Partition ker(const Labels& upper, const Labels& lower);
  static Partition ker(const MultiIndexPair& m) { return ker(m.upper, m.lower); }

  const Labels& upper_labels() const { return upper_; }
  const Labels& lower_labels() const { return lower_; }
  int upper_arity() const { return static_cast<int>(upper_.size()); }
  int lower_arity() const { return static_cast<int>(lower_.size()); }
  int points() const { return upper_arity() + lower_arity(); }
  int block_count() const { return blocks_; }

  // The canonical labelling; ker(ind()) reproduces the partition and ind()
  // is lexicographically minimal among all labellings with that kernel.
  MultiIndexPair ind() const { return {upper_, lower_}; }

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition&) const;

 private:
  Labels upper_;
  Labels lower_;
  int blocks_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

// Named partitions.
Partition empty_partition();
Partition identity_partition();             // | in P(1,1)
Partition cup();                            // the one-block element of P(0,2)
Partition cap();                            // the one-block element of P(2,0)
Partition primary_partition();              // ker((1,1,2),(2,1,1)) in P(3,3)
Partition block_partition(int k, int l);    // e(k,l): all k+l points in one block

// Classic operations.

// Turns p upside-down; an involution.
Partition involution(const Partition& p);

// Horizontal concatenation; blocks of p and q stay disjoint.
Partition tensor(const Partition& p, const Partition& q);

struct Composition {
  Partition result;
  int loops = 0;  // middle components not connected to any outer point
};

// Vertical concatenation of p (top) and q (bottom) with loops removed.
// Requires lower arity of p == upper arity of q.
Composition compose(const Partition& q, const Partition& p);

enum class Corner { UpperLeft, LowerLeft, UpperRight, LowerRight };

// Moves the named leg to the other row (upper legs move down, lower legs
// move up; left legs stay leftmost, right legs stay rightmost). Opposite
// corners are mutually inverse and the block count is preserved.
// Requires the designated row to be non-empty.
Partition rotate(const Partition& p, Corner corner);

// All partitions reachable from p by basic rotations (including p).
std::vector<Partition> all_rotations(const Partition& p);

// Indicator of S_infinity(ind(p)): 1 iff ker(m) == p.
// Requires the arities of m to match p.
bool delta_hat(const Partition& p, const MultiIndexPair& m);

// Indicator of sS_infinity(ind(p)): 1 iff m is constant on every block of p,
// i.e. ker(m) arises from p by joining blocks.
bool delta(const Partition& p, const MultiIndexPair& m);

// M_{<=p}: every partition obtained from p by joining blocks, p included.
// Sorted canonically; size is the Bell number of block_count().
std::vector<Partition> coarsenings(const Partition& p);

// All partitions of P(k, l) in canonical order (restricted growth strings).
std::vector<Partition> all_partitions(int k, int l);

// All partitions with k + l <= max_points, every (k, l) split.
std::vector<Partition> all_partitions_up_to(int max_points);

// Two label rows, e.g. "1 1 2 / 2 1 1"; an empty row renders as "-".
std::string to_text(const Partition& p);

}  // namespace skewcat
