#include "skewcat/closure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "skewcat/skew_ops.hpp"
#include "skewcat/util.hpp"

namespace skewcat {

namespace {

constexpr std::size_t kElementGuard = 250'000;

struct Saturator {
  ClosureKind kind;
  ClosureBounds bounds;
  std::set<Partition> elements;
  std::vector<Partition> worklist;

  bool admissible(const Partition& p) const {
    if (p.points() > bounds.max_points) return false;
    if (bounds.max_blocks && p.block_count() > *bounds.max_blocks) return false;
    return true;
  }

  void offer(const Partition& p) {
    if (!admissible(p)) return;
    if (elements.size() >= kElementGuard)
      throw ResourceError("closure saturation exceeds element guard");
    if (elements.insert(p).second) worklist.push_back(p);
  }

  void unary(const Partition& x) {
    offer(involution(x));
    if (x.upper_arity() > 0) {
      offer(rotate(x, Corner::UpperLeft));
      offer(rotate(x, Corner::UpperRight));
    }
    if (x.lower_arity() > 0) {
      offer(rotate(x, Corner::LowerLeft));
      offer(rotate(x, Corner::LowerRight));
    }
  }

  void binary(const Partition& x, const Partition& y) {
    if (x.points() + y.points() <= bounds.max_points) {
      if (kind == ClosureKind::Skew) {
        for (const auto& r : connected_tensor_set(x, y)) offer(r);
      } else {
        offer(tensor(x, y));
      }
    }
    // compose(y after x): lower row of x meets upper row of y.
    if (x.lower_arity() == y.upper_arity()) {
      if (kind == ClosureKind::Skew) {
        // The whole connected conditioned composition set: its elements are
        // derivable from conditioned compositions and connected tensors, but
        // possibly only through intermediates beyond the point bound, and
        // the truncation must stay closed under them within bounds.
        if (compatible(x, y))
          for (const auto& r : connected_composition_set(y, x)) offer(r);
      } else {
        offer(compose(y, x).result);
      }
    }
  }

  void run(const std::vector<Partition>& generators) {
    offer(cap());
    offer(identity_partition());
    for (const auto& g : generators) offer(g);
    while (!worklist.empty()) {
      const Partition x = worklist.back();
      worklist.pop_back();
      unary(x);
      // Re-examine x against everything present, both orders. New elements
      // enter the worklist, so every pair is eventually processed.
      std::vector<Partition> snapshot(elements.begin(), elements.end());
      for (const auto& y : snapshot) {
        binary(x, y);
        binary(y, x);
      }
    }
  }
};

}  // namespace

bool ClosureTruncation::contains(const Partition& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

static ClosureTruncation saturate(ClosureKind kind, const std::vector<Partition>& generators,
                                  const ClosureBounds& bounds) {
  if (bounds.max_points < 2)
    throw std::invalid_argument("closure bounds: max_points must be >= 2");
  if (bounds.max_blocks && *bounds.max_blocks < 1)
    throw std::invalid_argument("closure bounds: max_blocks must be >= 1");
  Saturator s{kind, bounds, {}, {}};
  s.run(generators);
  ClosureTruncation out;
  out.kind = kind;
  out.generators = generators;
  out.bounds = bounds;
  out.elements.assign(s.elements.begin(), s.elements.end());
  out.saturated = true;  // the worklist drained: no in-bounds application is new
  return out;
}

ClosureTruncation skew_closure(const std::vector<Partition>& generators,
                               const ClosureBounds& bounds) {
  return saturate(ClosureKind::Skew, generators, bounds);
}

ClosureTruncation classic_closure(const std::vector<Partition>& generators,
                                  const ClosureBounds& bounds) {
  return saturate(ClosureKind::Classic, generators, bounds);
}

Verdict member_exact(const Partition& p, const SubgroupOracle& oracle) {
  if (p.block_count() > oracle.rank())
    throw std::invalid_argument("member_exact: block count exceeds oracle rank");
  // The canonical word of ind(p) uses letters 1..block_count only, so it is
  // already a word of the ambient group; rotation invariance of the
  // underlying category makes this the word of the one-row rotation.
  return oracle.member(word_of_partition(p));
}

}  // namespace skewcat
