#include "skewcat/skew_ops.hpp"

#include <algorithm>
#include <set>

namespace skewcat {

Partition connected_tensor(const Partition& p, const Partition& q,
                           const BlockPairing& pairing) {
  const int bp = p.block_count();
  const int bq = q.block_count();
  // q's blocks get labels bp+1.. unless paired, in which case they take the
  // partner's label. Validity: a partial matching over existing blocks.
  std::vector<int> q_label(static_cast<std::size_t>(bq) + 1, 0);
  std::vector<bool> p_used(static_cast<std::size_t>(bp) + 1, false);
  for (const auto& [pb, qb] : pairing.pairs) {
    if (pb < 1 || pb > bp || qb < 1 || qb > bq)
      throw std::invalid_argument("connected_tensor: pairing references nonexistent block");
    if (p_used[static_cast<std::size_t>(pb)] || q_label[static_cast<std::size_t>(qb)] != 0)
      throw std::invalid_argument("connected_tensor: pairing is not a partial matching");
    p_used[static_cast<std::size_t>(pb)] = true;
    q_label[static_cast<std::size_t>(qb)] = pb;
  }
  for (int b = 1; b <= bq; ++b)
    if (q_label[static_cast<std::size_t>(b)] == 0)
      q_label[static_cast<std::size_t>(b)] = bp + b;

  Labels upper = p.upper_labels();
  Labels lower = p.lower_labels();
  for (int x : q.upper_labels()) upper.push_back(q_label[static_cast<std::size_t>(x)]);
  for (int x : q.lower_labels()) lower.push_back(q_label[static_cast<std::size_t>(x)]);
  return Partition::ker(upper, lower);
}

namespace {

// All partial matchings between {1..bp} and {1..bq}, invoked as
// visit(pairing). Enumerates subsets of p-blocks and injections into
// q-blocks.
template <typename F>
void for_each_matching(int bp, int bq, F&& visit) {
  BlockPairing pairing;
  std::vector<bool> q_used(static_cast<std::size_t>(bq) + 1, false);
  auto rec = [&](auto&& self, int pb) -> void {
    if (pb > bp) {
      visit(pairing);
      return;
    }
    self(self, pb + 1);  // pb unmatched
    for (int qb = 1; qb <= bq; ++qb) {
      if (q_used[static_cast<std::size_t>(qb)]) continue;
      q_used[static_cast<std::size_t>(qb)] = true;
      pairing.pairs.emplace_back(pb, qb);
      self(self, pb + 1);
      pairing.pairs.pop_back();
      q_used[static_cast<std::size_t>(qb)] = false;
    }
  };
  rec(rec, 1);
}

}  // namespace

std::vector<Partition> connected_tensor_set(const Partition& p, const Partition& q) {
  std::set<Partition> out;
  for_each_matching(p.block_count(), q.block_count(), [&](const BlockPairing& pairing) {
    out.insert(connected_tensor(p, q, pairing));
  });
  return {out.begin(), out.end()};
}

bool compatible(const Partition& p, const Partition& q) {
  if (p.lower_arity() != q.upper_arity())
    throw std::invalid_argument("compatible: lower arity of p must equal upper arity of q");
  return Partition::ker(p.lower_labels(), {}) == Partition::ker(q.upper_labels(), {});
}

Composition conditioned_compose(const Partition& q, const Partition& p) {
  if (!compatible(p, q)) throw IncompatiblePair();
  return compose(q, p);
}

std::vector<Partition> connected_composition_set(const Partition& q, const Partition& p) {
  if (!compatible(p, q)) throw IncompatiblePair();

  // Work with explicit block labels so joins can be tracked exactly. p's
  // blocks keep their ids; a q-block meeting the middle row is glued to the
  // p-block sharing that middle block, any other q-block gets a fresh id.
  const int bp = p.block_count();
  const int bq = q.block_count();
  std::vector<int> q_label(static_cast<std::size_t>(bq) + 1, 0);
  for (int t = 0; t < p.lower_arity(); ++t) {
    const int qb = q.upper_labels()[static_cast<std::size_t>(t)];
    q_label[static_cast<std::size_t>(qb)] = p.lower_labels()[static_cast<std::size_t>(t)];
  }
  std::vector<int> q_free;  // q-blocks without upper points
  for (int b = 1; b <= bq; ++b)
    if (q_label[static_cast<std::size_t>(b)] == 0) {
      q_label[static_cast<std::size_t>(b)] = bp + b;
      q_free.push_back(bp + b);
    }
  std::vector<bool> p_touches_lower(static_cast<std::size_t>(bp) + 1, false);
  for (int x : p.lower_labels()) p_touches_lower[static_cast<std::size_t>(x)] = true;
  std::vector<int> p_free;  // p-blocks without lower points
  for (int b = 1; b <= bp; ++b)
    if (!p_touches_lower[static_cast<std::size_t>(b)]) p_free.push_back(b);

  Labels g_base;
  g_base.reserve(q.lower_labels().size());
  for (int x : q.lower_labels()) g_base.push_back(q_label[static_cast<std::size_t>(x)]);

  std::set<Partition> out;
  const int np = static_cast<int>(p_free.size());
  const int nq = static_cast<int>(q_free.size());
  std::vector<int> join(static_cast<std::size_t>(nq) + 1, 0);
  std::vector<bool> used_q(static_cast<std::size_t>(nq), false);
  auto emit = [&](const std::vector<std::pair<int, int>>& pairs) {
    Labels g = g_base;
    for (auto& x : g)
      for (const auto& [pf, qf] : pairs)
        if (x == qf) x = pf;
    out.insert(Partition::ker(p.upper_labels(), g));
  };
  std::vector<std::pair<int, int>> pairs;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == np) {
      emit(pairs);
      return;
    }
    self(self, i + 1);
    for (int j = 0; j < nq; ++j) {
      if (used_q[static_cast<std::size_t>(j)]) continue;
      used_q[static_cast<std::size_t>(j)] = true;
      pairs.emplace_back(p_free[static_cast<std::size_t>(i)], q_free[static_cast<std::size_t>(j)]);
      self(self, i + 1);
      pairs.pop_back();
      used_q[static_cast<std::size_t>(j)] = false;
    }
  };
  rec(rec, 0);
  return {out.begin(), out.end()};
}

LoopFactors loop_factors(const Partition& q, const Partition& p) {
  if (!compatible(p, q)) throw IncompatiblePair();
  const int b = Partition::ker(p.lower_labels(), {}).block_count();
  const int loops = compose(q, p).loops;
  return {b - loops, b};
}

}  // namespace skewcat
