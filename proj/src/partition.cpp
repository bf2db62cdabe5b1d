#include "skewcat/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skewcat/util.hpp"

namespace skewcat {

Partition Partition::ker(const Labels& upper, const Labels& lower) {
  Partition p;
  p.upper_.reserve(upper.size());
  p.lower_.reserve(lower.size());
  std::map<int, int> relabel;
  auto canon = [&](int x) {
    if (x < 1) throw std::invalid_argument("partition labels must be >= 1");
    auto [it, fresh] = relabel.try_emplace(x, static_cast<int>(relabel.size()) + 1);
    (void)fresh;
    return it->second;
  };
  for (int x : upper) p.upper_.push_back(canon(x));
  for (int x : lower) p.lower_.push_back(canon(x));
  p.blocks_ = static_cast<int>(relabel.size());
  return p;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (auto c = upper_.size() <=> o.upper_.size(); c != 0) return c;
  if (auto c = lower_.size() <=> o.lower_.size(); c != 0) return c;
  if (auto c = upper_ <=> o.upper_; c != 0) return c;
  return lower_ <=> o.lower_;
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::uint64_t h = 1469598103934665603ULL;
  h = hash_combine(h, static_cast<std::uint64_t>(p.upper_arity()));
  for (int x : p.upper_labels()) h = hash_combine(h, static_cast<std::uint64_t>(x));
  h = hash_combine(h, 0xabcdefULL);
  for (int x : p.lower_labels()) h = hash_combine(h, static_cast<std::uint64_t>(x));
  return static_cast<std::size_t>(h);
}

Partition empty_partition() { return {}; }
Partition identity_partition() { return Partition::ker({1}, {1}); }
Partition cup() { return Partition::ker({}, {1, 1}); }
Partition cap() { return Partition::ker({1, 1}, {}); }
Partition primary_partition() { return Partition::ker({1, 1, 2}, {2, 1, 1}); }

Partition block_partition(int k, int l) {
  return Partition::ker(Labels(static_cast<std::size_t>(k), 1),
                        Labels(static_cast<std::size_t>(l), 1));
}

Partition involution(const Partition& p) {
  return Partition::ker(p.lower_labels(), p.upper_labels());
}

Partition tensor(const Partition& p, const Partition& q) {
  const int shift = p.block_count();
  Labels upper = p.upper_labels();
  Labels lower = p.lower_labels();
  for (int x : q.upper_labels()) upper.push_back(x + shift);
  for (int x : q.lower_labels()) lower.push_back(x + shift);
  return Partition::ker(upper, lower);
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

Composition compose(const Partition& q, const Partition& p) {
  if (p.lower_arity() != q.upper_arity())
    throw std::invalid_argument("compose: lower arity of p must equal upper arity of q");
  const int k = p.upper_arity();
  const int mid = p.lower_arity();
  const int l = q.lower_arity();

  // Nodes: [0,k) outer upper, [k,k+mid) middle, [k+mid,k+mid+l) outer lower.
  UnionFind uf(k + mid + l);
  std::map<std::pair<int, int>, int> first;  // (side, label) -> node
  auto glue = [&](int side, int label, int node) {
    auto [it, fresh] = first.try_emplace({side, label}, node);
    if (!fresh) uf.unite(node, it->second);
  };
  for (int i = 0; i < k; ++i) glue(0, p.upper_labels()[static_cast<std::size_t>(i)], i);
  for (int i = 0; i < mid; ++i) glue(0, p.lower_labels()[static_cast<std::size_t>(i)], k + i);
  for (int i = 0; i < mid; ++i) glue(1, q.upper_labels()[static_cast<std::size_t>(i)], k + i);
  for (int i = 0; i < l; ++i) glue(1, q.lower_labels()[static_cast<std::size_t>(i)], k + mid + i);

  std::map<int, bool> touches_outer;
  for (int v = 0; v < k + mid + l; ++v) {
    const bool outer = v < k || v >= k + mid;
    auto [it, fresh] = touches_outer.try_emplace(uf.find(v), outer);
    if (!fresh) it->second = it->second || outer;
  }
  int loops = 0;
  for (const auto& [root, outer] : touches_outer)
    if (!outer) ++loops;

  Labels upper, lower;
  upper.reserve(static_cast<std::size_t>(k));
  lower.reserve(static_cast<std::size_t>(l));
  for (int v = 0; v < k; ++v) upper.push_back(uf.find(v) + 1);
  for (int v = k + mid; v < k + mid + l; ++v) lower.push_back(uf.find(v) + 1);
  return {Partition::ker(upper, lower), loops};
}

Partition rotate(const Partition& p, Corner corner) {
  Labels upper = p.upper_labels();
  Labels lower = p.lower_labels();
  switch (corner) {
    case Corner::UpperLeft:
      if (upper.empty()) throw std::invalid_argument("rotate: upper row is empty");
      lower.insert(lower.begin(), upper.front());
      upper.erase(upper.begin());
      break;
    case Corner::LowerLeft:
      if (lower.empty()) throw std::invalid_argument("rotate: lower row is empty");
      upper.insert(upper.begin(), lower.front());
      lower.erase(lower.begin());
      break;
    case Corner::UpperRight:
      if (upper.empty()) throw std::invalid_argument("rotate: upper row is empty");
      lower.push_back(upper.back());
      upper.pop_back();
      break;
    case Corner::LowerRight:
      if (lower.empty()) throw std::invalid_argument("rotate: lower row is empty");
      upper.push_back(lower.back());
      lower.pop_back();
      break;
  }
  return Partition::ker(upper, lower);
}

std::vector<Partition> all_rotations(const Partition& p) {
  std::set<Partition> seen{p};
  std::vector<Partition> frontier{p};
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& x : frontier) {
      for (Corner c : {Corner::UpperLeft, Corner::LowerLeft, Corner::UpperRight,
                       Corner::LowerRight}) {
        const bool ok = (c == Corner::UpperLeft || c == Corner::UpperRight)
                            ? x.upper_arity() > 0
                            : x.lower_arity() > 0;
        if (!ok) continue;
        Partition r = rotate(x, c);
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool delta_hat(const Partition& p, const MultiIndexPair& m) {
  if (static_cast<int>(m.upper.size()) != p.upper_arity() ||
      static_cast<int>(m.lower.size()) != p.lower_arity())
    throw std::invalid_argument("delta_hat: arity mismatch");
  return Partition::ker(m) == p;
}

bool delta(const Partition& p, const MultiIndexPair& m) {
  if (static_cast<int>(m.upper.size()) != p.upper_arity() ||
      static_cast<int>(m.lower.size()) != p.lower_arity())
    throw std::invalid_argument("delta: arity mismatch");
  // Constant on every block of p: each block id sees a single entry value.
  std::vector<int> value(static_cast<std::size_t>(p.block_count()) + 1, 0);
  auto scan = [&](const Labels& row, const Labels& entries) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      int& v = value[static_cast<std::size_t>(row[i])];
      if (v == 0)
        v = entries[i];
      else if (v != entries[i])
        return false;
    }
    return true;
  };
  return scan(p.upper_labels(), m.upper) && scan(p.lower_labels(), m.lower);
}

namespace {

// Applies a block relabelling to p's rows and canonicalises.
Partition merge_blocks(const Partition& p, const std::vector<int>& block_image) {
  Labels upper, lower;
  upper.reserve(p.upper_labels().size());
  lower.reserve(p.lower_labels().size());
  for (int x : p.upper_labels()) upper.push_back(block_image[static_cast<std::size_t>(x)]);
  for (int x : p.lower_labels()) lower.push_back(block_image[static_cast<std::size_t>(x)]);
  return Partition::ker(upper, lower);
}

}  // namespace

std::vector<Partition> coarsenings(const Partition& p) {
  const int b = p.block_count();
  std::set<Partition> out;
  // Restricted growth strings over the block set enumerate its set partitions.
  std::vector<int> image(static_cast<std::size_t>(b) + 1, 0);
  auto rec = [&](auto&& self, int block, int used) -> void {
    if (block > b) {
      out.insert(merge_blocks(p, image));
      return;
    }
    for (int g = 1; g <= used + 1; ++g) {
      image[static_cast<std::size_t>(block)] = g;
      self(self, block + 1, std::max(used, g));
    }
  };
  rec(rec, 1, 0);
  return {out.begin(), out.end()};
}

std::vector<Partition> all_partitions(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("all_partitions: negative arity");
  const int n = k + l;
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(empty_partition());
    return out;
  }
  Labels rgs(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      Labels upper(rgs.begin(), rgs.begin() + k);
      Labels lower(rgs.begin() + k, rgs.end());
      out.push_back(Partition::ker(upper, lower));
      return;
    }
    for (int g = 1; g <= used + 1; ++g) {
      rgs[static_cast<std::size_t>(i)] = g;
      self(self, i + 1, std::max(used, g));
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Partition> all_partitions_up_to(int max_points) {
  std::vector<Partition> out;
  for (int total = 0; total <= max_points; ++total)
    for (int k = 0; k <= total; ++k) {
      auto part = all_partitions(k, total - k);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

std::string to_text(const Partition& p) {
  std::ostringstream os;
  auto row = [&](const Labels& r) {
    if (r.empty()) {
      os << "-";
      return;
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ' ';
      os << r[i];
    }
  };
  row(p.upper_labels());
  os << " / ";
  row(p.lower_labels());
  return os.str();
}

}  // namespace skewcat
