#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "skewcat/partition.hpp"

using namespace skewcat;

namespace {

Labels random_labels(std::mt19937_64& rng, int len, int max_label) {
  std::uniform_int_distribution<int> dist(1, max_label);
  Labels out(static_cast<std::size_t>(len));
  for (auto& x : out) x = dist(rng);
  return out;
}

Partition random_partition(std::mt19937_64& rng, int max_points) {
  std::uniform_int_distribution<int> pts(0, max_points);
  const int total = pts(rng);
  std::uniform_int_distribution<int> split(0, total);
  const int k = split(rng);
  return Partition::ker(random_labels(rng, k, 4), random_labels(rng, total - k, 4));
}

// Independent component count: boolean adjacency + transitive closure, no
// union-find. Nodes are the stacked diagram of q after p.
int middle_only_components(const Partition& q, const Partition& p) {
  const int k = p.upper_arity(), mid = p.lower_arity(), l = q.lower_arity();
  const int n = k + mid + l;
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = true;
  auto label_at = [&](int side, int v) {
    if (side == 0)
      return v < k ? p.upper_labels()[static_cast<std::size_t>(v)]
                   : p.lower_labels()[static_cast<std::size_t>(v - k)];
    return v < k + mid ? q.upper_labels()[static_cast<std::size_t>(v - k)]
                       : q.lower_labels()[static_cast<std::size_t>(v - k - mid)];
  };
  auto connect_side = [&](int side, int lo, int hi) {
    for (int a = lo; a < hi; ++a)
      for (int b = lo; b < hi; ++b)
        if (label_at(side, a) == label_at(side, b))
          adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  };
  connect_side(0, 0, k + mid);
  connect_side(1, k, n);
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] &&
            adj[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)])
          adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  std::set<int> middle_roots, outer_roots;
  for (int v = 0; v < n; ++v) {
    int root = 0;
    while (!adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(root)]) ++root;
    if (v >= k && v < k + mid)
      middle_roots.insert(root);
    else
      outer_roots.insert(root);
  }
  int count = 0;
  for (int root : middle_roots)
    if (!outer_roots.count(root)) ++count;
  return count;
}

long long bell_number(int n) {
  std::vector<std::vector<long long>> tri{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> row{tri.back().back()};
    for (long long x : tri.back()) row.push_back(row.back() + x);
    tri.push_back(std::move(row));
  }
  return tri[static_cast<std::size_t>(n)][0];
}

}  // namespace

TEST_CASE("kernel and canonical labelling") {
  const Partition primary = Partition::ker({3, 3, 7}, {7, 3, 3});
  CHECK(primary == primary_partition());
  CHECK(primary.ind().upper == Labels{1, 1, 2});
  CHECK(primary.ind().lower == Labels{2, 1, 1});
  CHECK(primary.block_count() == 2);

  CHECK(Partition::ker({}, {}) == empty_partition());
  CHECK(empty_partition().block_count() == 0);

  const Partition p = Partition::ker({2, 5}, {5, 9});
  CHECK(p.ind().upper == Labels{1, 2});
  CHECK(p.ind().lower == Labels{2, 3});

  CHECK(identity_partition().ind().upper == Labels{1});
  CHECK(identity_partition().ind().lower == Labels{1});
  CHECK(Partition::ker({4, 4}, {}).ind().upper == Labels{1, 1});

  CHECK_THROWS_AS(Partition::ker({0}, {}), std::invalid_argument);
}

TEST_CASE("kernel round trip and lexicographic minimality") {
  std::mt19937_64 rng(20230811);
  for (int iter = 0; iter < 300; ++iter) {
    const Partition p = random_partition(rng, 7);
    CHECK(Partition::ker(p.ind()) == p);
  }
  for (int iter = 0; iter < 300; ++iter) {
    const int k = static_cast<int>(rng() % 4), l = static_cast<int>(rng() % 4);
    const Labels up = random_labels(rng, k, 5), lo = random_labels(rng, l, 5);
    const Partition p = Partition::ker(up, lo);
    const MultiIndexPair ind = p.ind();
    Labels flat_ind = ind.upper;
    flat_ind.insert(flat_ind.end(), ind.lower.begin(), ind.lower.end());
    Labels flat_m = up;
    flat_m.insert(flat_m.end(), lo.begin(), lo.end());
    CHECK(flat_ind <= flat_m);
  }
}

TEST_CASE("involution") {
  CHECK(involution(identity_partition()) == identity_partition());
  CHECK(involution(cup()) == cap());
  CHECK(involution(primary_partition()) == Partition::ker({1, 2, 2}, {2, 2, 1}));
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const Partition p = random_partition(rng, 7);
    CHECK(involution(involution(p)) == p);
  }
}

TEST_CASE("tensor product") {
  const Partition p = primary_partition();
  CHECK(tensor(empty_partition(), p) == p);
  CHECK(tensor(p, empty_partition()) == p);
  CHECK(tensor(identity_partition(), identity_partition()) ==
        Partition::ker({1, 2}, {1, 2}));
  CHECK(tensor(cup(), cap()) == Partition::ker({1, 1}, {2, 2}));
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const Partition a = random_partition(rng, 4);
    const Partition b = random_partition(rng, 4);
    const Partition c = random_partition(rng, 4);
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(tensor(a, b).block_count() == a.block_count() + b.block_count());
  }
}

TEST_CASE("composition and loops") {
  const Composition closed = compose(cap(), cup());
  CHECK(closed.result == empty_partition());
  CHECK(closed.loops == 1);
  const Composition id2 = compose(identity_partition(), identity_partition());
  CHECK(id2.result == identity_partition());
  CHECK(id2.loops == 0);
  CHECK_THROWS_AS(compose(cup(), cup()), std::invalid_argument);

  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 300) {
    const Partition p = random_partition(rng, 6);
    const int l2 = static_cast<int>(rng() % 4);
    const Partition q =
        Partition::ker(random_labels(rng, p.lower_arity(), 4), random_labels(rng, l2, 4));
    const Composition c = compose(q, p);
    CHECK(c.loops == middle_only_components(q, p));
    ++done;
  }
}

TEST_CASE("rotation") {
  CHECK(rotate(cup(), Corner::LowerLeft) == identity_partition());
  CHECK(rotate(identity_partition(), Corner::UpperLeft) == cup());
  CHECK_THROWS_AS(rotate(cup(), Corner::UpperLeft), std::invalid_argument);
  CHECK_THROWS_AS(rotate(cap(), Corner::LowerLeft), std::invalid_argument);

  Partition p = primary_partition();
  for (int i = 0; i < 3; ++i) p = rotate(p, Corner::LowerLeft);
  CHECK(p == Partition::ker({1, 1, 2, 1, 1, 2}, {}));

  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    const Partition q = random_partition(rng, 7);
    if (q.upper_arity() > 0) {
      CHECK(rotate(rotate(q, Corner::UpperLeft), Corner::LowerLeft) == q);
      CHECK(rotate(rotate(q, Corner::UpperRight), Corner::LowerRight) == q);
      CHECK(rotate(q, Corner::UpperLeft).block_count() == q.block_count());
    }
    if (q.lower_arity() > 0) {
      CHECK(rotate(rotate(q, Corner::LowerLeft), Corner::UpperLeft) == q);
      CHECK(rotate(rotate(q, Corner::LowerRight), Corner::UpperRight) == q);
    }
  }
}

TEST_CASE("delta indicators") {
  CHECK(delta_hat(cup(), {{}, {5, 5}}));
  CHECK_FALSE(delta_hat(cup(), {{}, {1, 2}}));
  CHECK(delta_hat(primary_partition(), {{3, 3, 7}, {7, 3, 3}}));

  const Partition two_strands = tensor(identity_partition(), identity_partition());
  CHECK(delta(two_strands, {{1, 1}, {1, 1}}));
  CHECK_FALSE(delta_hat(two_strands, {{1, 1}, {1, 1}}));
  CHECK(delta(primary_partition(), primary_partition().ind()));
  CHECK_FALSE(delta(cup(), {{}, {1, 2}}));
  CHECK_THROWS_AS(delta_hat(cup(), {{1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(delta(cup(), {{}, {1}}), std::invalid_argument);
}

TEST_CASE("delta indicators against orbit enumeration") {
  // Over all labellings with entries in 1..4: delta_hat hits exactly the
  // labellings with equal kernel, delta exactly those whose kernel coarsens.
  for (const auto& p : all_partitions_up_to(4)) {
    const auto joins = coarsenings(p);
    const int k = p.upper_arity(), l = p.lower_arity();
    Labels flat(static_cast<std::size_t>(k + l), 1);
    while (true) {
      const MultiIndexPair m{{flat.begin(), flat.begin() + k}, {flat.begin() + k, flat.end()}};
      const Partition kerm = Partition::ker(m);
      CHECK(delta_hat(p, m) == (kerm == p));
      CHECK(delta(p, m) == std::binary_search(joins.begin(), joins.end(), kerm));
      std::size_t pos = 0;
      while (pos < flat.size() && flat[pos] == 4) flat[pos++] = 1;
      if (pos == flat.size()) break;
      ++flat[pos];
    }
  }
}

TEST_CASE("coarsenings") {
  CHECK(coarsenings(identity_partition()) ==
        std::vector<Partition>{identity_partition()});
  const Partition two_strands = tensor(identity_partition(), identity_partition());
  const auto cs = coarsenings(two_strands);
  CHECK(cs.size() == 2);
  CHECK(std::binary_search(cs.begin(), cs.end(), two_strands));
  CHECK(std::binary_search(cs.begin(), cs.end(), block_partition(2, 2)));

  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 60; ++iter) {
    const Partition p = random_partition(rng, 6);
    CHECK(static_cast<long long>(coarsenings(p).size()) == bell_number(p.block_count()));
  }
}

TEST_CASE("enumeration and text") {
  CHECK(all_partitions(0, 0).size() == 1);
  CHECK(all_partitions(2, 1).size() == 5);   // Bell(3)
  CHECK(all_partitions(2, 2).size() == 15);  // Bell(4)
  CHECK(all_partitions_up_to(4).size() == 104);
  CHECK(to_text(primary_partition()) == "1 1 2 / 2 1 1");
  CHECK(to_text(cup()) == "- / 1 1");
}
