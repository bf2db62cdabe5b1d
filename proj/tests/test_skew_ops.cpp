#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "skewcat/skew_ops.hpp"

using namespace skewcat;

namespace {

Partition random_partition(std::mt19937_64& rng, int max_points) {
  std::uniform_int_distribution<int> pts(0, max_points);
  const int total = pts(rng);
  std::uniform_int_distribution<int> split(0, total);
  const int k = split(rng);
  std::uniform_int_distribution<int> lab(1, 4);
  Labels up(static_cast<std::size_t>(k)), lo(static_cast<std::size_t>(total - k));
  for (auto& x : up) x = lab(rng);
  for (auto& x : lo) x = lab(rng);
  return Partition::ker(up, lo);
}

long long matching_count(int bp, int bq) {
  // sum over k of k! C(bp,k) C(bq,k)
  auto choose = [](int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  long long total = 0;
  for (int k = 0; k <= std::min(bp, bq); ++k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    total += f * choose(bp, k) * choose(bq, k);
  }
  return total;
}

}  // namespace

TEST_CASE("connected tensor product") {
  // Displayed example: join the first blocks of ker((1,1,2),(2,2)) and
  // ker((1,1),(1)).
  const Partition p = Partition::ker({1, 1, 2}, {2, 2});
  const Partition q = Partition::ker({1, 1}, {1});
  const Partition joined = connected_tensor(p, q, {{{1, 1}}});
  CHECK(joined == Partition::ker({1, 1, 2, 1, 1}, {2, 2, 1}));

  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const Partition a = random_partition(rng, 5);
    const Partition b = random_partition(rng, 5);
    CHECK(connected_tensor(a, b, {}) == tensor(a, b));
  }

  CHECK_THROWS_AS(connected_tensor(p, q, {{{3, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(connected_tensor(p, q, {{{1, 1}, {2, 1}}}), std::invalid_argument);
}

TEST_CASE("the primary partition arises as a connected tensor product") {
  // cap joined onto a rotation of cup (x) identity realises the labelling
  // ((1,1,2),(2,1,1)).
  const Partition rotated = Partition::ker({1}, {1, 2, 2});
  const auto rotations = all_rotations(tensor(cup(), identity_partition()));
  CHECK(std::find(rotations.begin(), rotations.end(), rotated) != rotations.end());
  CHECK(connected_tensor(cap(), rotated, {{{1, 2}}}) == primary_partition());
}

TEST_CASE("connected tensor enumeration") {
  const auto l = connected_tensor_set(identity_partition(), identity_partition());
  CHECK(l == std::vector<Partition>{Partition::ker({1, 1}, {1, 1}),
                                    Partition::ker({1, 2}, {1, 2})});
  const Partition q = Partition::ker({1, 2}, {2});
  CHECK(connected_tensor_set(empty_partition(), q) == std::vector<Partition>{q});

  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 100; ++iter) {
    const Partition a = random_partition(rng, 4);
    const Partition b = random_partition(rng, 4);
    CHECK(static_cast<long long>(connected_tensor_set(a, b).size()) ==
          matching_count(a.block_count(), b.block_count()));
  }
}

TEST_CASE("distinct pairings give distinct kernels") {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 60; ++iter) {
    const Partition a = random_partition(rng, 4);
    const Partition b = random_partition(rng, 4);
    // The enumeration size equals the matching count, so no two matchings
    // collide on a kernel.
    CHECK(static_cast<long long>(connected_tensor_set(a, b).size()) ==
          matching_count(a.block_count(), b.block_count()));
  }
}

TEST_CASE("compatibility") {
  CHECK(compatible(cup(), cap()));
  CHECK_FALSE(compatible(tensor(identity_partition(), identity_partition()), cap()));
  CHECK_THROWS_AS(compatible(cup(), identity_partition()), std::invalid_argument);

  // The three figure partitions: p1 pairs with p2 but not with p3
  // (encodings read off the pictures).
  const Partition p1 = Partition::ker({1, 1, 2}, {2, 2});
  const Partition p2 = Partition::ker({1, 1}, {1});
  const Partition p3 = Partition::ker({1, 2}, {2});
  CHECK(compatible(p1, p2));
  CHECK_FALSE(compatible(p1, p3));

  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    const Partition p = random_partition(rng, 6);
    const int l2 = static_cast<int>(rng() % 4);
    std::uniform_int_distribution<int> lab(1, 4);
    Labels up(static_cast<std::size_t>(p.lower_arity())), lo(static_cast<std::size_t>(l2));
    for (auto& x : up) x = lab(rng);
    for (auto& x : lo) x = lab(rng);
    const Partition q = Partition::ker(up, lo);
    CHECK(compatible(p, q) == compatible(involution(q), involution(p)));
  }
}

TEST_CASE("conditioned composition") {
  const Composition c = conditioned_compose(cap(), cup());
  CHECK(c.result == empty_partition());
  CHECK(c.loops == 1);
  CHECK(conditioned_compose(identity_partition(), identity_partition()).result ==
        identity_partition());

  // Distinct failure modes: arity mismatch vs incompatibility.
  CHECK_THROWS_AS(conditioned_compose(identity_partition(), cap()), std::invalid_argument);
  CHECK_THROWS_AS(
      conditioned_compose(cap(), tensor(identity_partition(), identity_partition())),
      IncompatiblePair);

  std::mt19937_64 rng(37);
  int compatible_seen = 0;
  while (compatible_seen < 100) {
    const Partition p = random_partition(rng, 6);
    const int l2 = static_cast<int>(rng() % 4);
    std::uniform_int_distribution<int> lab(1, 4);
    Labels up(static_cast<std::size_t>(p.lower_arity())), lo(static_cast<std::size_t>(l2));
    for (auto& x : up) x = lab(rng);
    for (auto& x : lo) x = lab(rng);
    const Partition q = Partition::ker(up, lo);
    if (!compatible(p, q)) continue;
    ++compatible_seen;
    const Composition lhs = conditioned_compose(q, p);
    const Composition rhs = compose(q, p);
    CHECK(lhs.result == rhs.result);
    CHECK(lhs.loops == rhs.loops);
  }
}

TEST_CASE("connected conditioned composition set") {
  CHECK(connected_composition_set(cap(), cup()) ==
        std::vector<Partition>{empty_partition()});
  CHECK(connected_composition_set(identity_partition(), identity_partition()) ==
        std::vector<Partition>{identity_partition()});
  CHECK_THROWS_AS(
      connected_composition_set(cap(), tensor(identity_partition(), identity_partition())),
      IncompatiblePair);

  // Two surviving upper-only blocks, one surviving lower-only block: the
  // empty joining plus two single joins.
  const Partition p = Partition::ker({1, 2, 3}, {3});
  const Partition q = Partition::ker({1}, {1, 2});
  CHECK(connected_composition_set(q, p).size() == 3);

  std::mt19937_64 rng(41);
  int seen = 0;
  while (seen < 100) {
    const Partition p2 = random_partition(rng, 5);
    std::uniform_int_distribution<int> lab(1, 4);
    Labels up(static_cast<std::size_t>(p2.lower_arity()));
    Labels lo(static_cast<std::size_t>(rng() % 4));
    for (auto& x : up) x = lab(rng);
    for (auto& x : lo) x = lab(rng);
    const Partition q2 = Partition::ker(up, lo);
    if (!compatible(p2, q2)) continue;
    ++seen;
    const auto m = connected_composition_set(q2, p2);
    const Partition base = conditioned_compose(q2, p2).result;
    CHECK(std::find(m.begin(), m.end(), base) != m.end());
    const auto joins = coarsenings(base);
    for (const auto& r : m)
      CHECK(std::binary_search(joins.begin(), joins.end(), r));
  }
}

TEST_CASE("loop factors") {
  const LoopFactors cupcap = loop_factors(cap(), cup());
  CHECK(cupcap.a == 0);
  CHECK(cupcap.b == 1);
  const LoopFactors ident = loop_factors(identity_partition(), identity_partition());
  CHECK(ident.a == 1);
  CHECK(ident.b == 1);

  std::mt19937_64 rng(43);
  int seen = 0;
  while (seen < 100) {
    const Partition p = random_partition(rng, 5);
    std::uniform_int_distribution<int> lab(1, 4);
    Labels up(static_cast<std::size_t>(p.lower_arity()));
    Labels lo(static_cast<std::size_t>(rng() % 4));
    for (auto& x : up) x = lab(rng);
    for (auto& x : lo) x = lab(rng);
    const Partition q = Partition::ker(up, lo);
    if (!compatible(p, q)) continue;
    ++seen;
    const LoopFactors lf = loop_factors(q, p);
    CHECK(lf.b == Partition::ker(p.lower_labels(), {}).block_count());
    CHECK(lf.a == lf.b - conditioned_compose(q, p).loops);
    if (conditioned_compose(q, p).loops == 0) CHECK(lf.a == lf.b);
  }
}
