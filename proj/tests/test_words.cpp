#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "skewcat/closure.hpp"
#include "skewcat/subgroup.hpp"
#include "skewcat/verify.hpp"
#include "skewcat/word.hpp"

using namespace skewcat;

namespace {

Word random_word(std::mt19937_64& rng, int max_len, int max_letter) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> lab(1, max_letter);
  Labels letters(static_cast<std::size_t>(len(rng)));
  for (auto& x : letters) x = lab(rng);
  return Word::from_letters(letters);
}

// Reduction by repeatedly cancelling a randomly chosen adjacent equal pair;
// confluence means the result is independent of the order.
Word randomly_ordered_reduce(std::mt19937_64& rng, Labels letters) {
  while (true) {
    std::vector<std::size_t> cancellable;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] == letters[i + 1]) cancellable.push_back(i);
    if (cancellable.empty()) break;
    const std::size_t at = cancellable[rng() % cancellable.size()];
    letters.erase(letters.begin() + static_cast<long>(at),
                  letters.begin() + static_cast<long>(at) + 2);
  }
  return Word::from_letters(letters);
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> type;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(perm[j] - 1);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

}  // namespace

TEST_CASE("reduction, inverse, multiplication") {
  CHECK(Word::from_letters({1, 1, 2, 1, 1, 2}).is_identity());
  CHECK(inv(Word::from_letters({1, 2, 3})) == Word::from_letters({3, 2, 1}));
  CHECK_THROWS_AS(Word::from_letters({0}), std::invalid_argument);

  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 300; ++iter) {
    const Word u = random_word(rng, 12, 4);
    const Word v = random_word(rng, 12, 4);
    const Word w = random_word(rng, 12, 4);
    CHECK(mul(u, inv(u)).is_identity());
    CHECK(mul(inv(u), u).is_identity());
    CHECK(mul(mul(u, v), w) == mul(u, mul(v, w)));
    CHECK(mul(u, Word{}) == u);
  }
}

TEST_CASE("reduction is confluent") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 300; ++iter) {
    std::uniform_int_distribution<int> len(0, 14);
    std::uniform_int_distribution<int> lab(1, 3);
    Labels letters(static_cast<std::size_t>(len(rng)));
    for (auto& x : letters) x = lab(rng);
    const Word stack_reduced = Word::from_letters(letters);
    CHECK(randomly_ordered_reduce(rng, letters) == stack_reduced);
    CHECK(Word::from_letters(stack_reduced.letters()) == stack_reduced);
  }
}

TEST_CASE("letter substitution") {
  const Word probe = word_pow(Word::from_letters({1, 2, 1, 3}), 2);
  const Word image = apply_map(probe, merge_map(3, 3, 2));
  CHECK(image == word_pow(Word::from_letters({1, 2}), 4));
  const Word w = Word::from_letters({1, 2});
  CHECK(apply_map(w, identity_map(2)) == w);
  CHECK(apply_map(w, transposition_map(2, 1, 2)) == Word::from_letters({2, 1}));
  CHECK_THROWS_AS(apply_map(Word::from_letters({5}), identity_map(3)),
                  std::invalid_argument);
}

TEST_CASE("word bridge to partitions") {
  CHECK(word_of_partition(primary_partition()).is_identity());
  CHECK(word_of_partition(Partition::ker({1, 2, 1, 2, 1, 2}, {})) ==
        word_pow(Word::from_letters({1, 2}), 3));
  CHECK(word_of_partition(identity_partition()).is_identity());

  CHECK(partition_of_word(word_pow(Word::from_letters({1, 2}), 3)) == example_s::h3());
  CHECK(partition_of_word(Word{}) == empty_partition());
  CHECK(partition_of_word(word_pow(Word::from_letters({1, 2, 1, 3}), 2)) == example_s::r());
}

TEST_CASE("rotation changes the word by conjugation or inversion") {
  // Under any finite quotient the image of the rotated word is conjugate to
  // the image of the word or of its inverse, so the cycle type survives.
  const SubgroupOracle oracle = example_s::oracle(4);
  const FiniteQuotient* q = oracle.quotient_spec();
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> pts(0, 3);
    std::uniform_int_distribution<int> lab(1, 4);
    const int k = pts(rng), l = pts(rng);
    Labels up(static_cast<std::size_t>(k)), lo(static_cast<std::size_t>(l));
    for (auto& x : up) x = lab(rng);
    for (auto& x : lo) x = lab(rng);
    const Partition p = Partition::ker(up, lo);
    if (p.block_count() > 4) continue;
    const auto base_type = cycle_type(q->image_of(word_of_partition(p)));
    for (const auto& r : all_rotations(p)) {
      if (r.block_count() > 4) continue;
      CHECK(cycle_type(q->image_of(word_of_partition(r))) == base_type);
    }
  }
}

TEST_CASE("membership through the quotient oracle") {
  const SubgroupOracle ns = example_s::oracle(4);
  CHECK(ns.member(word_pow(Word::from_letters({1, 2}), 3)) == Verdict::In);
  CHECK(ns.member(word_pow(Word::from_letters({1, 2}), 4)) == Verdict::NotIn);
  CHECK(ns.member(Word{}) == Verdict::In);
  CHECK(ns.exact());
  CHECK_THROWS_AS(ns.member(Word::from_letters({5})), std::invalid_argument);
}

TEST_CASE("lifted membership") {
  const SubgroupOracle ns = example_s::oracle(4);
  Labels letters;
  for (int i = 0; i < 3; ++i) {
    letters.push_back(5);
    letters.push_back(7);
  }
  CHECK(lift_member(ns, Word::from_letters(letters)) == Verdict::In);
  CHECK(lift_member(ns, Word{}) == Verdict::In);

  BoundedSearchSpec spec;
  spec.rank = 2;
  spec.generators = {word_pow(Word::from_letters({1, 2}), 3)};
  spec.max_length = 8;
  spec.max_depth = 1;
  const SubgroupOracle search = SubgroupOracle::search(spec);
  CHECK(lift_member(search, Word::from_letters({3, 4, 5})) == Verdict::Unknown);
}

TEST_CASE("bounded search strategy") {
  // Depth-limited exploration answers In for reachable words and Unknown
  // beyond the horizon unless a separating quotient or saturation decides.
  BoundedSearchSpec spec;
  spec.rank = 2;
  spec.generators = {word_pow(Word::from_letters({1, 2}), 3)};
  spec.max_length = 12;
  spec.max_depth = 1;
  const SubgroupOracle search = SubgroupOracle::search(spec);
  CHECK_FALSE(search.exact());
  CHECK(search.member(word_pow(Word::from_letters({1, 2}), 3)) == Verdict::In);
  CHECK(search.member(inv(word_pow(Word::from_letters({1, 2}), 3))) == Verdict::In);
  CHECK(search.member(Word::from_letters({1, 2})) == Verdict::Unknown);

  BoundedSearchSpec with_sep = spec;
  with_sep.separating = *example_s::oracle(2).quotient_spec();
  const SubgroupOracle separated = SubgroupOracle::search(with_sep);
  CHECK(separated.member(Word::from_letters({1, 2})) == Verdict::NotIn);

  // No generators: the closure saturates at the trivial subgroup and becomes
  // exact, certifying NotIn without any quotient.
  BoundedSearchSpec trivial;
  trivial.rank = 3;
  const SubgroupOracle trivial_oracle = SubgroupOracle::search(trivial);
  CHECK(trivial_oracle.exact());
  CHECK(trivial_oracle.member(Word{}) == Verdict::In);
  CHECK(trivial_oracle.member(Word::from_letters({1, 2})) == Verdict::NotIn);
}

TEST_CASE("strong invariance detection") {
  const SubgroupOracle ns = example_s::oracle(4);
  const auto gens = example_s::subgroup_generators(4);
  const InvarianceResult res = is_strongly_invariant(ns, gens);
  REQUIRE(res.verdict == Verdict::NotIn);
  REQUIRE(res.witness.has_value());
  CHECK(ns.member(res.witness->image) == Verdict::NotIn);

  const SubgroupOracle trivial = SubgroupOracle::search({3, {}, 16, 6, std::nullopt});
  CHECK(is_strongly_invariant(trivial, {}).verdict == Verdict::In);
}

TEST_CASE("the N1/N2 sandwich") {
  const SubgroupOracle ns = example_s::oracle(4);
  const auto gens = example_s::subgroup_generators(4);
  const Sandwich sandwich = sandwich_n1_n2(ns, gens);

  CHECK(sandwich.n1_member(Word{}) == Verdict::In);
  CHECK(sandwich.n1_member(word_pow(Word::from_letters({1, 2, 1, 3}), 6)) == Verdict::In);
  CHECK(sandwich.n1_member(word_pow(Word::from_letters({1, 2, 1, 3}), 2)) == Verdict::NotIn);
  CHECK(sandwich.n1_member(word_pow(Word::from_letters({1, 2}), 3)) == Verdict::In);

  BoundedSearchSpec spec;
  spec.rank = 4;
  spec.generators = sandwich.n2_generators;
  spec.max_length = 8;
  spec.max_depth = 2;
  const SubgroupOracle n2 = SubgroupOracle::search(spec);
  CHECK(n2.member(Word::from_letters({1, 2})) == Verdict::In);
  CHECK(is_strongly_invariant(n2, sandwich.n2_generators).verdict == Verdict::In);
}

TEST_CASE("one-row word set is closed under group operations within bounds") {
  // Words of the one-row members of the derived truncation, taken up to
  // relabelling (membership of a word is membership of its kernel). Products,
  // inverses and letter conjugations that stay within the point bound land
  // back in the set.
  const int max_points = 8;
  const SubgroupOracle ns = example_s::oracle(4);
  std::set<Word> words;
  for (int k = 0; k <= max_points; ++k)
    for (const auto& p : all_partitions(k, 0)) {
      if (p.block_count() > 4) continue;
      if (member_exact(p, ns) == Verdict::In) words.insert(word_of_partition(p));
    }
  auto canonical = [](const Word& w) { return word_of_partition(partition_of_word(w)); };
  auto in_set = [&](const Word& w) { return words.count(canonical(w)) != 0; };

  for (const auto& w1 : words) {
    CHECK(in_set(inv(w1)));
    if (w1.length() + 2 <= max_points)
      for (int j = 1; j <= 4; ++j)
        CHECK(in_set(conj(w1, Word::from_letters({j}))));
    for (const auto& w2 : words) {
      if (w1.length() + w2.length() > max_points) continue;
      CHECK(in_set(mul(w1, w2)));
    }
  }
}

TEST_CASE("presentation relations") {
  const auto relations = presentation_relations({{1, 2, 1, 2, 1, 2}}, 4);
  REQUIRE(relations.size() == 3);
  CHECK(relations[0].indices.empty());
  CHECK(relations[1].indices.empty());
  CHECK(relations[2].indices == Labels{1, 2, 1, 2, 1, 2});
  CHECK(relations[2].relation.find("u(f1,1)") != std::string::npos);

  CHECK(presentation_relations({}, 3).size() == 2);
  CHECK_THROWS_AS(presentation_relations({{5}}, 4), std::invalid_argument);
}
