#include "skewcat/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "skewcat/util.hpp"

namespace skewcat {

std::string to_text(Verdict v) {
  switch (v) {
    case Verdict::In: return "In";
    case Verdict::NotIn: return "NotIn";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

void FiniteQuotient::validate() const {
  if (rank < 1) throw std::invalid_argument("quotient oracle: rank must be >= 1");
  if (degree < 1) throw std::invalid_argument("quotient oracle: degree must be >= 1");
  if (static_cast<int>(images.size()) != rank)
    throw std::invalid_argument("quotient oracle: one permutation per generator required");
  for (const auto& perm : images) {
    if (static_cast<int>(perm.size()) != degree)
      throw std::invalid_argument("quotient oracle: permutation size != degree");
    std::vector<bool> seen(static_cast<std::size_t>(degree) + 1, false);
    for (int x : perm) {
      if (x < 1 || x > degree || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("quotient oracle: images must be permutations of 1..degree");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
}

std::vector<int> FiniteQuotient::image_of(const Word& w) const {
  std::vector<int> cur(static_cast<std::size_t>(degree));
  std::iota(cur.begin(), cur.end(), 1);
  for (int letter : w.letters()) {
    if (letter > rank)
      throw std::invalid_argument("quotient oracle: letter exceeds ambient rank");
    const auto& g = images[static_cast<std::size_t>(letter - 1)];
    for (auto& x : cur) x = g[static_cast<std::size_t>(x - 1)];
  }
  return cur;
}

bool FiniteQuotient::maps_to_identity(const Word& w) const {
  const auto img = image_of(w);
  for (int x = 1; x <= degree; ++x)
    if (img[static_cast<std::size_t>(x - 1)] != x) return false;
  return true;
}

namespace {

constexpr std::size_t kSearchSetGuard = 2'000'000;

struct ClosedSet {
  std::unordered_set<Word, WordHash> words;
  bool exhausted = false;  // fixpoint reached with nothing pruned by bounds
};

// Breadth-first closure of the generators under inverse, conjugation by
// single letters, transposition relabellings and products with generators.
// These steps reach every element of the S_n-invariant normal closure in the
// limit; the bounds make the computed set an under-approximation.
ClosedSet saturate(const BoundedSearchSpec& spec) {
  ClosedSet out;
  bool pruned = false;
  std::vector<Word> gens;
  for (const auto& g : spec.generators) {
    if (g.max_letter() > spec.rank)
      throw std::invalid_argument("search oracle: generator letter exceeds ambient rank");
    if (g.length() > spec.max_length) {
      pruned = true;
      continue;
    }
    gens.push_back(g);
    gens.push_back(inv(g));
  }
  std::vector<Word> frontier{Word{}};
  out.words.insert(Word{});
  for (const auto& g : gens)
    if (out.words.insert(g).second) frontier.push_back(g);

  auto offer = [&](Word w, std::vector<Word>& next) {
    if (w.length() > spec.max_length) {
      pruned = true;
      return;
    }
    if (out.words.size() >= kSearchSetGuard)
      throw ResourceError("search oracle: closed set exceeds guard");
    if (out.words.insert(w).second) next.push_back(std::move(w));
  };

  bool fixpoint = false;
  for (int depth = 0; depth < spec.max_depth && !fixpoint; ++depth) {
    std::vector<Word> next;
    for (const auto& x : frontier) {
      offer(inv(x), next);
      for (int j = 1; j <= spec.rank; ++j) {
        const Word aj = Word::from_letters({j});
        offer(conj(x, aj), next);
      }
      for (int i = 1; i <= spec.rank; ++i)
        for (int j = i + 1; j <= spec.rank; ++j)
          offer(apply_map(x, transposition_map(spec.rank, i, j)), next);
      for (const auto& g : gens) {
        offer(mul(x, g), next);
        offer(mul(g, x), next);
      }
    }
    fixpoint = next.empty();
    frontier = std::move(next);
  }
  // Only a fixpoint reached with nothing pruned enumerates all of N.
  out.exhausted = fixpoint && !pruned;
  return out;
}

}  // namespace

struct SubgroupOracle::Impl {
  std::optional<FiniteQuotient> quotient;
  std::optional<BoundedSearchSpec> search;
  ClosedSet closed;  // populated for search oracles
};

SubgroupOracle SubgroupOracle::quotient(FiniteQuotient q) {
  q.validate();
  auto impl = std::make_shared<Impl>();
  impl->quotient = std::move(q);
  SubgroupOracle o;
  o.impl_ = std::move(impl);
  return o;
}

SubgroupOracle SubgroupOracle::search(BoundedSearchSpec spec) {
  if (spec.rank < 1) throw std::invalid_argument("search oracle: rank must be >= 1");
  if (spec.max_length < 1 || spec.max_depth < 0)
    throw std::invalid_argument("search oracle: bounds must be positive");
  if (spec.separating) spec.separating->validate();
  auto impl = std::make_shared<Impl>();
  impl->closed = saturate(spec);
  impl->search = std::move(spec);
  SubgroupOracle o;
  o.impl_ = std::move(impl);
  return o;
}

int SubgroupOracle::rank() const {
  return impl_->quotient ? impl_->quotient->rank : impl_->search->rank;
}

bool SubgroupOracle::exact() const {
  return impl_->quotient.has_value() || impl_->closed.exhausted;
}

const BoundedSearchSpec* SubgroupOracle::search_spec() const {
  return impl_->search ? &*impl_->search : nullptr;
}

const FiniteQuotient* SubgroupOracle::quotient_spec() const {
  return impl_->quotient ? &*impl_->quotient : nullptr;
}

Verdict SubgroupOracle::member(const Word& w) const {
  if (w.max_letter() > rank())
    throw std::invalid_argument("member: letter exceeds ambient rank");
  if (impl_->quotient)
    return impl_->quotient->maps_to_identity(w) ? Verdict::In : Verdict::NotIn;
  if (impl_->closed.words.count(w)) return Verdict::In;
  if (impl_->search->separating && !impl_->search->separating->maps_to_identity(w))
    return Verdict::NotIn;
  if (impl_->closed.exhausted) return Verdict::NotIn;
  return Verdict::Unknown;
}

Verdict lift_member(const SubgroupOracle& oracle, const Word& w) {
  const Labels support = w.support();
  if (static_cast<int>(support.size()) > oracle.rank()) return Verdict::Unknown;
  IndexMap phi;
  int next = 1;
  for (int letter : support) phi[letter] = next++;
  return oracle.member(apply_map(w, phi));
}

InvarianceResult is_strongly_invariant(const SubgroupOracle& oracle,
                                       const std::vector<Word>& generators) {
  const int n = oracle.rank();
  bool unknown = false;
  auto check = [&](const Word& g, const IndexMap& phi,
                   const std::string& desc) -> std::optional<InvarianceResult> {
    const Word image = apply_map(g, phi);
    switch (oracle.member(image)) {
      case Verdict::In:
        return std::nullopt;
      case Verdict::NotIn:
        return InvarianceResult{Verdict::NotIn, InvarianceWitness{g, desc, image}};
      case Verdict::Unknown:
        unknown = true;
        return std::nullopt;
    }
    return std::nullopt;
  };
  for (const Word& g : generators) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::ostringstream desc;
        desc << "transposition " << i << "<->" << j;
        if (auto r = check(g, transposition_map(n, i, j), desc.str())) return *r;
      }
    for (int from = 1; from <= n; ++from)
      for (int to = 1; to <= n; ++to) {
        if (from == to) continue;
        std::ostringstream desc;
        desc << "merge " << from << "->" << to;
        if (auto r = check(g, merge_map(n, from, to), desc.str())) return *r;
      }
  }
  return {unknown ? Verdict::Unknown : Verdict::In, std::nullopt};
}

namespace {

// All maps support -> 1..n, applied to w.
template <typename F>
void for_each_support_image(const Word& w, int n, F&& visit) {
  const Labels support = w.support();
  const std::size_t s = support.size();
  std::vector<int> choice(s, 1);
  while (true) {
    IndexMap phi;
    for (std::size_t i = 0; i < s; ++i) phi[support[i]] = choice[i];
    visit(apply_map(w, phi));
    std::size_t pos = 0;
    while (pos < s && choice[pos] == n) choice[pos++] = 1;
    if (pos == s) break;
    ++choice[pos];
  }
}

}  // namespace

Sandwich sandwich_n1_n2(const SubgroupOracle& oracle, const std::vector<Word>& generators) {
  Sandwich out;
  const int n = oracle.rank();
  out.n1_member = [oracle, n](const Word& x) {
    if (x.max_letter() > n)
      throw std::invalid_argument("n1_member: letter exceeds ambient rank");
    Verdict verdict = Verdict::In;
    for_each_support_image(x, n, [&](const Word& image) {
      switch (oracle.member(image)) {
        case Verdict::In:
          break;
        case Verdict::NotIn:
          verdict = Verdict::NotIn;
          break;
        case Verdict::Unknown:
          if (verdict == Verdict::In) verdict = Verdict::Unknown;
          break;
      }
    });
    return verdict;
  };
  std::set<Word> n2;
  for (const Word& g : generators)
    for_each_support_image(g, n, [&](const Word& image) {
      if (!image.is_identity()) n2.insert(image);
    });
  out.n2_generators = {n2.begin(), n2.end()};
  return out;
}

std::vector<RelationDescriptor> presentation_relations(
    const std::vector<Labels>& relator_indices, int n) {
  if (n < 1) throw std::invalid_argument("presentation_relations: n must be >= 1");
  std::vector<RelationDescriptor> out;
  out.push_back({{}, "u(i,j)* = u(i,j) for all i,j in 1.." + std::to_string(n)});
  out.push_back({{}, "u(i,j)^2 are central projections for all i,j in 1.." + std::to_string(n)});
  for (const Labels& idx : relator_indices) {
    for (int x : idx)
      if (x < 1 || x > n)
        throw std::invalid_argument("presentation_relations: relator index exceeds n");
    std::ostringstream rel;
    rel << "sum over f in [" << n << "]^" << idx.size() << " of ";
    if (idx.empty()) {
      rel << "1 = 1";
    } else {
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t) rel << " ";
        rel << "u(f" << (t + 1) << "," << idx[t] << ")";
      }
      rel << " = 1";
    }
    out.push_back({idx, rel.str()});
  }
  return out;
}

}  // namespace skewcat
