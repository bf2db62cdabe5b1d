#include "skewcat/word.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skewcat/util.hpp"

namespace skewcat {

Word Word::from_letters(const Labels& letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (int x : letters) {
    if (x < 1) throw std::invalid_argument("word letters must be >= 1");
    if (!w.letters_.empty() && w.letters_.back() == x)
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

int Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Labels Word::support() const {
  std::set<int> s(letters_.begin(), letters_.end());
  return {s.begin(), s.end()};
}

std::size_t WordHash::operator()(const Word& w) const {
  std::uint64_t h = 14695981039346656037ULL;
  for (int x : w.letters()) h = hash_combine(h, static_cast<std::uint64_t>(x));
  return static_cast<std::size_t>(h);
}

Word mul(const Word& u, const Word& v) {
  Labels cat = u.letters();
  cat.insert(cat.end(), v.letters().begin(), v.letters().end());
  return Word::from_letters(cat);
}

Word inv(const Word& u) {
  Labels rev(u.letters().rbegin(), u.letters().rend());
  return Word::from_letters(rev);
}

Word conj(const Word& u, const Word& by) { return mul(mul(by, u), inv(by)); }

Word word_pow(const Word& u, int e) {
  if (e < 0) throw std::invalid_argument("word_pow: negative exponent");
  Word out;
  for (int i = 0; i < e; ++i) out = mul(out, u);
  return out;
}

Word apply_map(const Word& w, const IndexMap& phi) {
  Labels image;
  image.reserve(w.letters().size());
  for (int x : w.letters()) {
    auto it = phi.find(x);
    if (it == phi.end())
      throw std::invalid_argument("apply_map: map undefined on letter " + std::to_string(x));
    image.push_back(it->second);
  }
  return Word::from_letters(image);
}

IndexMap identity_map(int n) {
  IndexMap m;
  for (int i = 1; i <= n; ++i) m[i] = i;
  return m;
}

IndexMap transposition_map(int n, int i, int j) {
  IndexMap m = identity_map(n);
  m[i] = j;
  m[j] = i;
  return m;
}

IndexMap merge_map(int n, int from, int to) {
  IndexMap m = identity_map(n);
  m[from] = to;
  return m;
}

Word word_of_partition(const Partition& p) {
  Labels letters = p.upper_labels();
  letters.insert(letters.end(), p.lower_labels().rbegin(), p.lower_labels().rend());
  return Word::from_letters(letters);
}

Partition partition_of_word(const Word& w) { return Partition::ker(w.letters(), {}); }

std::string to_text(const Word& w) {
  if (w.is_identity()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) os << ' ';
    os << 'a' << w.letters()[i];
  }
  return os.str();
}

}  // namespace skewcat
