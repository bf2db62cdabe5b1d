#pragma once

#include <compare>
#include <map>
#include <string>

#include "skewcat/partition.hpp"

namespace skewcat {

// A reduced word in the infinite free product of Z_2: every generator a_i is
// its own inverse, so a word is a sequence of positive letters with no two
// adjacent letters equal. The empty word is the identity.
class Word {
 public:
  Word() = default;
  static Word from_letters(const Labels& letters);  // cancels to a fixpoint

  const Labels& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  int max_letter() const;
  Labels support() const;  // distinct letters, ascending

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word&) const = default;

 private:
  Labels letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

Word mul(const Word& u, const Word& v);
Word inv(const Word& u);
Word conj(const Word& u, const Word& by);  // by . u . by^-1
Word word_pow(const Word& u, int e);       // e >= 0

// A letter substitution. apply_map relabels each letter through phi and
// reduces; phi must be defined on every letter of the word.
using IndexMap = std::map<int, int>;

Word apply_map(const Word& w, const IndexMap& phi);

IndexMap identity_map(int n);
IndexMap transposition_map(int n, int i, int j);
IndexMap merge_map(int n, int from, int to);  // from -> to, identity elsewhere

// The word a_i a_j^{-1} read off ind(p); for a one-row partition this is
// a_{ind(p)}.
Word word_of_partition(const Partition& p);

// ker of the letter sequence, in P(|w|, 0).
Partition partition_of_word(const Word& w);

std::string to_text(const Word& w);  // "a1 a2 a1", identity renders as "e"

}  // namespace skewcat
