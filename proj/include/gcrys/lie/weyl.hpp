#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gcrys::lie {

// GL_{n+1}; Dynkin nodes 1..n
struct RankSpec {
  int n = 1;
  RankSpec() = default;
  explicit RankSpec(int rank);
  int size() const { return n + 1; }
  int longest_length() const { return n * (n + 1) / 2; }
  friend bool operator==(RankSpec, RankSpec) = default;
};

// Permutation in one-line form, 0-based: perm[p] is the column of the nonzero
// entry in row p of the permutation matrix.
using Perm = std::vector<int>;

Perm word_permutation(RankSpec r, const std::vector<int>& letters);
int inversions(const Perm& p);

class ReducedWord {
 public:
  ReducedWord() = default;
  // throws std::invalid_argument if a letter is out of range or the word is not reduced
  ReducedWord(RankSpec r, std::vector<int> letters);

  RankSpec rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  int operator[](std::size_t k) const { return letters_[k]; }
  Perm permutation() const { return word_permutation(rank_, letters_); }
  bool is_longest() const { return static_cast<int>(length()) == rank_.longest_length(); }
  ReducedWord reversed() const;
  std::string to_string() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  RankSpec rank_;
  std::vector<int> letters_;
};

ReducedWord longest_word_lex(RankSpec r);
// (n, n-1, ..., 1, n, ..., 2, ..., n)
ReducedWord standard_word(RankSpec r);
ReducedWord parse_word(RankSpec r, const std::string& text);  // "3,2,1,3,2,3" or "321323"

// beta_k = s_{i_1}...s_{i_{k-1}} alpha_{i_k} = e_p - e_q, returned as 0-based (p, q), p < q
std::vector<std::pair<int, int>> positive_roots(const ReducedWord& w);

}  // namespace gcrys::lie
