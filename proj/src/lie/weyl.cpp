#include "gcrys/lie/weyl.hpp"

#include <numeric>
#include <stdexcept>

namespace gcrys::lie {

RankSpec::RankSpec(int rank) : n(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1, got " + std::to_string(rank));
}

Perm word_permutation(RankSpec r, const std::vector<int>& letters) {
  Perm w(r.size());
  std::iota(w.begin(), w.end(), 0);
  for (int i : letters) {
    if (i < 1 || i > r.n) throw std::invalid_argument("Dynkin index " + std::to_string(i) + " out of range 1.." + std::to_string(r.n));
    // right multiplication by s_i swaps the values i-1 and i
    for (int& v : w) {
      if (v == i - 1)
        v = i;
      else if (v == i)
        v = i - 1;
    }
  }
  return w;
}

int inversions(const Perm& p) {
  int c = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++c;
  return c;
}

ReducedWord::ReducedWord(RankSpec r, std::vector<int> letters) : rank_(r), letters_(std::move(letters)) {
  Perm w = word_permutation(rank_, letters_);
  if (inversions(w) != static_cast<int>(letters_.size())) throw std::invalid_argument("word " + to_string() + " is not reduced");
}

ReducedWord ReducedWord::reversed() const { return ReducedWord(rank_, std::vector<int>(letters_.rbegin(), letters_.rend())); }

std::string ReducedWord::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(letters_[k]);
  }
  return s + ")";
}

ReducedWord longest_word_lex(RankSpec r) {
  std::vector<int> letters;
  int len = 0;
  while (len < r.longest_length()) {
    for (int i = 1; i <= r.n; ++i) {
      letters.push_back(i);
      if (inversions(word_permutation(r, letters)) == len + 1) break;
      letters.pop_back();
    }
    ++len;
  }
  return ReducedWord(r, letters);
}

ReducedWord standard_word(RankSpec r) {
  std::vector<int> letters;
  for (int start = 1; start <= r.n; ++start)
    for (int i = r.n; i >= start; --i) letters.push_back(i);
  return ReducedWord(r, letters);
}

ReducedWord parse_word(RankSpec r, const std::string& text) {
  std::vector<int> letters;
  bool has_sep = text.find_first_of(", ") != std::string::npos;
  if (has_sep) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find_first_of(", ", pos);
      std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (!tok.empty()) letters.push_back(std::stoi(tok));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad word '" + text + "'");
      letters.push_back(c - '0');
    }
  }
  return ReducedWord(r, letters);
}

std::vector<std::pair<int, int>> positive_roots(const ReducedWord& w) {
  std::vector<std::pair<int, int>> out;
  const auto& L = w.letters();
  for (std::size_t k = 0; k < L.size(); ++k) {
    // apply s_{i_{k-1}}, ..., s_{i_1} (innermost first) to the indices of alpha_{i_k}
    int p = L[k] - 1, q = L[k];
    for (std::size_t j = k; j-- > 0;) {
      int s = L[j] - 1;
      auto act = [s](int m) { return m == s ? s + 1 : (m == s + 1 ? s : m); };
      p = act(p);
      q = act(q);
    }
    if (p > q) throw std::logic_error("positive_roots: word is not reduced");
    out.emplace_back(p, q);
  }
  return out;
}

}  // namespace gcrys::lie
