#pragma once
// Words in a free group. Letter k+1 is generator k, -(k+1) its inverse.

#include <functional>
#include <string>
#include <vector>

namespace mgh {

using Word = std::vector<int>;

inline int letter(int gen, bool inverse = false) {
  return inverse ? -(gen + 1) : gen + 1;
}
inline int generator_of(int l) { return (l > 0 ? l : -l) - 1; }

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<Word> parts);
std::string word_string(const Word& w, const std::vector<std::string>& names);

// Evaluate a word with any group type providing operator* and inverse().
template <class M>
M evaluate(const Word& w, const std::vector<M>& gens, const M& one) {
  M out = one;
  for (int l : w) {
    const M& g = gens[generator_of(l)];
    out = out * (l > 0 ? g : g.inverse());
  }
  return out;
}

// Depth-first walk over all nonempty reduced words of length <= max_len,
// carrying the evaluated element. The visitor returns false to prune the
// extensions of the current word.
template <class M>
void for_each_reduced(int rank, int max_len, const std::vector<M>& gens,
                      const M& one,
                      const std::function<bool(const Word&, const M&)>& visit) {
  std::vector<M> letters;
  letters.reserve(2 * rank);
  for (int k = 0; k < rank; ++k) {
    letters.push_back(gens[k]);
    letters.push_back(gens[k].inverse());
  }
  Word w;
  std::function<void(const M&)> rec = [&](const M& acc) {
    if (static_cast<int>(w.size()) >= max_len) return;
    for (int k = 0; k < rank; ++k) {
      for (int inv = 0; inv < 2; ++inv) {
        int l = letter(k, inv == 1);
        if (!w.empty() && w.back() == -l) continue;
        M next = acc * letters[2 * k + inv];
        w.push_back(l);
        if (visit(w, next)) rec(next);
        w.pop_back();
      }
    }
  };
  rec(one);
}

// Number of nonempty reduced words of length <= n in a free group of rank r.
long long reduced_word_count(int rank, int n);

}  // namespace mgh
