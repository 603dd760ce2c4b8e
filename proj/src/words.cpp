#include "mgh/words.hpp"

namespace mgh {

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return reduce(out);
}

std::string word_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w) {
    if (!out.empty()) out += ' ';
    out += names.at(generator_of(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

long long reduced_word_count(int rank, int n) {
  long long total = 0, level = 2LL * rank;
  for (int k = 1; k <= n; ++k) {
    total += level;
    level *= (2LL * rank - 1);
  }
  return total;
}

}  // namespace mgh
