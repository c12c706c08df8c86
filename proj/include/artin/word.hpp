#ifndef ARTIN_WORD_HPP_
#define ARTIN_WORD_HPP_

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

// A letter is a nonzero integer: +i stands for generator i (1-based) and -i
// for its inverse. A word is a sequence of letters read left to right.
using Letter = int;
using Word = std::vector<Letter>;

inline int generator_of(Letter l) { return std::abs(l); }
inline bool is_inverse(Letter l) { return l < 0; }

inline Word concat(Word a, Word const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word inverse(Word const& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

inline Word power(Word const& w, long k) {
  if (k < 0) return power(inverse(w), -k);
  Word r;
  r.reserve(w.size() * static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) r.insert(r.end(), w.begin(), w.end());
  return r;
}

inline bool is_positive(Word const& w) {
  return std::all_of(w.begin(), w.end(), [](Letter l) { return l > 0; });
}

inline Word free_reduce(Word const& w) {
  Word r;
  r.reserve(w.size());
  for (Letter l : w) {
    if (!r.empty() && r.back() == -l) {
      r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  return r;
}

// Free and cyclic reduction.
inline Word cyclic_reduce(Word const& w) {
  Word r = free_reduce(w);
  std::size_t b = 0, e = r.size();
  while (e - b >= 2 && r[b] == -r[e - 1]) {
    ++b;
    --e;
  }
  return Word(r.begin() + static_cast<long>(b), r.begin() + static_cast<long>(e));
}

// Alternating positive word s t s t ... of the given length.
inline Word alternating(int s, int t, int length) {
  Word w;
  w.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) w.push_back(i % 2 == 0 ? s : t);
  return w;
}

// Relabels generators: letter +-i becomes +-perm[i-1]+1 (perm is 0-based).
inline Word relabel(Word const& w, std::vector<int> const& perm) {
  Word r;
  r.reserve(w.size());
  for (Letter l : w) {
    int g = perm.at(static_cast<std::size_t>(generator_of(l) - 1)) + 1;
    r.push_back(is_inverse(l) ? -g : g);
  }
  return r;
}

// Human-readable form using s1, s2, ... (or the given prefix).
inline std::string to_string(Word const& w, std::string const& prefix = "s") {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += prefix + std::to_string(generator_of(w[i]));
    if (is_inverse(w[i])) out += "^-1";
  }
  return out;
}

}  // namespace artin

#endif  // ARTIN_WORD_HPP_
