#include "confsect/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace confsect::braid {

Permutation::Permutation(std::vector<int> images_zero_based)
    : img_(std::move(images_zero_based)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw Error("Permutation: images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i > n - 1) throw Error("transposition: index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::reversal(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error("Permutation::compose: size mismatch");
  std::vector<int> img(a.size());
  for (int i = 0; i < a.size(); ++i) img[i] = a.img_[b.img_[i]];
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 0; i < size(); ++i) img[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j];
      ++len;
    }
    if (len >= 2) out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Permutation::count_fixed_points() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    if (img_[i] == i) ++c;
  return c;
}

std::vector<int> Permutation::one_based_images() const {
  std::vector<int> out(img_.size());
  for (int i = 0; i < size(); ++i) out[i] = img_[i] + 1;
  return out;
}

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) throw Error("BraidWord: strand count must be positive");
  for (int l : letters) {
    int i = std::abs(l);
    if (i < 1 || i > strands - 1)
      throw Error("BraidWord: generator index " + std::to_string(l) +
                  " out of range for " + std::to_string(strands) + " strands");
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord w;
  w.strands = strands;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

BraidWord BraidWord::power(int k) const {
  const BraidWord base = k >= 0 ? *this : inverse();
  BraidWord w;
  w.strands = strands;
  int reps = std::abs(k);
  w.letters.reserve(letters.size() * reps);
  for (int r = 0; r < reps; ++r)
    w.letters.insert(w.letters.end(), base.letters.begin(), base.letters.end());
  return w;
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands != w2.strands)
    throw Error("compose: strand counts differ (" + std::to_string(w1.strands) + " vs " +
                std::to_string(w2.strands) + ")");
  BraidWord w = w1;
  w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
  return w;
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (int l : w.letters)
    p = Permutation::compose(p, Permutation::transposition(w.strands, std::abs(l)));
  return p;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  for (int l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

BraidWord sigma(int n, int i) { return BraidWord(n, {i}); }

BraidWord empty_word(int n) { return BraidWord(n, {}); }

BraidWord torsion_element(int kind, int n) {
  if (n < 3) throw Error("torsion_element: requires n >= 3");
  if (kind < 0 || kind > 2) throw Error("torsion_element: kind must be 0, 1 or 2");
  std::vector<int> ls;
  for (int i = 1; i <= n - 1 - kind; ++i) ls.push_back(i);
  if (kind >= 1) {  // doubled final generator
    ls.push_back(n - kind);
    ls.push_back(n - kind);
  }
  return BraidWord(n, std::move(ls));
}

BraidWord relation_word(int n) {
  if (n < 3) throw Error("relation_word: requires n >= 3");
  std::vector<int> ls;
  for (int i = 1; i <= n - 1; ++i) ls.push_back(i);
  for (int i = n - 1; i >= 1; --i) ls.push_back(i);
  return BraidWord(n, std::move(ls));
}

TorsionCycleStructure torsion_cycle_structure(int kind, int power, int n) {
  if (n < 3) throw Error("torsion_cycle_structure: requires n >= 3");
  if (kind < 0 || kind > 2) throw Error("torsion_cycle_structure: kind must be 0, 1 or 2");
  const int moved = n - kind;
  const int k = ((power % moved) + moved) % moved;  // cycle structure of (1..moved)^power
  const int g = std::gcd(k == 0 ? moved : k, moved);
  TorsionCycleStructure out;
  out.fixed_points = kind;
  out.cycle_lengths.assign(g, moved / g);
  return out;
}

BraidWord parse_word(int n, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> ls;
  std::string tok;
  int pos = 0;
  while (in >> tok) {
    ++pos;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("braid word: token " + std::to_string(pos) + " ('" + tok +
                       "') is not an integer");
    }
    if (used != tok.size())
      throw ParseError("braid word: token " + std::to_string(pos) + " ('" + tok +
                       "') has trailing characters");
    if (v == 0 || std::abs(v) > n - 1)
      throw ParseError("braid word: token " + std::to_string(pos) + " (" + tok +
                       ") out of range for " + std::to_string(n) + " strands");
    ls.push_back(v);
  }
  return BraidWord(n, std::move(ls));
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

}  // namespace confsect::braid
