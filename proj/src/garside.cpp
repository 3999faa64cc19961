#include "confsect/garside.hpp"

#include <algorithm>

namespace confsect::braid {

namespace {

// Left descent: sigma_i divides the permutation braid of p on the left
// iff p^{-1}(i) > p^{-1}(i+1).
bool in_starting_set(const Permutation& pinv, int i) {
  return pinv.apply(i) > pinv.apply(i + 1);
}

// Right descent: sigma_i divides on the right iff p(i) > p(i+1).
bool in_finishing_set(const Permutation& p, int i) { return p.apply(i) > p.apply(i + 1); }

// Conjugation by Delta: tau(x) = Delta^{-1} x Delta.
Permutation tau(const Permutation& p) {
  const Permutation rev = Permutation::reversal(p.size());
  return Permutation::compose(rev, Permutation::compose(p, rev));
}

// Makes the pair (a, b) left-weighted in place by moving prefix generators
// of b into a.  Returns true if anything moved.
bool left_weight_pair(Permutation& a, Permutation& b) {
  const int n = a.size();
  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    const Permutation binv = b.inverse();
    for (int i = 1; i <= n - 1; ++i) {
      if (in_starting_set(binv, i) && !in_finishing_set(a, i)) {
        const Permutation t = Permutation::transposition(n, i);
        a = Permutation::compose(a, t);  // a * sigma_i
        b = Permutation::compose(t, b);  // sigma_i^{-1} * b
        changed = moved = true;
        break;
      }
    }
  }
  return changed;
}

}  // namespace

Permutation delta_permutation(int n) { return Permutation::reversal(n); }

BraidWord delta_word(int n) { return permutation_braid_word(delta_permutation(n)); }

std::vector<int> starting_set(const Permutation& p) {
  std::vector<int> out;
  const Permutation pinv = p.inverse();
  for (int i = 1; i <= p.size() - 1; ++i)
    if (in_starting_set(pinv, i)) out.push_back(i);
  return out;
}

std::vector<int> finishing_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size() - 1; ++i)
    if (in_finishing_set(p, i)) out.push_back(i);
  return out;
}

BraidWord permutation_braid_word(const Permutation& p) {
  const int n = p.size();
  BraidWord w = empty_word(n);
  Permutation rest = p;
  Permutation restinv = rest.inverse();
  while (!rest.is_identity()) {
    int i = 1;
    while (!in_starting_set(restinv, i)) ++i;
    w.letters.push_back(i);
    rest = Permutation::compose(Permutation::transposition(n, i), rest);
    restinv = rest.inverse();
  }
  return w;
}

GarsideNormalForm normal_form(const BraidWord& input) {
  const int n = input.strands;
  const BraidWord w = free_reduce(input);
  const Permutation delta = delta_permutation(n);

  // Each positive letter becomes the factor sigma_i; each negative letter
  // becomes Delta^{-1} followed by the simple element Delta sigma_i^{-1}.
  // Pushing the Delta powers to the front twists every factor that a Delta
  // later in the word moves past; tau has order two, so only the parity of
  // the count of negative letters to the right matters.
  std::vector<int> suffix_neg(w.letters.size() + 1, 0);
  for (int j = static_cast<int>(w.letters.size()) - 1; j >= 0; --j)
    suffix_neg[j] = suffix_neg[j + 1] + (w.letters[j] < 0 ? 1 : 0);

  GarsideNormalForm nf;
  nf.strands = n;
  nf.delta_power = -suffix_neg[0];
  std::vector<Permutation> fs;
  fs.reserve(w.letters.size());
  for (size_t j = 0; j < w.letters.size(); ++j) {
    const int l = w.letters[j];
    const Permutation t = Permutation::transposition(n, std::abs(l));
    Permutation f = l > 0 ? t : Permutation::compose(delta, t);
    if (suffix_neg[j + 1] % 2 != 0) f = tau(f);
    if (!f.is_identity()) fs.push_back(f);
  }

  // Iterate local left-weighting until stable.  Every elementary move shifts
  // one atom strictly left, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < fs.size(); ++j) {
      if (left_weight_pair(fs[j], fs[j + 1])) changed = true;
      if (fs[j + 1].is_identity()) {
        fs.erase(fs.begin() + static_cast<long>(j) + 1);
        changed = true;
      }
    }
  }

  // Leading Delta factors join the power; trailing trivial factors are gone
  // already (identity husks drift right and were erased).
  size_t lead = 0;
  while (lead < fs.size() && fs[lead] == delta) ++lead;
  nf.delta_power += static_cast<long long>(lead);
  nf.factors.assign(fs.begin() + static_cast<long>(lead), fs.end());
  return nf;
}

bool equal_in_artin(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands != w2.strands)
    throw Error("equal_in_artin: strand counts differ (" + std::to_string(w1.strands) +
                " vs " + std::to_string(w2.strands) + ")");
  return normal_form(w1) == normal_form(w2);
}

BraidWord as_word(const GarsideNormalForm& nf) {
  const int n = nf.strands;
  BraidWord w = empty_word(n);
  const BraidWord dw = delta_word(n);
  const BraidWord dwi = dw.inverse();
  for (long long k = 0; k < std::llabs(nf.delta_power); ++k)
    w = compose(w, nf.delta_power > 0 ? dw : dwi);
  for (const Permutation& f : nf.factors) w = compose(w, permutation_braid_word(f));
  return w;
}

}  // namespace confsect::braid
