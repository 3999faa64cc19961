#pragma once

// Left-greedy Garside normal form over the classical half twist Delta, with
// permutation braids as the simple elements.  Two words are equal in the
// Artin group B_n iff their normal forms coincide, which is how every exact
// identity in this project is decided.

#include <vector>

#include "confsect/braid.hpp"

namespace confsect::braid {

struct GarsideNormalForm {
  int strands = 1;
  long long delta_power = 0;           // infimum
  std::vector<Permutation> factors;    // left-weighted simple elements

  bool is_trivial() const { return delta_power == 0 && factors.empty(); }
  int canonical_length() const { return static_cast<int>(factors.size()); }

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

GarsideNormalForm normal_form(const BraidWord& w);

// True iff w1 = w2 in B_n.  Throws Error on strand-count mismatch.
bool equal_in_artin(const BraidWord& w1, const BraidWord& w2);

// Spells the form back as a word: |delta_power| copies of the Delta word
// (inverted when negative) followed by one reduced word per factor.
BraidWord as_word(const GarsideNormalForm& nf);

// Permutation of the half twist: i -> n+1-i.
Permutation delta_permutation(int n);

// The positive braid word of Delta in B_n.
BraidWord delta_word(int n);

// Canonical reduced word of the permutation braid with permutation p
// (smallest starting generator first).
BraidWord permutation_braid_word(const Permutation& p);

// Starting set S and finishing set F of a permutation braid: the 1-based
// generator indices i with sigma_i a left (resp. right) divisor.
std::vector<int> starting_set(const Permutation& p);
std::vector<int> finishing_set(const Permutation& p);

}  // namespace confsect::braid
