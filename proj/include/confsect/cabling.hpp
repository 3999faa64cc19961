#pragma once

// Cabling of braids: each strand of a word in B_n is replaced by a k-strand
// cable with internal twisting prescribed by a cabling vector
// (phi; a_1..a_{n-1}, c, t).  Under the cabled generator, the strand entering
// the i-th slot carries phi^{a_i}, the one entering slot i+1 carries
// phi^{t-a_i} (inserted after the crossing, once it has arrived at slot i),
// and every other cable carries phi^c.

#include <vector>

#include "confsect/braid.hpp"
#include "confsect/garside.hpp"

namespace confsect::braid {

struct CablingVector {
  BraidWord phi;        // element of B_k whose permutation fixes strand k
  std::vector<int> a;   // length n-1
  int c = 0;
  int t = 0;
  int n = 0;            // strand count of the words being cabled

  CablingVector(BraidWord phi_, std::vector<int> a_, int c_, int t_, int n_);

  int k() const { return phi.strands; }
};

// Word on k*n strands obtained by renaming the letters of a k-strand word
// into block slot `slot` (1-based) of an n-block braid.
BraidWord embed_in_block(const BraidWord& w, int slot, int n);

// Positive word of k*k crossings taking block `slot` over block `slot`+1,
// preserving the internal order of both blocks.
BraidWord block_crossing(int n, int k, int slot);

// The cabling homomorphism applied letterwise: cable(v, w1 w2) is
// letter-for-letter cable(v, w1) cable(v, w2).
BraidWord cable(const CablingVector& v, const BraidWord& w);

// Total phi-exponent accumulated along each strand's trajectory when w is
// cabled with v; entry j is for strand j of w.
std::vector<long long> exponent_ledger(const CablingVector& v, const BraidWord& w);

// The braid R_n(k) on nk strands: the insertion-free cabling of R_n followed
// by two full twists of the first k-block.
BraidWord cabled_relation_target(int n, int k);

// The cabling vector with phi = (s1..s_{k-2} s_{k-1}^2)^{k'}, c = -1,
// t = 2n-4 and k = k'(n-1)(n-2)+1, which maps R_n to R_n(k).
CablingVector relation_compatible_vector(int n, int kprime, std::vector<int> a = {});

// Checks cable(v, R_n) = R_n(k), exactly in B_{nk} and, separately, at the
// permutation and exponent-ledger level.  The exact test subsumes the other
// two; they are reported apart so a word-convention mismatch is visible
// instead of silently downgraded.
struct RelationCablingReport {
  bool exact_equal = false;
  bool permutations_match = false;
  bool ledger_matches = false;   // strand 1 gets 2(n-1)(n-2), the rest 0
  std::vector<long long> ledger;
};
RelationCablingReport verify_relation_cabling(int n, int kprime);

}  // namespace confsect::braid
