#pragma once

// Words in the Artin generators of B_n, permutations, and the torsion
// elements alpha_0, alpha_1, alpha_2 together with the relation word R_n.
//
// A letter is a signed 1-based generator index: +i means sigma_i, -i means
// sigma_i^{-1}.  The empty word is the identity.

#include <cstdint>
#include <string>
#include <vector>

#include "confsect/errors.hpp"

namespace confsect::braid {

// Permutation of {1..n}, stored 0-based.  compose(a, b) applies b first,
// so word images compose like functions: perm(w1 w2) = perm(w1) o perm(w2).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images_zero_based);

  static Permutation identity(int n);
  // Swaps i and i+1 (1-based i, 1 <= i <= n-1).
  static Permutation transposition(int n, int i);
  // i -> n+1-i; the permutation of the half twist Delta.
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(img_.size()); }
  // Image of a 1-based point.
  int apply(int i) const { return img_[i - 1] + 1; }

  static Permutation compose(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  bool is_identity() const;

  // Disjoint cycle lengths >= 2, sorted; fixed points not listed.
  std::vector<int> cycle_lengths() const;
  int count_fixed_points() const;

  std::vector<int> one_based_images() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // signed 1-based generator indices, never 0

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  BraidWord inverse() const;
  BraidWord power(int k) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Concatenation, no simplification.  Throws Error on strand mismatch.
BraidWord compose(const BraidWord& w1, const BraidWord& w2);

// Image under B_n -> S_n, sigma_i -> (i, i+1).
Permutation permutation_of(const BraidWord& w);

// Cancels adjacent sigma_i sigma_i^{-1} pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

BraidWord sigma(int n, int i);
BraidWord empty_word(int n);

// alpha_0 = s1..s_{n-1}, alpha_1 = s1..s_{n-2} s_{n-1}^2,
// alpha_2 = s1..s_{n-3} s_{n-2}^2.  kind in {0,1,2}, n >= 3.
BraidWord torsion_element(int kind, int n);

// R_n = s1 .. s_{n-1} s_{n-1} .. s1, length 2(n-1).
BraidWord relation_word(int n);

// Cycle structure of alpha_kind^k on the n points: gcd(k, n-kind) cycles of
// length (n-kind)/gcd(k, n-kind) on the moved points, plus `kind` points the
// element never touches.
struct TorsionCycleStructure {
  std::vector<int> cycle_lengths;  // multiset, on the first n-kind points
  int fixed_points = 0;            // the trailing `kind` points
};
TorsionCycleStructure torsion_cycle_structure(int kind, int power, int n);

// Whitespace-separated signed integers, e.g. "1 -2 2".  Throws ParseError
// with the offending token position.
BraidWord parse_word(int n, const std::string& text);
std::string format_word(const BraidWord& w);

}  // namespace confsect::braid
