#include "confsect/cabling.hpp"

#include <algorithm>

namespace confsect::braid {

CablingVector::CablingVector(BraidWord phi_, std::vector<int> a_, int c_, int t_, int n_)
    : phi(std::move(phi_)), a(std::move(a_)), c(c_), t(t_), n(n_) {
  if (phi.strands < 2) throw Error("CablingVector: phi must live in B_k with k >= 2");
  if (n < 2) throw Error("CablingVector: n must be at least 2");
  if (static_cast<int>(a.size()) != n - 1)
    throw Error("CablingVector: need exactly n-1 internal exponents");
  // De-cabling needs phi in B_{k-1,1}; the distinguished strand is the last.
  if (permutation_of(phi).apply(phi.strands) != phi.strands)
    throw Error("CablingVector: permutation of phi must fix strand k");
}

BraidWord embed_in_block(const BraidWord& w, int slot, int n) {
  const int k = w.strands;
  if (slot < 1 || slot > n) throw Error("embed_in_block: slot out of range");
  const int shift = (slot - 1) * k;
  BraidWord out = empty_word(n * k);
  out.letters.reserve(w.letters.size());
  for (int l : w.letters) out.letters.push_back(l > 0 ? l + shift : l - shift);
  return out;
}

BraidWord block_crossing(int n, int k, int slot) {
  if (slot < 1 || slot > n - 1) throw Error("block_crossing: slot out of range");
  const int b = (slot - 1) * k;
  BraidWord out = empty_word(n * k);
  out.letters.reserve(static_cast<size_t>(k) * k);
  // Row r carries the r-th strand of the right block under the whole left
  // block; k^2 positive crossings, block order preserved.
  for (int r = 1; r <= k; ++r)
    for (int q = b + k + r - 1; q >= b + r; --q) out.letters.push_back(q);
  return out;
}

namespace {

void append(BraidWord& w, const BraidWord& piece) {
  w.letters.insert(w.letters.end(), piece.letters.begin(), piece.letters.end());
}

}  // namespace

BraidWord cable(const CablingVector& v, const BraidWord& w) {
  if (w.strands != v.n)
    throw Error("cable: word has " + std::to_string(w.strands) + " strands, vector expects " +
                std::to_string(v.n));
  const int n = v.n;
  const int k = v.k();
  BraidWord out = empty_word(n * k);
  for (int letter : w.letters) {
    const int i = std::abs(letter);
    const int ai = v.a[i - 1];
    if (letter > 0) {
      for (int j = 1; j <= n; ++j) {
        if (j == i + 1) continue;
        append(out, embed_in_block(v.phi.power(j == i ? ai : v.c), j, n));
      }
      append(out, block_crossing(n, k, i));
      append(out, embed_in_block(v.phi.power(v.t - ai), i, n));
    } else {
      append(out, embed_in_block(v.phi.power(-(v.t - ai)), i, n));
      append(out, block_crossing(n, k, i).inverse());
      for (int j = n; j >= 1; --j) {
        if (j == i + 1) continue;
        append(out, embed_in_block(v.phi.power(-(j == i ? ai : v.c)), j, n));
      }
    }
  }
  return out;
}

std::vector<long long> exponent_ledger(const CablingVector& v, const BraidWord& w) {
  if (w.strands != v.n)
    throw Error("exponent_ledger: word has " + std::to_string(w.strands) +
                " strands, vector expects " + std::to_string(v.n));
  const int n = v.n;
  std::vector<long long> ledger(n, 0);
  std::vector<int> pos(n + 1);  // pos[j] = current position of strand j
  for (int j = 1; j <= n; ++j) pos[j] = j;
  for (int letter : w.letters) {
    const int i = std::abs(letter);
    const long long ai = v.a[i - 1];
    for (int j = 1; j <= n; ++j) {
      if (letter > 0) {
        if (pos[j] == i)
          ledger[j - 1] += ai;
        else if (pos[j] == i + 1)
          ledger[j - 1] += v.t - ai;
        else
          ledger[j - 1] += v.c;
      } else {
        if (pos[j] == i)
          ledger[j - 1] -= v.t - ai;
        else if (pos[j] == i + 1)
          ledger[j - 1] -= ai;
        else
          ledger[j - 1] -= v.c;
      }
      if (pos[j] == i)
        pos[j] = i + 1;
      else if (pos[j] == i + 1)
        pos[j] = i;
    }
  }
  return ledger;
}

BraidWord cabled_relation_target(int n, int k) {
  if (n < 3) throw Error("cabled_relation_target: requires n >= 3");
  if (k < 2) throw Error("cabled_relation_target: requires k >= 2");
  BraidWord out = empty_word(n * k);
  for (int letter : relation_word(n).letters) append(out, block_crossing(n, k, letter));
  // The framing correction: two full twists of the first cable, which after
  // R_n sits back at block slot 1.
  const BraidWord full_twist = delta_word(k).power(2);
  append(out, embed_in_block(full_twist.power(2), 1, n));
  return out;
}

CablingVector relation_compatible_vector(int n, int kprime, std::vector<int> a) {
  if (n < 3) throw Error("relation_compatible_vector: requires n >= 3");
  if (kprime < 1) throw Error("relation_compatible_vector: requires k' >= 1");
  const int k = kprime * (n - 1) * (n - 2) + 1;
  if (a.empty()) a.assign(n - 1, 0);
  return CablingVector(torsion_element(1, k).power(kprime), std::move(a), -1, 2 * n - 4, n);
}

RelationCablingReport verify_relation_cabling(int n, int kprime) {
  const CablingVector v = relation_compatible_vector(n, kprime);
  const BraidWord rn = relation_word(n);
  const BraidWord lhs = cable(v, rn);
  const BraidWord rhs = cabled_relation_target(n, v.k());

  RelationCablingReport rep;
  rep.ledger = exponent_ledger(v, rn);
  rep.ledger_matches = rep.ledger[0] == 2LL * (n - 1) * (n - 2);
  for (size_t j = 1; j < rep.ledger.size(); ++j)
    rep.ledger_matches = rep.ledger_matches && rep.ledger[j] == 0;
  rep.permutations_match = permutation_of(lhs) == permutation_of(rhs);
  rep.exact_equal = equal_in_artin(lhs, rhs);
  return rep;
}

}  // namespace confsect::braid
