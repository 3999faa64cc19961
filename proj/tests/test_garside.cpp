#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "confsect/garside.hpp"

using namespace confsect;
using namespace confsect::braid;

namespace {

BraidWord random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, ls);
}

// Rewrites w into a freely different word representing the same element:
// inserts cancelling pairs and conjugated relators of both families.
BraidWord equivalent_rewrite(std::mt19937_64& rng, const BraidWord& w, int rounds) {
  const int n = w.strands;
  std::uniform_int_distribution<int> gen(1, n - 1);
  BraidWord out = w;
  for (int r = 0; r < rounds; ++r) {
    std::vector<int> relator;
    switch (rng() % 3) {
      case 0: {  // cancelling pair
        const int i = gen(rng);
        relator = {i, -i};
        break;
      }
      case 1: {  // braid relator
        if (n < 3) continue;
        const int i = 1 + static_cast<int>(rng() % (n - 2));
        relator = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
        break;
      }
      default: {  // commutation relator
        if (n < 4) continue;
        const int i = 1 + static_cast<int>(rng() % (n - 3));
        const int j = i + 2 + static_cast<int>(rng() % (n - 1 - (i + 2) + 1));
        relator = {i, j, -i, -j};
        break;
      }
    }
    // Conjugate by a short random word, then splice at a random position.
    const BraidWord g = random_word(rng, n, static_cast<int>(rng() % 3));
    BraidWord ins = compose(compose(g, BraidWord(n, relator)), g.inverse());
    const size_t at = out.letters.empty() ? 0 : rng() % (out.letters.size() + 1);
    out.letters.insert(out.letters.begin() + static_cast<long>(at), ins.letters.begin(),
                       ins.letters.end());
  }
  return out;
}

}  // namespace

TEST_CASE("trivial words normalize to the empty form") {
  const GarsideNormalForm nf = normal_form(parse_word(3, "1 -1"));
  CHECK(nf.is_trivial());
  CHECK(nf.delta_power == 0);
  CHECK(nf.factors.empty());
  CHECK(normal_form(empty_word(5)).is_trivial());
}

TEST_CASE("braid relation gives identical forms") {
  CHECK(normal_form(parse_word(3, "1 2 1")) == normal_form(parse_word(3, "2 1 2")));
  CHECK(equal_in_artin(parse_word(3, "1 2 1"), parse_word(3, "2 1 2")));
  CHECK_FALSE(equal_in_artin(sigma(3, 1), sigma(3, 2)));
  CHECK_THROWS_AS(equal_in_artin(sigma(3, 1), sigma(4, 1)), Error);
}

TEST_CASE("(s1 s2)^3 = (s1 s2^2)^2 = Delta^2 in B_3") {
  const BraidWord lhs = torsion_element(0, 3).power(3);
  const BraidWord rhs = torsion_element(1, 3).power(2);
  const GarsideNormalForm nl = normal_form(lhs);
  CHECK(nl == normal_form(rhs));
  CHECK(nl.delta_power == 2);
  CHECK(nl.factors.empty());
}

TEST_CASE("half twist basics") {
  for (int n = 2; n <= 6; ++n) {
    const GarsideNormalForm nf = normal_form(delta_word(n));
    CHECK(nf.delta_power == 1);
    CHECK(nf.factors.empty());
    CHECK(delta_word(n).length() == n * (n - 1) / 2);
  }
  CHECK(starting_set(permutation_of(sigma(4, 2))) == std::vector<int>{2});
  CHECK(finishing_set(permutation_of(sigma(4, 2))) == std::vector<int>{2});
}

TEST_CASE("permutation braid words are reduced and correct") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p{img};
    const BraidWord w = permutation_braid_word(p);
    CHECK(permutation_of(w) == p);
    int inversions = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (p.apply(i) > p.apply(j)) ++inversions;
    CHECK(w.length() == inversions);
  }
}

TEST_CASE("Lemma: conjugating sigma_1 by torsion powers shifts the index") {
  for (int n = 3; n <= 8; ++n) {
    const BraidWord a0 = torsion_element(0, n);
    for (int i = 1; i <= n - 2; ++i) {
      const BraidWord lhs = compose(compose(a0.power(i), sigma(n, 1)), a0.power(-i));
      CHECK(equal_in_artin(lhs, sigma(n, 1 + i)));
    }
    const BraidWord a1 = torsion_element(1, n);
    for (int i = 1; i <= n - 3; ++i) {
      const BraidWord lhs = compose(compose(a1.power(i), sigma(n, 1)), a1.power(-i));
      CHECK(equal_in_artin(lhs, sigma(n, 1 + i)));
    }
  }
}

TEST_CASE("Lemma: the three expressions for the full twist agree") {
  for (int n = 3; n <= 6; ++n) {
    const BraidWord omega = torsion_element(0, n).power(n);
    const GarsideNormalForm nf = normal_form(omega);
    CHECK(nf.delta_power == 2);  // alpha_0^n is the full twist
    CHECK(nf.factors.empty());
    CHECK(equal_in_artin(torsion_element(1, n).power(n - 1), omega));
    const BraidWord up = torsion_element(0, n);  // s1 .. s_{n-1}
    std::vector<int> desc;
    for (int i = n - 1; i >= 1; --i) desc.push_back(i);
    const BraidWord conj =
        compose(compose(up, torsion_element(2, n).power(n - 2)), BraidWord(n, desc));
    CHECK(equal_in_artin(conj, omega));
  }
}

TEST_CASE("normal form decides equality under random relation rewrites") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const BraidWord w = random_word(rng, n, static_cast<int>(rng() % 14));
    const BraidWord v = equivalent_rewrite(rng, w, 1 + static_cast<int>(rng() % 4));
    CHECK(equal_in_artin(w, v));
  }
}

TEST_CASE("positive words with different permutations get different forms") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> len(1, 10);
  for (int it = 0; it < 100; ++it) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::vector<int> l1, l2;
    for (int i = len(rng); i > 0; --i) l1.push_back(gen(rng));
    for (int i = len(rng); i > 0; --i) l2.push_back(gen(rng));
    const BraidWord w1(n, l1), w2(n, l2);
    if (permutation_of(w1) == permutation_of(w2)) continue;
    CHECK_FALSE(equal_in_artin(w1, w2));
  }
}

TEST_CASE("normal form is idempotent through as_word") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 120; ++it) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const BraidWord w = random_word(rng, n, static_cast<int>(rng() % 16));
    const GarsideNormalForm nf = normal_form(w);
    CHECK(normal_form(as_word(nf)) == nf);
  }
}

TEST_CASE("factors of a normal form are left-weighted") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 60; ++it) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const GarsideNormalForm nf = normal_form(random_word(rng, n, 12));
    for (size_t j = 0; j + 1 < nf.factors.size(); ++j) {
      const auto fin = finishing_set(nf.factors[j]);
      for (int i : starting_set(nf.factors[j + 1]))
        CHECK(std::find(fin.begin(), fin.end(), i) != fin.end());
    }
    for (const Permutation& f : nf.factors) {
      CHECK_FALSE(f.is_identity());
      CHECK_FALSE(f == delta_permutation(n));
    }
  }
}
