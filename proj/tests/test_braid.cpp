#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "confsect/braid.hpp"

using namespace confsect;
using namespace confsect::braid;

namespace {

// Independent oracle: push each strand through the word by explicit position
// shuffling, then read the permutation off in the table convention.
Permutation permutation_by_simulation(const BraidWord& w) {
  const int n = w.strands;
  std::vector<int> pos(n);  // pos[j] = position of strand j, 0-based
  for (int j = 0; j < n; ++j) pos[j] = j;
  for (int l : w.letters) {
    const int i = std::abs(l) - 1;
    for (int j = 0; j < n; ++j) {
      if (pos[j] == i)
        pos[j] = i + 1;
      else if (pos[j] == i + 1)
        pos[j] = i;
    }
  }
  // pos is the position map; permutation_of uses its inverse.
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j) img[pos[j]] = j;
  return Permutation(img);
}

BraidWord random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, ls);
}

}  // namespace

TEST_CASE("compose concatenates without simplification") {
  CHECK(compose(sigma(3, 1), sigma(3, 1).inverse()).letters == std::vector<int>{1, -1});
  const BraidWord w = parse_word(4, "1 -3 2");
  CHECK(compose(empty_word(4), w) == w);
  CHECK(compose(parse_word(3, "1 2"), parse_word(3, "2 1")).letters ==
        std::vector<int>{1, 2, 2, 1});
  CHECK_THROWS_AS(compose(empty_word(3), empty_word(4)), Error);
}

TEST_CASE("permutation of torsion elements matches the table") {
  const Permutation a0 = permutation_of(torsion_element(0, 5));
  for (int i = 1; i <= 5; ++i) CHECK(a0.apply(i) == i % 5 + 1);  // (1 2 3 4 5)

  const Permutation a2 = permutation_of(torsion_element(2, 6));
  for (int i = 1; i <= 4; ++i) CHECK(a2.apply(i) == i % 4 + 1);  // (1 2 3 4)
  CHECK(a2.apply(5) == 5);
  CHECK(a2.apply(6) == 6);

  CHECK(permutation_of(empty_word(7)).is_identity());
}

TEST_CASE("permutation_of is a homomorphism and matches strand simulation") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const BraidWord w1 = random_word(rng, n, static_cast<int>(rng() % 12));
    const BraidWord w2 = random_word(rng, n, static_cast<int>(rng() % 12));
    CHECK(permutation_of(compose(w1, w2)) ==
          Permutation::compose(permutation_of(w1), permutation_of(w2)));
    CHECK(permutation_of(w1) == permutation_by_simulation(w1));
  }
}

TEST_CASE("torsion element words") {
  CHECK(torsion_element(0, 4).letters == std::vector<int>{1, 2, 3});
  CHECK(torsion_element(1, 4).letters == std::vector<int>{1, 2, 3, 3});
  CHECK(torsion_element(2, 4).letters == std::vector<int>{1, 2, 2});
  CHECK_THROWS_AS(torsion_element(3, 4), Error);
  CHECK_THROWS_AS(torsion_element(0, 2), Error);
}

TEST_CASE("torsion permutation orders are n - kind") {
  for (int n = 3; n <= 8; ++n) {
    for (int kind = 0; kind <= 2; ++kind) {
      const Permutation p = permutation_of(torsion_element(kind, n));
      Permutation q = p;
      int order = 1;
      while (!q.is_identity()) {
        q = Permutation::compose(q, p);
        ++order;
      }
      CHECK(order == n - kind);
    }
  }
}

TEST_CASE("torsion cycle structure") {
  const auto two_threes = torsion_cycle_structure(0, 2, 6);
  CHECK(two_threes.cycle_lengths == std::vector<int>{3, 3});
  CHECK(two_threes.fixed_points == 0);

  const auto full_cycle = torsion_cycle_structure(0, 1, 9);
  CHECK(full_cycle.cycle_lengths == std::vector<int>{9});

  const auto seven = torsion_cycle_structure(2, 3, 9);
  CHECK(seven.cycle_lengths == std::vector<int>{7});
  CHECK(seven.fixed_points == 2);
}

TEST_CASE("cycle structure agrees with direct computation on the permutation") {
  for (int n = 3; n <= 9; ++n) {
    for (int kind = 0; kind <= 2; ++kind) {
      for (int k = 1; k <= 2 * n; ++k) {
        const auto claim = torsion_cycle_structure(kind, k, n);
        const Permutation p = permutation_of(torsion_element(kind, n).power(k));
        std::vector<int> lens = p.cycle_lengths();
        std::vector<int> expect;
        for (int len : claim.cycle_lengths)
          if (len >= 2) expect.push_back(len);
        std::sort(expect.begin(), expect.end());
        CHECK(lens == expect);
        const int ones =
            static_cast<int>(claim.cycle_lengths.size()) - static_cast<int>(expect.size());
        CHECK(p.count_fixed_points() == claim.fixed_points + ones);
      }
    }
  }
}

TEST_CASE("relation word") {
  CHECK(relation_word(3).letters == std::vector<int>{1, 2, 2, 1});
  CHECK(relation_word(4).letters == std::vector<int>{1, 2, 3, 3, 2, 1});
  for (int n = 3; n <= 8; ++n) {
    CHECK(relation_word(n).length() == 2 * (n - 1));
    CHECK(permutation_of(relation_word(n)).is_identity());
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(parse_word(3, "1 -1")).empty());
  CHECK(free_reduce(parse_word(4, "1 2 -2 -1 3")).letters == std::vector<int>{3});
}

TEST_CASE("word parsing and formatting") {
  const BraidWord w = parse_word(3, "1 -2 2");
  CHECK(w.letters == std::vector<int>{1, -2, 2});
  CHECK(parse_word(3, format_word(w)) == w);
  CHECK(parse_word(5, "").empty());
  CHECK_THROWS_AS(parse_word(3, "1 x"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "0"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "3"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "1 2bad"), ParseError);
}

TEST_CASE("word powers and inverses") {
  const BraidWord w = parse_word(4, "1 -2");
  CHECK(w.inverse().letters == std::vector<int>{2, -1});
  CHECK(w.power(2).letters == std::vector<int>{1, -2, 1, -2});
  CHECK(w.power(-1) == w.inverse());
  CHECK(w.power(0).empty());
  CHECK(permutation_of(compose(w, w.inverse())).is_identity());
}
