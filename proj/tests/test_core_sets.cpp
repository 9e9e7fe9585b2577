#include <doctest.h>

#include <set>

#include "support.hpp"
#include "xfam/bigcount.hpp"
#include "xfam/family.hpp"
#include "xfam/mask.hpp"

using namespace xfam;
using test::elems;
using test::factorial_binomial;

TEST_CASE("enumerate_k_subsets: examples") {
  CHECK(enumerate_k_subsets(3, 2) == std::vector<Mask>{0b011, 0b101, 0b110});
  CHECK(enumerate_k_subsets(4, 0) == std::vector<Mask>{0});
  CHECK(factorial_binomial(8, 4) == 70);
  CHECK(enumerate_k_subsets(8, 4).size() == 70);
  CHECK_THROWS_AS(enumerate_k_subsets(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_k_subsets(65, 1), std::invalid_argument);
}

TEST_CASE("enumerate_k_subsets: count, uniformity, order") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto level = enumerate_k_subsets(n, k);
      CHECK(BigCount(level.size()) == binomial(n, k));
      for (Mask a : level) CHECK(set_size(a) == k);
      CHECK(std::is_sorted(level.begin(), level.end()));
      CHECK(std::adjacent_find(level.begin(), level.end()) == level.end());
    }
  }
  // full-width corner
  CHECK(enumerate_k_subsets(64, 64) == std::vector<Mask>{~Mask{0}});
  CHECK(enumerate_k_subsets(64, 1).size() == 64);
}

TEST_CASE("intersection_size: examples and symmetry") {
  CHECK(intersection_size(elems({1, 2, 3}), elems({2, 3, 4})) == 2);
  const Mask a = elems({1, 2, 5, 9});
  CHECK(intersection_size(a, a) == set_size(a));
  CHECK(intersection_size(elems({1, 2}), elems({3, 4})) == 0);

  auto gen = test::rng(11);
  std::uniform_int_distribution<Mask> dist;
  for (int i = 0; i < 2000; ++i) {
    const Mask x = dist(gen), y = dist(gen);
    const int v = intersection_size(x, y);
    CHECK(v == intersection_size(y, x));
    CHECK(v <= std::min(set_size(x), set_size(y)));
  }
}

TEST_CASE("binomial: examples and conventions") {
  CHECK(binomial(8, 4) == factorial_binomial(8, 4));
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(17, 0) == 1);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(-2, 0) == 0);
}

TEST_CASE("binomial: Pascal identity over n <= 128") {
  for (int n = 1; n <= 128; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("is_t_intersecting: examples") {
  // star family {A in C([5],3) : [2] ⊆ A}
  std::vector<Mask> star_members;
  for (Mask a : enumerate_k_subsets(5, 3))
    if (is_subset_of(elems({1, 2}), a)) star_members.push_back(a);
  CHECK(is_t_intersecting(UniformFamily::create(5, 3, star_members), 2));

  CHECK_FALSE(is_t_intersecting(
      UniformFamily::create(5, 3, {elems({1, 2, 3}), elems({3, 4, 5})}), 2));

  // {A in C([8],4) : |A ∩ [5]| >= 4} is 3-intersecting
  std::vector<Mask> f8431;
  for (Mask a : enumerate_k_subsets(8, 4))
    if (intersection_size(a, full_mask(5)) >= 4) f8431.push_back(a);
  REQUIRE(f8431.size() == 5);
  CHECK(is_t_intersecting(UniformFamily::create(8, 4, f8431), 3));

  CHECK_THROWS_AS(is_t_intersecting(UniformFamily{5, 3, {}}, 1), std::domain_error);
}

TEST_CASE("is_cross_t_intersecting: examples") {
  std::vector<Mask> star3;
  for (Mask a : enumerate_k_subsets(8, 4))
    if (is_subset_of(full_mask(3), a)) star3.push_back(a);
  const UniformFamily star_a = UniformFamily::create(8, 4, star3);
  CHECK(is_cross_t_intersecting(star_a, star_a, 3));

  const UniformFamily one_a = UniformFamily::create(8, 4, {elems({1, 2, 3, 4})});
  const UniformFamily one_b = UniformFamily::create(8, 4, {elems({1, 2, 5, 6})});
  CHECK_FALSE(is_cross_t_intersecting(one_a, one_b, 3));

  // Frankl-style family against itself, brute forced over all member pairs.
  std::vector<Mask> f8431;
  for (Mask a : enumerate_k_subsets(8, 4))
    if (intersection_size(a, full_mask(5)) >= 4) f8431.push_back(a);
  const UniformFamily f = UniformFamily::create(8, 4, f8431);
  bool brute = true;
  for (Mask x : f.members)
    for (Mask y : f.members)
      if (intersection_size(x, y) < 3) brute = false;
  CHECK(brute);
  CHECK(is_cross_t_intersecting(f, f, 3) == brute);

  CHECK_THROWS_AS(is_cross_t_intersecting(UniformFamily{8, 4, {}}, star_a, 3),
                  std::domain_error);
}

TEST_CASE("t-intersecting equals cross with itself") {
  auto gen = test::rng(23);
  for (int i = 0; i < 300; ++i) {
    const UniformFamily f = test::random_family(gen, 7, 3, 6);
    for (int t = 1; t <= 3; ++t)
      CHECK(is_t_intersecting(f, t) == is_cross_t_intersecting(f, f, t));
  }
}

TEST_CASE("family text format round trip") {
  const UniformFamily f =
      UniformFamily::create(8, 4, {elems({1, 2, 3, 4}), elems({1, 2, 3, 5}), elems({5, 6, 7, 8})});
  const std::string text = to_family_text(f);
  CHECK(text == "8 4\nf\n17\nf0\n");
  CHECK(family_from_text(text) == f);
}

TEST_CASE("family text format rejections") {
  CHECK_THROWS_AS(family_from_text("8 4\nf"), std::invalid_argument);        // no trailing newline
  CHECK_THROWS_AS(family_from_text("8 4\n7\n"), std::invalid_argument);      // wrong popcount
  CHECK_THROWS_AS(family_from_text("4 2\n18\n"), std::invalid_argument);     // bit outside [4]
  CHECK_THROWS_AS(family_from_text("8 4\nF\n"), std::invalid_argument);      // uppercase hex
  CHECK_THROWS_AS(family_from_text("8\nf\n"), std::invalid_argument);        // bad header
  CHECK_THROWS_AS(family_from_text(""), std::invalid_argument);
  // empty family is fine
  CHECK(family_from_text("8 4\n").members.empty());
}

TEST_CASE("UniformFamily::create validates and normalizes") {
  const UniformFamily f =
      UniformFamily::create(5, 2, {elems({4, 5}), elems({1, 2}), elems({4, 5})});
  CHECK(f.members == std::vector<Mask>{elems({1, 2}), elems({4, 5})});
  CHECK_THROWS_AS(UniformFamily::create(5, 2, {elems({1, 2, 3})}), std::invalid_argument);
  CHECK_THROWS_AS(UniformFamily::create(5, 2, {elems({5, 6})}), std::invalid_argument);
  CHECK_THROWS_AS(FamilyPair::create(f, f, 0), std::invalid_argument);
  CHECK_THROWS_AS(FamilyPair::create(f, f, 3), std::invalid_argument);
}
