#include <doctest.h>

#include "support.hpp"
#include "xfam/constructions.hpp"
#include "xfam/shifting.hpp"

using namespace xfam;
using test::elems;

TEST_CASE("shift_family: hand examples") {
  const UniformFamily f1 = UniformFamily::create(3, 2, {elems({2, 3})});
  CHECK(shift_family(f1, 1, 2) == UniformFamily::create(3, 2, {elems({1, 3})}));

  // blocked: {1,3} is already present
  const UniformFamily f2 = UniformFamily::create(3, 2, {elems({1, 3}), elems({2, 3})});
  CHECK(shift_family(f2, 1, 2) == f2);

  CHECK_THROWS_AS(shift_family(f1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift_family(f1, 3, 1), std::invalid_argument);
}

TEST_CASE("shift_family: left-compressed fixpoint and size preservation") {
  auto gen = test::rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    const UniformFamily f = test::random_family(gen, 8, 4, 12);
    const UniformFamily c = compress_to_fixpoint(f);
    for (int j = 2; j <= 8; ++j)
      for (int i = 1; i < j; ++i) {
        CHECK(shift_family(f, i, j).size() == f.size());
        CHECK(shift_family(c, i, j) == c);
      }
  }
}

TEST_CASE("is_left_compressed: examples") {
  CHECK(is_left_compressed(UniformFamily::create(3, 2, {elems({1, 2}), elems({1, 3})})));
  CHECK_FALSE(is_left_compressed(UniformFamily::create(3, 2, {elems({2, 3})})));
  CHECK(is_left_compressed(frankl_family(8, 4, 3, 1)));
}

TEST_CASE("compress_to_fixpoint: examples and properties") {
  CHECK(compress_to_fixpoint(UniformFamily::create(3, 2, {elems({2, 3})})) ==
        UniformFamily::create(3, 2, {elems({1, 2})}));

  const UniformFamily lc = UniformFamily::create(4, 2, {elems({1, 2}), elems({1, 3})});
  CHECK(compress_to_fixpoint(lc) == lc);

  auto gen = test::rng(37);
  for (int iter = 0; iter < 1000; ++iter) {
    const UniformFamily f = test::random_family(gen, 8, 4, 10);
    const UniformFamily c = compress_to_fixpoint(f);
    CHECK(c.size() == f.size());
    CHECK(is_left_compressed(c));
    CHECK(compress_to_fixpoint(c) == c);  // idempotent
  }
}

namespace {

// All nonempty families over C([6],3) with at most three members.
std::vector<std::vector<Mask>> small_families_on_6() {
  const auto level = enumerate_k_subsets(6, 3);  // 20 sets
  std::vector<std::vector<Mask>> out;
  for (std::size_t i = 0; i < level.size(); ++i) {
    out.push_back({level[i]});
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      out.push_back({level[i], level[j]});
      for (std::size_t h = j + 1; h < level.size(); ++h)
        out.push_back({level[i], level[j], level[h]});
    }
  }
  return out;
}

bool cross_t(const std::vector<Mask>& a, const std::vector<Mask>& b, int t) {
  for (Mask x : a)
    for (Mask y : b)
      if (intersection_size(x, y) < t) return false;
  return true;
}

}  // namespace

TEST_CASE("joint shifts preserve the cross-t property (exhaustive core)") {
  const auto families = small_families_on_6();

  // Precompute every shifted version once.
  struct Pre {
    std::vector<Mask> base;
    std::vector<std::vector<Mask>> shifted;  // indexed by pair (i,j)
  };
  std::vector<std::pair<int, int>> ij;
  for (int j = 2; j <= 6; ++j)
    for (int i = 1; i < j; ++i) ij.emplace_back(i, j);

  std::vector<Pre> pre(families.size());
  for (std::size_t f = 0; f < families.size(); ++f) {
    pre[f].base = families[f];
    const UniformFamily uf = UniformFamily::create(6, 3, families[f]);
    for (auto [i, j] : ij) pre[f].shifted.push_back(shift_family(uf, i, j).members);
  }

  long long checked = 0;
  for (std::size_t fa = 0; fa < pre.size(); ++fa) {
    for (std::size_t fb = 0; fb < pre.size(); ++fb) {
      for (int t = 1; t <= 3; ++t) {
        if (!cross_t(pre[fa].base, pre[fb].base, t)) continue;
        ++checked;
        for (std::size_t p = 0; p < ij.size(); ++p) {
          if (!cross_t(pre[fa].shifted[p], pre[fb].shifted[p], t)) {
            CAPTURE(fa);
            CAPTURE(fb);
            CAPTURE(t);
            REQUIRE(false);
          }
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("compress_pair: hand example and properties") {
  // star pair at T = {2,3,4} compresses to the star pair at [3]
  const Mask t234 = elems({2, 3, 4});
  const FamilyPair p{star(8, 4, t234), star(8, 4, t234), 3};
  const FamilyPair c = compress_pair(p);
  CHECK(c.a == star(8, 4, full_mask(3)));
  CHECK(c.b == star(8, 4, full_mask(3)));

  CHECK(compress_pair(c) == c);

  const FamilyPair bad{UniformFamily::create(8, 4, {elems({1, 2, 3, 4})}),
                       UniformFamily::create(8, 4, {elems({5, 6, 7, 8})}), 3};
  CHECK_THROWS_AS(compress_pair(bad), std::domain_error);
}

TEST_CASE("compress_pair: 1000 random cross-3-intersecting pairs on [8]") {
  auto gen = test::rng(41);
  for (int iter = 0; iter < 1000; ++iter) {
    const FamilyPair p = test::random_cross_pair(gen, 8, 8, 4, 4, 3, 6);
    REQUIRE(is_cross_t_intersecting(p));
    const FamilyPair c = compress_pair(p);
    CHECK(c.a.size() == p.a.size());
    CHECK(c.b.size() == p.b.size());
    CHECK(is_cross_t_intersecting(c));
    CHECK(is_left_compressed(c.a));
    CHECK(is_left_compressed(c.b));
  }
}

TEST_CASE("compress_pair: different grounds shift independently beyond the overlap") {
  // B lives on [6]; shifts with j in {7,8} only move A.
  auto gen = test::rng(43);
  for (int iter = 0; iter < 200; ++iter) {
    const FamilyPair p = test::random_cross_pair(gen, 8, 6, 4, 3, 2, 5);
    const FamilyPair c = compress_pair(p);
    CHECK(is_cross_t_intersecting(c));
    CHECK(c.a.size() == p.a.size());
    CHECK(c.b.size() == p.b.size());
    CHECK(is_left_compressed(c.a));
    CHECK(is_left_compressed(c.b));
  }
}
