#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unordered_set>

#include "cgt/cosets.hpp"
#include "oracles.hpp"

using namespace cgt;

namespace {

PermGroup s4() {
  return PermGroup(4, {Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(1,2,3,4)", 4)});
}
PermGroup a6_nat() {
  return PermGroup(6, {Perm::from_cycles("(1,2,3)", 6), Perm::from_cycles("(2,3,4,5,6)", 6)});
}

}  // namespace

TEST_CASE("A6 on cosets of a point stabilizer: degree 6, faithful") {
  PermGroup A6 = a6_nat();
  PermGroup A5 = A6.stabilizer({5});
  REQUIRE(A5.order_u64() == 60);
  CosetAction ca = coset_action(A6, A5);
  CHECK(ca.degree == 6);
  CHECK(ca.faithful);
  CHECK(ca.kernel_order == BigUint(1));
  PermGroup image(ca.degree, ca.gen_images);
  CHECK(image.is_transitive());
  CHECK(image.order_u64() == 360);
  // point stabilizer of the image has order |H|
  CHECK(image.stabilizer({0}).order_u64() == 60);
}

TEST_CASE("S4 on cosets of D8: degree 3, kernel of order 4") {
  PermGroup S4 = s4();
  PermGroup D8(4, {Perm::from_cycles("(1,2,3,4)", 4), Perm::from_cycles("(1,3)", 4)});
  REQUIRE(D8.order_u64() == 8);
  CosetAction ca = coset_action(S4, D8);
  CHECK(ca.degree == 3);
  CHECK(!ca.faithful);
  CHECK(ca.image_order == BigUint(6));
  // brute-force kernel over all 24 elements: g fixes every coset
  std::unordered_set<Perm, PermHash> all;
  {
    std::vector<Perm> fr{Perm(4)};
    all.insert(fr[0]);
    for (std::size_t i = 0; i < fr.size(); ++i)
      for (const Perm &g : S4.generators()) {
        Perm p = fr[i] * g;
        if (all.insert(p).second) fr.push_back(p);
      }
  }
  std::uint64_t kernel = 0;
  for (const Perm &g : all) {
    bool fixes_all = true;
    for (Point i = 0; i < ca.degree && fixes_all; ++i) {
      Perm moved = canonical_coset_rep(D8, ca.reps[i] * g);
      fixes_all = moved == ca.reps[i];
    }
    if (fixes_all) ++kernel;
  }
  CHECK(kernel == 4);
  CHECK(ca.kernel_order == BigUint(4));
}

TEST_CASE("coset identification is constant on cosets") {
  PermGroup S4 = s4();
  PermGroup S3(4, {Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(1,2,3)", 4)});
  CosetAction ca = coset_action(S4, S3);
  CHECK(ca.degree == 4);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Perm x = S4.random_element(rng);
    Perm h = S3.random_element(rng);
    CHECK(ca.identify(x, S3) == ca.identify(h * x, S3));
  }
}

TEST_CASE("generator images define a homomorphism (random word spot check)") {
  PermGroup A6 = a6_nat();
  PermGroup A5 = A6.stabilizer({5});
  CosetAction ca = coset_action(A6, A5);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, A6.generators().size() - 1);
  for (int t = 0; t < 60; ++t) {
    // a random word evaluated in G and through the images must agree with
    // the coset identification of the product
    Perm w(A6.degree());
    Perm img(ca.degree);
    int len = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) {
      std::size_t gi = pick(rng);
      w = w * A6.generators()[gi];
      img = img * ca.gen_images[gi];
    }
    for (Point c = 0; c < ca.degree; ++c)
      CHECK(ca.identify(ca.reps[c] * w, A5) == img(c));
  }
}

TEST_CASE("subgroup not contained in parent is rejected") {
  PermGroup A6 = a6_nat();
  PermGroup bad(6, {Perm::from_cycles("(1,2)", 6)});
  CHECK_THROWS_AS(coset_action(A6, bad), Error);
}

TEST_CASE("index cap names the offending index") {
  PermGroup A6 = a6_nat();
  PermGroup C3(6, {Perm::from_cycles("(1,2,3)", 6)});
  CHECK_THROWS_WITH_AS(coset_action(A6, C3, 100),
                       doctest::Contains("120"), Error);
}

TEST_CASE("maximality: A5 point stabilizer in A6") {
  PermGroup A6 = a6_nat();
  CHECK(is_maximal(A6, A6.stabilizer({5})));
}

TEST_CASE("maximality: <(1,2)> not maximal in S4, D8 maximal") {
  PermGroup S4 = s4();
  PermGroup C2(4, {Perm::from_cycles("(1,2)", 4)});
  CHECK(!is_maximal(S4, C2));
  PermGroup D8(4, {Perm::from_cycles("(1,2,3,4)", 4), Perm::from_cycles("(1,3)", 4)});
  CHECK(is_maximal(S4, D8));
  CHECK(oracle::brute_maximal(S4, D8));
  CHECK(!oracle::brute_maximal(S4, C2));
}

TEST_CASE("maximality matches brute force on assorted subgroups") {
  PermGroup S4 = s4();
  std::vector<PermGroup> subs;
  subs.push_back(PermGroup(4, {Perm::from_cycles("(1,2,3)", 4)}));            // C3
  subs.push_back(PermGroup(4, {Perm::from_cycles("(1,2,3)", 4),
                               Perm::from_cycles("(1,2)", 4)}));              // S3
  subs.push_back(PermGroup(4, {Perm::from_cycles("(1,2)(3,4)", 4),
                               Perm::from_cycles("(1,3)(2,4)", 4)}));         // V4
  subs.push_back(PermGroup(4, {Perm::from_cycles("(1,2,3)", 4),
                               Perm::from_cycles("(2,3,4)", 4)}));            // A4
  for (const PermGroup &H : subs)
    CHECK(is_maximal(S4, H) == oracle::brute_maximal(S4, H));
}
