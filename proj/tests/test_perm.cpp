#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cgt/bigint.hpp"
#include "cgt/perm.hpp"

using namespace cgt;

TEST_CASE("cycle parsing follows 1-based cycle semantics") {
  Perm p = Perm::from_cycles("(1,2,3)", 5);
  // 1->2, 2->3, 3->1, 4->4, 5->5 in 1-based terms
  CHECK(p(0) == 1);
  CHECK(p(1) == 2);
  CHECK(p(2) == 0);
  CHECK(p(3) == 3);
  CHECK(p(4) == 4);
}

TEST_CASE("empty product is the identity") {
  Perm p = Perm::from_cycles("()", 4);
  CHECK(p.is_identity());
  CHECK(p.degree() == 4);
  CHECK(p.to_cycles() == "()");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_WITH_AS(Perm::from_cycles("(1,2", 4),
                       doctest::Contains("position"), Error);
  CHECK_THROWS_AS(Perm::from_cycles("(1,5)", 4), Error);    // out of range
  CHECK_THROWS_AS(Perm::from_cycles("", 4), Error);         // no cycle at all
  CHECK_THROWS_AS(Perm::from_cycles("(1,1)", 4), Error);    // repeat in cycle
  CHECK_THROWS_AS(Perm::from_cycles("(0,1)", 4), Error);    // 1-based points
  CHECK_THROWS_AS(Perm::from_cycles("(1 2)", 4), Error);    // commas required
}

TEST_CASE("non-disjoint cycles multiply left to right") {
  // (1 2)(2 3) with apply-left-first equals (1 3 2)
  Perm p = Perm::from_cycles("(1,2)(2,3)", 3);
  CHECK(p == Perm::from_cycles("(1,3,2)", 3));
}

TEST_CASE("product applies left factor first") {
  Perm a = Perm::from_cycles("(1,2)", 3);
  Perm b = Perm::from_cycles("(2,3)", 3);
  Perm ab = a * b;
  for (Point x = 0; x < 3; ++x) CHECK(ab(x) == b(a(x)));
}

TEST_CASE("inverse of (1 2 3) is (1 3 2)") {
  Perm p = Perm::from_cycles("(1,2,3)", 3);
  CHECK(p.inverse() == Perm::from_cycles("(1,3,2)", 3));
}

TEST_CASE("degree mismatch is an error") {
  CHECK_THROWS_AS(Perm::from_cycles("(1,2)", 3) * Perm::from_cycles("(1,2)", 4), Error);
}

TEST_CASE("random products: group axioms and reversal law") {
  std::mt19937_64 rng(12345);
  const Point n = 9;
  auto random_perm = [&] {
    std::vector<Point> img(n);
    for (Point i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Perm::from_images(img);
  };
  for (int trial = 0; trial < 200; ++trial) {
    Perm a = random_perm(), b = random_perm();
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    // parse/unparse round trip through canonical disjoint form
    Perm c = Perm::from_cycles(a.to_cycles(), n);
    CHECK(c == a);
    CHECK(c.to_cycles() == a.to_cycles());
  }
}

TEST_CASE("canonical disjoint cycle form") {
  Perm p = Perm::from_cycles("(4,5)(1,2,3)", 6);
  CHECK(p.to_cycles() == "(1,2,3)(4,5)");
  CHECK(Perm::from_cycles("(2,1)", 3).to_cycles() == "(1,2)");
}

TEST_CASE("element order and parity") {
  CHECK(Perm::from_cycles("(1,2,3)(4,5)", 6).order() == 6);
  CHECK(Perm::from_cycles("(1,2)", 4).is_even() == false);
  CHECK(Perm::from_cycles("(1,2,3)", 4).is_even() == true);
}

TEST_CASE("biguint arithmetic") {
  BigUint a = BigUint::from_decimal("244823040");
  CHECK(a.to_decimal() == "244823040");
  CHECK(a.fits_u64());
  BigUint b(1);
  for (int i = 0; i < 25; ++i) b *= 10;  // 10^25, beyond u64
  CHECK(!b.fits_u64());
  CHECK(b.to_decimal() == "10000000000000000000000000");
  std::uint64_t rem = 7;
  BigUint q = b.div_u64(3, rem);
  CHECK(rem == 1);
  CHECK((q * BigUint(3) + BigUint(1)) == b);
  CHECK(b.divide_exact(BigUint(10)).to_decimal() == "1000000000000000000000000");
  CHECK_THROWS_AS(b.divide_exact(BigUint(3)), Error);
  CHECK(BigUint::from_decimal("175560") == BigUint(175560));
  CHECK(BigUint(41) < BigUint(1045));
  CHECK(b.divisible_by(BigUint::from_decimal("10000000000000")));
  CHECK(!b.divisible_by(BigUint::from_decimal("10000000000001")));
  // big / big exact division
  BigUint big1 = BigUint::from_decimal("123456789012345678901234567890");
  BigUint big2 = BigUint::from_decimal("9876543210987654321");
  BigUint prod = big1 * big2;
  CHECK(prod.divide_exact(big2) == big1);
  CHECK(prod.divide_exact(big1) == big2);
}
