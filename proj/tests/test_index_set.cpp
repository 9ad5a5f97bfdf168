#include "doctest.h"

#include "cgn/index_set.hpp"

#include <functional>
#include <vector>

using namespace cgn;

namespace {

// Sample points inside block n: grid point, midpoint, and two interior points.
std::vector<Q> samples(std::uint64_t n) {
  std::vector<Q> out;
  if (n > 0) out.push_back(block_hi(n));
  out.push_back(pow2(-static_cast<long>(n) - 2) * 3);
  out.push_back(pow2(-static_cast<long>(n) - 3) * 5);
  out.push_back(pow2(-static_cast<long>(n) - 3) * 7);
  return out;
}

void check_against(const IndexSet& s, const std::function<bool(const Q&)>& member, std::uint64_t upto = 64) {
  for (std::uint64_t n = 0; n <= upto; ++n) {
    for (const Q& x : samples(n)) {
      CAPTURE(n);
      CAPTURE(x.get_str());
      CHECK(s.contains(x) == member(x));
    }
  }
}

}  // namespace

TEST_CASE("realset boolean operations") {
  RealSet a = RealSet::open(Q(0), Q(1, 2));
  RealSet b = RealSet::left_open(Q(1, 4), Q(3, 4));
  RealSet u = a.unite(b);
  CHECK(u.contains(Q(1, 2)));
  CHECK(u.contains(Q(3, 4)));
  CHECK_FALSE(u.contains(Q(0)));
  RealSet i = a.intersect(b);
  CHECK(i == RealSet::open(Q(1, 4), Q(1, 2)));
  RealSet d = b.minus(a);
  CHECK(d == RealSet::left_open(Q(1, 2), Q(3, 4)).unite(RealSet::point(Q(1, 2))));
  CHECK(a.minus(a).empty());
  CHECK(u.to_string() == "(0,3/4]");
}

TEST_CASE("block indices") {
  CHECK(block_of(Q(3, 4)) == 0);
  CHECK(block_of(Q(1, 2)) == 1);
  CHECK(block_of(Q(1, 3)) == 1);
  CHECK(block_of(Q(1, 4)) == 2);
  CHECK(block_of(Q(1, 1000)) == 9);
  CHECK_THROWS_AS(block_of(Q(0)), Error);
  CHECK(nu2(12) == 2);
  CHECK(nu2_second(1) == 0);
  CHECK(nu2_second(3) == 1);
  CHECK(nu2_second(7 * 4) == 2);
  CHECK(nu2_second(5) == 0);
}

TEST_CASE("constructors match brute-force membership") {
  auto blk = [](const Q& x) { return block_of(x); };
  auto is_grid = [](const Q& x) {
    auto n = block_of(x);
    return n > 0 && x == block_hi(n);
  };
  check_against(IndexSet::full(), [](const Q&) { return true; });
  check_against(IndexSet::empty(), [](const Q&) { return false; });
  check_against(IndexSet::blocks(1, 3), [&](const Q& x) { return blk(x) % 3 == 1; });
  check_against(IndexSet::grid(0, 2), [&](const Q& x) { return is_grid(x) && blk(x) % 2 == 0; });
  check_against(IndexSet::interval(Q(0), Q(1, 5)), [](const Q& x) { return x < Q(1, 5); });
  check_against(IndexSet::interval(Q(1, 7), Q(2, 3)),
                [](const Q& x) { return x > Q(1, 7) && x < Q(2, 3); });
  for (unsigned i = 0; i < 4; ++i) {
    check_against(IndexSet::nu2_piece(i), [&](const Q& x) {
      auto n = blk(x);
      return n > 0 && nu2(n) == i;
    });
    check_against(IndexSet::nu2_at_least(i), [&](const Q& x) {
      auto n = blk(x);
      return n > 0 && nu2(n) >= i;
    });
    for (unsigned j = 0; j < 3; ++j) {
      check_against(IndexSet::nu2sq_piece(i, j), [&](const Q& x) {
        auto n = blk(x);
        return n > 0 && nu2(n) == i && nu2_second(n) == j;
      });
      check_against(IndexSet::nu2sq_row_tail(i, j), [&](const Q& x) {
        auto n = blk(x);
        return n > 0 && nu2(n) == i && nu2_second(n) >= j;
      });
    }
  }
}

TEST_CASE("boolean algebra matches pointwise logic") {
  IndexSet a = IndexSet::blocks(0, 2).unite(IndexSet::interval(Q(1, 3), Q(5, 6)));
  IndexSet b = IndexSet::grid(1, 3).unite(IndexSet::nu2_piece(1));
  auto check_op = [&](const IndexSet& r, const std::function<bool(bool, bool)>& op) {
    check_against(r, [&](const Q& x) { return op(a.contains(x), b.contains(x)); });
  };
  check_op(a.unite(b), [](bool p, bool q) { return p || q; });
  check_op(a.intersect(b), [](bool p, bool q) { return p && q; });
  check_op(a.minus(b), [](bool p, bool q) { return p && !q; });
  check_against(a.complement(), [&](const Q& x) { return !a.contains(x); });
  CHECK(a.unite(a.complement()) == IndexSet::full());
  CHECK(a.intersect(a.complement()) == IndexSet::empty());
}

TEST_CASE("canonical form is unique") {
  IndexSet x = IndexSet::blocks(0, 2).unite(IndexSet::blocks(1, 2));
  CHECK(x == IndexSet::full());
  IndexSet y = IndexSet::blocks(0, 4).unite(IndexSet::blocks(2, 4));
  CHECK(y == IndexSet::blocks(0, 2));
  CHECK(y.modulus() == 2);
  CHECK(IndexSet::nu2_piece(0).unite(IndexSet::nu2_at_least(1)) == IndexSet::full().minus(IndexSet::blocks(0, 1).intersect(IndexSet::interval(Q(1, 2), Q(1)))));
}

TEST_CASE("germ classification and relations") {
  CHECK(IndexSet::interval(Q(1, 4), Q(1, 2)).classify() == SetClass::NullAtZero);
  CHECK(IndexSet::interval(Q(0), Q(1, 100)).classify() == SetClass::FullAtZero);
  CHECK(IndexSet::blocks(0, 2).classify() == SetClass::Splitting);
  CHECK(IndexSet::grid(0, 1).classify() == SetClass::Splitting);
  CHECK(IndexSet::full().minus(IndexSet::grid(0, 1)).classify() == SetClass::Splitting);
  IndexSet even = IndexSet::blocks(0, 2), odd = IndexSet::blocks(1, 2);
  CHECK(germ_relation(even, odd) == GermRelation::DisjointGerm);
  CHECK(germ_relation(IndexSet::blocks(0, 4), even) == GermRelation::SubsetGerm);
  CHECK(germ_relation(even, IndexSet::blocks(0, 4)) == GermRelation::SupersetGerm);
  CHECK(germ_relation(even, even.unite(IndexSet::interval(Q(1, 3), Q(1, 2)))) == GermRelation::EqualGerm);
  CHECK(germ_relation(even, IndexSet::blocks(0, 3)) == GermRelation::Incomparable);
}

TEST_CASE("modulus cap") {
  CHECK_THROWS_AS(IndexSet::nu2sq_piece(8, 8), Error);
  CHECK_NOTHROW(IndexSet::nu2sq_piece(7, 7));
}
