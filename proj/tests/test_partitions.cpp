#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "partitions.hpp"

using namespace qtqft;

namespace {

// Independent binomial for expected counts.
unsigned long long slow_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= static_cast<unsigned long long>(n - k + i);
    den *= static_cast<unsigned long long>(i);
  }
  return num / den;
}

}  // namespace

TEST_CASE("box context validation") {
  CHECK_THROWS_AS(BoxContext(0, 1), ArgumentError);
  CHECK_THROWS_AS(BoxContext(1, -1), ArgumentError);
  CHECK(BoxContext(2, 3).n() == 5);
  CHECK(BoxContext(2, 3).basis_count() == 10);
}

TEST_CASE("enumeration of small boxes") {
  const BoxContext one(1, 1);
  CHECK(enumerate_partitions(one) == std::vector<Partition>{{0}, {1}});

  const BoxContext two(2, 2);
  const std::vector<Partition> expected{{0, 0}, {1, 0}, {1, 1},
                                        {2, 0}, {2, 1}, {2, 2}};
  CHECK(enumerate_partitions(two) == expected);

  CHECK(enumerate_partitions(BoxContext(2, 3)).size() == slow_binomial(5, 2));
}

TEST_CASE("enumeration size and distinctness across boxes") {
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 3; ++s) {
      const BoxContext ctx(r, s);
      const auto basis = enumerate_partitions(ctx);
      CHECK(basis.size() == slow_binomial(r + s, r));
      const std::set<Partition> distinct(basis.begin(), basis.end());
      CHECK(distinct.size() == basis.size());
      for (const Partition& a : basis) CHECK(is_valid_partition(ctx, a));
      // Canonical order: graded, lexicographic within a grade.
      for (std::size_t i = 1; i < basis.size(); ++i) {
        CHECK(CanonicalPartitionLess{}(basis[i - 1], basis[i]));
      }
    }
  }
}

TEST_CASE("complement examples and involution") {
  CHECK(complement(BoxContext(2, 2), {0, 0}) == Partition{2, 2});
  CHECK(complement(BoxContext(2, 3), {2, 1}) == Partition{2, 1});
  CHECK(complement(BoxContext(1, 1), {1}) == Partition{0});

  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 3; ++s) {
      const BoxContext ctx(r, s);
      for (const Partition& a : enumerate_partitions(ctx)) {
        const Partition c = complement(ctx, a);
        CHECK(complement(ctx, c) == a);
        CHECK(partition_size(a) + partition_size(c) == r * s);
      }
    }
  }
}

TEST_CASE("sizes") {
  CHECK(partition_size({0, 0, 0}) == 0);
  CHECK(partition_size({2, 1}) == 3);
}

TEST_CASE("complement rejects invalid input") {
  CHECK_THROWS_AS(complement(BoxContext(2, 2), {3, 0}), ArgumentError);
  CHECK_THROWS_AS(complement(BoxContext(2, 2), {1, 2}), ArgumentError);
  CHECK_THROWS_AS(complement(BoxContext(2, 2), {1}), ArgumentError);
}

TEST_CASE("parsing") {
  const BoxContext ctx(2, 3);
  CHECK(parse_partition(ctx, "2,1") == Partition{2, 1});
  CHECK(parse_partition(ctx, "[2,1]") == Partition{2, 1});
  CHECK(parse_partition(ctx, "2") == Partition{2, 0});
  CHECK(parse_partition(ctx, "") == Partition{0, 0});
  CHECK(parse_partition(ctx, "0") == Partition{0, 0});
  CHECK(parse_partition(ctx, " 3 , 1 ") == Partition{3, 1});
  CHECK_THROWS_AS(parse_partition(ctx, "1,2"), ArgumentError);   // increasing
  CHECK_THROWS_AS(parse_partition(ctx, "4,0"), ArgumentError);   // exceeds s
  CHECK_THROWS_AS(parse_partition(ctx, "1,1,1"), ArgumentError); // too long
  CHECK_THROWS_AS(parse_partition(ctx, "a,b"), ArgumentError);
  CHECK_THROWS_AS(parse_partition(ctx, "1,,1"), ArgumentError);
  CHECK(partition_to_string(Partition{2, 1}) == "2,1");
}
