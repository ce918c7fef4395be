#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtqft {

// The ambient rectangle for Schubert indexing: partitions live in an r x s box
// and index the Schubert basis of H*(Gr(r, r+s)).
struct BoxContext {
  int r = 0;  // rank of subbundles (number of partition rows)
  int s = 0;  // corank (maximal part)

  BoxContext() = default;
  BoxContext(int r_, int s_);  // throws ArgumentError unless r, s >= 1

  int n() const { return r + s; }
  std::uint64_t basis_count() const;  // binomial(r+s, r), clamped to uint64 max

  bool operator==(const BoxContext&) const = default;
};

// Weakly decreasing tuple of length exactly r (zero-padded), entries in [0, s].
using Partition = std::vector<int>;

bool is_valid_partition(const BoxContext& ctx, const Partition& a);
void require_valid_partition(const BoxContext& ctx, const Partition& a);

// Accepts loose input (shorter tuples get zero-padded) and validates.
Partition normalize_partition(const BoxContext& ctx, std::vector<int> parts);

// Every partition in the box exactly once: graded by size, then lexicographic
// within a grade. Length equals basis_count().
std::vector<Partition> enumerate_partitions(const BoxContext& ctx);

// (s - a_r, ..., s - a_1); an involution on the box.
Partition complement(const BoxContext& ctx, const Partition& a);

int partition_size(const Partition& a);

// Orders partitions the same way enumerate_partitions lists them.
struct CanonicalPartitionLess {
  bool operator()(const Partition& a, const Partition& b) const;
};

std::string partition_to_string(const Partition& a);  // "2,1"; "0" for the empty class
// Parses "2,1", "[2,1]", "2" or "" (empty partition); throws ArgumentError.
Partition parse_partition(const BoxContext& ctx, const std::string& text);

std::uint64_t binomial(int n, int k);  // clamped to uint64 max on overflow

}  // namespace qtqft
