#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "partitions.hpp"

namespace qtqft {

// Element of QH*(Gr(r, r+s)): a sparse Schubert-basis combination with exact
// Laurent coefficients. Keys iterate in the canonical basis order.
class QClass {
 public:
  explicit QClass(BoxContext ctx) : ctx_(ctx) {}
  static QClass unit(const BoxContext& ctx);                         // sigma_(0,...,0)
  static QClass basis(const BoxContext& ctx, const Partition& a);

  const BoxContext& ctx() const { return ctx_; }
  const std::map<Partition, LaurentInt, CanonicalPartitionLess>& coeffs() const& {
    return coeffs_;
  }
  void coeffs() && = delete;  // iterating a temporary's map would dangle
  LaurentInt coeff(const Partition& a) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(const Partition& a, const LaurentInt& c);
  QClass& operator+=(const QClass& other);
  QClass& operator-=(const QClass& other);
  QClass scaled(const LaurentInt& c) const;
  QClass shifted(int dexponent) const;  // multiply by q^dexponent

  bool operator==(const QClass& other) const {
    return ctx_ == other.ctx_ && coeffs_ == other.coeffs_;
  }

  std::string to_string() const;  // e.g. "s[2,2] + q*s[0,0]"

 private:
  BoxContext ctx_;
  std::map<Partition, LaurentInt, CanonicalPartitionLess> coeffs_;
};

// One expanded basis product sigma_a * sigma_b as (basis index, coefficient).
using BasisExpansion = std::vector<std::pair<int, LaurentInt>>;

// Complete multiplication table over all basis pairs; rows[a * B + b].
struct StructureTable {
  std::uint64_t basis_count = 0;
  std::vector<BasisExpansion> rows;

  bool operator==(const StructureTable& other) const {
    return basis_count == other.basis_count && rows == other.rows;
  }
};

// The small quantum cohomology ring of Gr(r, r+s) with exact arithmetic.
// Basis products are generated by Bertram's quantum Pieri rule together with
// the Giambelli determinant, then memoized in a shared structure table.
class FusionRing {
 public:
  explicit FusionRing(BoxContext ctx, std::uint64_t max_table_entries = 1000000);

  FusionRing(const FusionRing&) = delete;
  FusionRing& operator=(const FusionRing&) = delete;

  const BoxContext& box() const { return ctx_; }
  const std::vector<Partition>& basis() const { return basis_; }
  int basis_size() const { return static_cast<int>(basis_.size()); }
  int index_of(const Partition& a) const;  // throws ArgumentError when invalid
  int complement_index(int i) const { return complement_index_[i]; }
  int unit_index() const { return 0; }
  int point_index() const { return basis_size() - 1; }  // sigma_{s^r}

  // sigma_k * sigma_a for a special class sigma_k, 1 <= k <= s:
  //   classical part: partitions b with |b| = |a|+k and
  //     s >= b_1 >= a_1 >= b_2 >= a_2 >= ... >= b_r >= a_r;
  //   quantum part (coefficient q): partitions c with |c| = |a|+k-(r+s) and
  //     a_1-1 >= c_1 >= a_2-1 >= c_2 >= ... >= a_r-1 >= c_r >= 0.
  QClass quantum_pieri(int k, const Partition& a) const;

  // Signed Leibniz expansion of the r x r determinant det(sigma_{a_i + j - i}).
  // Each term is a sign and the run of r row values m (sigma_0 = 1 entries are
  // kept as zeros; terms containing m < 0 or m > s are dropped).
  struct GiambelliTerm {
    int sign;
    std::vector<int> rows;
  };
  std::vector<GiambelliTerm> giambelli_expand(const Partition& a) const;

  QClass basis_product(int a, int b) const;            // via the table
  QClass multiply_basis(const QClass& x, int b) const;
  QClass product(const QClass& x, const QClass& y) const;
  QClass power(const QClass& x, int exponent) const;   // exponent >= 0

  // Coefficient of the point class sigma_{s^r}.
  LaurentInt counit(const QClass& x) const;
  LaurentInt poincare_pair(const QClass& x, const QClass& y) const;

  // Builds on first use; concurrent callers share one build.
  const StructureTable& table() const;
  bool has_table() const;
  // Installs a precomputed table (e.g. from cache); rejected if shape-invalid.
  void adopt_table(StructureTable t);

 private:
  QClass basis_product_uncached(int a, int b) const;
  QClass apply_pieri(const QClass& x, int k) const;
  void require_same_ctx(const QClass& x) const;

  BoxContext ctx_;
  std::uint64_t max_table_entries_;
  std::vector<Partition> basis_;
  std::map<Partition, int, CanonicalPartitionLess> index_;
  std::vector<int> complement_index_;

  mutable std::mutex table_mutex_;
  mutable std::optional<StructureTable> table_;
};

}  // namespace qtqft
