#include "fusion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace qtqft {

QClass QClass::unit(const BoxContext& ctx) {
  QClass out(ctx);
  out.add(Partition(ctx.r, 0), LaurentInt::one());
  return out;
}

QClass QClass::basis(const BoxContext& ctx, const Partition& a) {
  require_valid_partition(ctx, a);
  QClass out(ctx);
  out.add(a, LaurentInt::one());
  return out;
}

LaurentInt QClass::coeff(const Partition& a) const {
  auto it = coeffs_.find(a);
  return it == coeffs_.end() ? LaurentInt() : it->second;
}

void QClass::add(const Partition& a, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

QClass& QClass::operator+=(const QClass& other) {
  if (!(ctx_ == other.ctx_)) throw ArgumentError("context mismatch in QClass sum");
  for (const auto& [a, c] : other.coeffs_) add(a, c);
  return *this;
}

QClass& QClass::operator-=(const QClass& other) {
  if (!(ctx_ == other.ctx_)) throw ArgumentError("context mismatch in QClass sum");
  for (const auto& [a, c] : other.coeffs_) add(a, c.negated());
  return *this;
}

QClass QClass::scaled(const LaurentInt& c) const {
  QClass out(ctx_);
  if (c.is_zero()) return out;
  for (const auto& [a, v] : coeffs_) out.coeffs_.emplace(a, v * c);
  return out;
}

QClass QClass::shifted(int dexponent) const {
  QClass out(ctx_);
  for (const auto& [a, v] : coeffs_) out.coeffs_.emplace(a, v.shifted(dexponent));
  return out;
}

std::string QClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    const std::string cs = c.to_string();
    if (cs == "1") {
      out << "s[" << partition_to_string(a) << "]";
    } else if (c.is_monomial() && cs.find(' ') == std::string::npos) {
      out << cs << "*s[" << partition_to_string(a) << "]";
    } else {
      out << "(" << cs << ")*s[" << partition_to_string(a) << "]";
    }
  }
  return out.str();
}

FusionRing::FusionRing(BoxContext ctx, std::uint64_t max_table_entries)
    : ctx_(ctx), max_table_entries_(max_table_entries) {
  const std::uint64_t count = ctx_.basis_count();
  if (count == 0 || count > max_table_entries_ ||
      count * count > max_table_entries_) {
    throw ResourceError("entry cap exceeded: structure table for r=" +
                        std::to_string(ctx_.r) + " s=" + std::to_string(ctx_.s) +
                        " needs " + std::to_string(count) + "^2 entries (cap " +
                        std::to_string(max_table_entries_) + ")");
  }
  basis_ = enumerate_partitions(ctx_);
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) index_[basis_[i]] = i;
  complement_index_.resize(basis_.size());
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
    complement_index_[i] = index_.at(complement(ctx_, basis_[i]));
  }
}

int FusionRing::index_of(const Partition& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) {
    throw ArgumentError("invalid partition " + partition_to_string(a) +
                        " for box r=" + std::to_string(ctx_.r) +
                        " s=" + std::to_string(ctx_.s));
  }
  return it->second;
}

QClass FusionRing::quantum_pieri(int k, const Partition& a) const {
  if (k < 1 || k > ctx_.s) {
    throw ArgumentError("pieri index k=" + std::to_string(k) +
                        " outside [1," + std::to_string(ctx_.s) + "]");
  }
  require_valid_partition(ctx_, a);
  QClass out(ctx_);
  const int r = ctx_.r;

  // Classical part: interlacing b over a with |b| = |a| + k.
  {
    Partition b(r, 0);
    const int target = partition_size(a) + k;
    auto rec = [&](auto&& self, int row, int remaining) -> void {
      if (row == r) {
        if (remaining == 0) out.add(b, LaurentInt::one());
        return;
      }
      const int hi = (row == 0) ? ctx_.s : a[row - 1];
      const int lo = a[row];
      for (int v = lo; v <= hi; ++v) {
        if (v > remaining) break;
        b[row] = v;
        self(self, row + 1, remaining - v);
      }
    };
    if (target <= r * ctx_.s) rec(rec, 0, target);
  }

  // Quantum part: interlacing under the shifted partition, coefficient q.
  {
    const int target = partition_size(a) + k - ctx_.n();
    if (target >= 0) {
      Partition c(r, 0);
      auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == r) {
          if (remaining == 0) out.add(c, LaurentInt::monomial(1, 1));
          return;
        }
        const int hi = a[row] - 1;
        const int lo = (row + 1 < r) ? std::max(a[row + 1] - 1, 0) : 0;
        for (int v = lo; v <= hi; ++v) {
          if (v > remaining) break;
          c[row] = v;
          self(self, row + 1, remaining - v);
        }
      };
      rec(rec, 0, target);
    }
  }
  return out;
}

std::vector<FusionRing::GiambelliTerm> FusionRing::giambelli_expand(
    const Partition& a) const {
  require_valid_partition(ctx_, a);
  const int r = ctx_.r;
  std::vector<GiambelliTerm> terms;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> rows(r);
    bool nonzero = true;
    for (int i = 0; i < r && nonzero; ++i) {
      const int m = a[i] + perm[i] - i;
      if (m < 0 || m > ctx_.s) nonzero = false;
      rows[i] = m;
    }
    if (!nonzero) continue;
    int inversions = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    terms.push_back({inversions % 2 == 0 ? 1 : -1, std::move(rows)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return terms;
}

QClass FusionRing::apply_pieri(const QClass& x, int k) const {
  QClass out(ctx_);
  for (const auto& [a, c] : x.coeffs()) {
    const QClass step = quantum_pieri(k, a);
    for (const auto& [b, w] : step.coeffs()) out.add(b, c * w);
  }
  return out;
}

QClass FusionRing::basis_product_uncached(int a, int b) const {
  // Expand sigma_b via the Giambelli determinant and multiply onto sigma_a by
  // repeated Pieri steps.
  QClass out(ctx_);
  for (const GiambelliTerm& term : giambelli_expand(basis_[b])) {
    QClass acc = QClass::basis(ctx_, basis_[a]);
    for (int m : term.rows) {
      if (m == 0) continue;  // sigma_0 = 1
      acc = apply_pieri(acc, m);
      if (acc.is_zero()) break;
    }
    if (term.sign > 0) {
      out += acc;
    } else {
      out -= acc;
    }
  }
  return out;
}

const StructureTable& FusionRing::table() const {
  std::lock_guard<std::mutex> lock(table_mutex_);
  if (!table_) {
    const int count = basis_size();
    StructureTable built;
    built.basis_count = static_cast<std::uint64_t>(count);
    built.rows.resize(static_cast<std::size_t>(count) * count);
    for (int a = 0; a < count; ++a) {
      for (int b = a; b < count; ++b) {
        const QClass prod = basis_product_uncached(a, b);
        BasisExpansion row;
        row.reserve(prod.coeffs().size());
        for (const auto& [p, c] : prod.coeffs()) row.emplace_back(index_.at(p), c);
        built.rows[static_cast<std::size_t>(a) * count + b] = row;
        built.rows[static_cast<std::size_t>(b) * count + a] = std::move(row);
      }
    }
    table_ = std::move(built);
  }
  return *table_;
}

bool FusionRing::has_table() const {
  std::lock_guard<std::mutex> lock(table_mutex_);
  return table_.has_value();
}

void FusionRing::adopt_table(StructureTable t) {
  const auto count = static_cast<std::uint64_t>(basis_size());
  if (t.basis_count != count || t.rows.size() != count * count) {
    throw ArgumentError("structure table shape does not match context");
  }
  std::lock_guard<std::mutex> lock(table_mutex_);
  if (!table_) table_ = std::move(t);
}

QClass FusionRing::basis_product(int a, int b) const {
  const StructureTable& t = table();
  QClass out(ctx_);
  for (const auto& [c, coeff] : t.rows[static_cast<std::size_t>(a) * basis_size() + b]) {
    out.add(basis_[c], coeff);
  }
  return out;
}

QClass FusionRing::multiply_basis(const QClass& x, int b) const {
  require_same_ctx(x);
  const StructureTable& t = table();
  QClass out(ctx_);
  for (const auto& [a, ca] : x.coeffs()) {
    const std::size_t row = static_cast<std::size_t>(index_.at(a)) * basis_size() + b;
    for (const auto& [c, w] : t.rows[row]) out.add(basis_[c], ca * w);
  }
  return out;
}

QClass FusionRing::product(const QClass& x, const QClass& y) const {
  require_same_ctx(x);
  require_same_ctx(y);
  QClass out(ctx_);
  for (const auto& [b, cb] : y.coeffs()) {
    const QClass part = multiply_basis(x, index_.at(b));
    for (const auto& [c, w] : part.coeffs()) out.add(c, w * cb);
  }
  return out;
}

QClass FusionRing::power(const QClass& x, int exponent) const {
  if (exponent < 0) throw ArgumentError("negative ring power");
  QClass out = QClass::unit(ctx_);
  for (int i = 0; i < exponent; ++i) out = product(out, x);
  return out;
}

LaurentInt FusionRing::counit(const QClass& x) const {
  require_same_ctx(x);
  return x.coeff(basis_[point_index()]);
}

LaurentInt FusionRing::poincare_pair(const QClass& x, const QClass& y) const {
  return counit(product(x, y));
}

void FusionRing::require_same_ctx(const QClass& x) const {
  if (!(x.ctx() == ctx_)) {
    throw ArgumentError("QClass context does not match ring context");
  }
}

}  // namespace qtqft
