#include "tqft.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace qtqft {

namespace {

void check_tuple_cap(const BoxContext& ctx, int m, int n,
                     std::uint64_t max_entries) {
  if (m < 0 || n < 0) throw ArgumentError("tensor arity must be nonnegative");
  unsigned __int128 total = 1;
  for (int i = 0; i < m + n; ++i) {
    total *= ctx.basis_count();
    if (total > max_entries) {
      throw ResourceError("entry cap exceeded: tensor with m=" + std::to_string(m) +
                          " n=" + std::to_string(n) + " needs basis_count^" +
                          std::to_string(m + n) + " entries (cap " +
                          std::to_string(max_entries) + ")");
    }
  }
}

// Advances a base-B odometer; returns false after the last tuple.
bool next_tuple(std::vector<int>& tuple, int base) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < base) return true;
    tuple[i] = 0;
  }
  return false;
}

void require_output_only(const TqftTensor& t, int slot) {
  if (t.signature().inputs != 0) {
    throw ArgumentError("slot operation requires an output-only tensor (m = 0)");
  }
  if (slot < 1 || slot > t.signature().outputs) {
    throw ArgumentError("slot " + std::to_string(slot) + " outside [1," +
                        std::to_string(t.signature().outputs) + "]");
  }
}

}  // namespace

LaurentInt TqftTensor::entry(const std::vector<int>& in,
                             const std::vector<int>& out) const {
  auto it = entries_.find(Key{in, out});
  return it == entries_.end() ? LaurentInt() : it->second;
}

void TqftTensor::add(Key key, const LaurentInt& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.emplace(std::move(key), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

QClass handle_element(const FusionRing& ring) {
  QClass out(ring.box());
  for (int a = 0; a < ring.basis_size(); ++a) {
    out += ring.basis_product(a, ring.complement_index(a));
  }
  return out;
}

QClass degree_element(const FusionRing& ring, int d) {
  if (d == 0) return QClass::unit(ring.box());
  if (d < 0) {
    const int column = ring.index_of(Partition(ring.box().r, 1));
    QClass out = QClass::unit(ring.box());
    for (int i = 0; i < -d; ++i) out = ring.multiply_basis(out, column);
    return out;
  }
  Partition special(ring.box().r, 0);
  special[0] = ring.box().s;
  const int sp = ring.index_of(special);
  QClass out = QClass::unit(ring.box());
  for (int i = 0; i < d; ++i) out = ring.multiply_basis(out, sp);
  return out.shifted(-d);
}

LaurentInt integrate(const FusionRing& ring, int g, int d,
                     const std::vector<Partition>& insertions) {
  if (g < 0) throw ArgumentError("genus must be nonnegative");
  QClass acc = degree_element(ring, d);
  const QClass handle = handle_element(ring);
  for (int i = 0; i < g; ++i) acc = ring.product(acc, handle);
  for (const Partition& a : insertions) {
    acc = ring.multiply_basis(acc, ring.index_of(a));
  }
  return ring.counit(acc);
}

TqftTensor weighted_map(const FusionRing& ring, int g, int d, int m, int n,
                        std::uint64_t max_entries) {
  if (g < 0) throw ArgumentError("genus must be nonnegative");
  check_tuple_cap(ring.box(), m, n, max_entries);
  TqftTensor out(ring.box(), SurfaceSignature{g, d, m, n});

  // Shared closed-surface part; insertions multiply onto it per tuple.
  QClass base = degree_element(ring, d);
  const QClass handle = handle_element(ring);
  for (int i = 0; i < g; ++i) base = ring.product(base, handle);

  const int count = ring.basis_size();
  std::vector<int> tuple(static_cast<std::size_t>(m + n), 0);
  bool more = true;
  while (more) {
    QClass acc = base;
    for (int i = 0; i < m; ++i) acc = ring.multiply_basis(acc, tuple[i]);
    for (int i = 0; i < n; ++i) {
      acc = ring.multiply_basis(acc, ring.complement_index(tuple[m + i]));
    }
    const LaurentInt value = ring.counit(acc);
    if (!value.is_zero()) {
      TqftTensor::Key key;
      key.in.assign(tuple.begin(), tuple.begin() + m);
      key.out.assign(tuple.begin() + m, tuple.end());
      out.add(std::move(key), value);
    }
    more = !tuple.empty() && next_tuple(tuple, count);
  }
  return out;
}

TqftTensor witten_map(const FusionRing& ring, int g, int m, int n,
                      std::uint64_t max_entries) {
  return weighted_map(ring, g, ring.box().s * (g - 1 + n), m, n, max_entries);
}

TqftTensor compose(const TqftTensor& t2, const TqftTensor& t1) {
  if (!(t1.ctx() == t2.ctx())) {
    throw ArgumentError("tensor contexts do not match in compose");
  }
  if (t1.signature().outputs != t2.signature().inputs) {
    throw ArgumentError("arity mismatch in compose: n1=" +
                        std::to_string(t1.signature().outputs) + " m2=" +
                        std::to_string(t2.signature().inputs));
  }
  TqftTensor out(t1.ctx(),
                 SurfaceSignature{t1.signature().genus + t2.signature().genus,
                                  t1.signature().weight + t2.signature().weight,
                                  t1.signature().inputs, t2.signature().outputs});
  // Group t2 entries by input tuple for the middle contraction.
  std::map<std::vector<int>, std::vector<std::pair<const std::vector<int>*,
                                                   const LaurentInt*>>>
      by_input;
  for (const auto& [key, value] : t2.entries()) {
    by_input[key.in].emplace_back(&key.out, &value);
  }
  for (const auto& [key1, value1] : t1.entries()) {
    auto it = by_input.find(key1.out);
    if (it == by_input.end()) continue;
    for (const auto& [out_tuple, value2] : it->second) {
      out.add(TqftTensor::Key{key1.in, *out_tuple}, value1 * (*value2));
    }
  }
  return out;
}

TqftTensor eta_class(const FusionRing& ring, int g, int d, int N,
                     std::uint64_t max_entries) {
  return weighted_map(ring, g, d, 0, N, max_entries);
}

TqftTensor slot_multiply(const FusionRing& ring, const TqftTensor& t, int slot,
                         const QClass& z) {
  require_output_only(t, slot);
  if (!(z.ctx() == t.ctx())) {
    throw ArgumentError("class context does not match tensor context");
  }
  // sigma_b * z expanded once per basis label that occurs in the slot.
  std::map<int, QClass> expansions;
  TqftTensor out(t.ctx(), t.signature());
  for (const auto& [key, value] : t.entries()) {
    const int label = key.out[slot - 1];
    auto it = expansions.find(label);
    if (it == expansions.end()) {
      it = expansions.emplace(label, ring.multiply_basis(z, label)).first;
    }
    for (const auto& [c, w] : it->second.coeffs()) {
      TqftTensor::Key moved = key;
      moved.out[slot - 1] = ring.index_of(c);
      out.add(std::move(moved), value * w);
    }
  }
  return out;
}

TqftTensor slot_pushforward(const TqftTensor& t, int slot) {
  require_output_only(t, slot);
  const int point = static_cast<int>(t.ctx().basis_count()) - 1;
  TqftTensor out(t.ctx(), SurfaceSignature{t.signature().genus,
                                           t.signature().weight, 0,
                                           t.signature().outputs - 1});
  for (const auto& [key, value] : t.entries()) {
    if (key.out[slot - 1] != point) continue;
    TqftTensor::Key kept;
    kept.in = key.in;
    kept.out = key.out;
    kept.out.erase(kept.out.begin() + (slot - 1));
    out.add(std::move(kept), value);
  }
  return out;
}

std::optional<int> expected_q_exponent(const BoxContext& ctx, int g, int d) {
  // r*d + (r+s)*e = r*s*(g-1)
  const long long numerator =
      static_cast<long long>(ctx.r) * ctx.s * (g - 1) -
      static_cast<long long>(ctx.r) * d;
  if (numerator % ctx.n() != 0) return std::nullopt;
  return static_cast<int>(numerator / ctx.n());
}

PointCountResult extract_point_count(const FusionRing& ring, int g, int d) {
  PointCountResult result;
  result.exponent = expected_q_exponent(ring.box(), g, d);
  const LaurentInt value = integrate(ring, g, d, {});
  if (!result.exponent) {
    if (!value.is_zero()) {
      throw IntegrityError("integrate(g,d,[]) nonzero although r*d + (r+s)*e = "
                           "rs(g-1) has no integer solution");
    }
    result.diagnostic = "no finite Quot scheme: r*d + (r+s)*e = rs(g-1) has no "
                        "integer solution";
    return result;
  }
  if (value.is_zero()) {
    result.count = 0;
    return result;
  }
  if (!value.is_monomial()) {
    throw IntegrityError("point-count extraction is not a q-monomial: " +
                         value.to_string());
  }
  if (value.min_exponent() != *result.exponent) {
    throw IntegrityError("point-count monomial sits at q^" +
                         std::to_string(value.min_exponent()) + ", expected q^" +
                         std::to_string(*result.exponent));
  }
  result.count = value.coeff(*result.exponent);
  if (result.count < 0) {
    throw IntegrityError("negative point count " + result.count.get_str());
  }
  return result;
}

BigInt verlinde_exact(const FusionRing& ring, int g) {
  if (g < 1) throw ArgumentError("verlinde number requires genus >= 1");
  return extract_point_count(ring, g, ring.box().s * (g - 1)).count;
}

BigInt holla_exact(const FusionRing& ring, int g, int gamma) {
  if (g < 1) throw ArgumentError("holla count requires genus >= 1");
  const int a = std::gcd(ring.box().r, ring.box().s);
  if (gamma < 0 || gamma >= a) {
    throw ArgumentError("gamma=" + std::to_string(gamma) + " outside [0," +
                        std::to_string(a) + ")");
  }
  const int rp = ring.box().r / a;
  const int sp = ring.box().s / a;
  const int d = -(rp + sp) * gamma + ring.box().s * (g - 1);
  const PointCountResult result = extract_point_count(ring, g, d);
  if (result.exponent && *result.exponent != rp * gamma) {
    throw IntegrityError("holla extraction exponent mismatch");
  }
  return result.count;
}

}  // namespace qtqft
