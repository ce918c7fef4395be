#include "partitions.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace qtqft {

BoxContext::BoxContext(int r_, int s_) : r(r_), s(s_) {
  if (r < 1 || s < 1) {
    throw ArgumentError("box context requires r >= 1 and s >= 1, got r=" +
                        std::to_string(r) + " s=" + std::to_string(s));
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t BoxContext::basis_count() const { return binomial(r + s, r); }

bool is_valid_partition(const BoxContext& ctx, const Partition& a) {
  if (static_cast<int>(a.size()) != ctx.r) return false;
  int prev = ctx.s;
  for (int part : a) {
    if (part < 0 || part > prev) return false;
    prev = part;
  }
  return true;
}

void require_valid_partition(const BoxContext& ctx, const Partition& a) {
  if (!is_valid_partition(ctx, a)) {
    throw ArgumentError("invalid partition " + partition_to_string(a) +
                        " for box r=" + std::to_string(ctx.r) +
                        " s=" + std::to_string(ctx.s));
  }
}

Partition normalize_partition(const BoxContext& ctx, std::vector<int> parts) {
  if (static_cast<int>(parts.size()) > ctx.r) {
    // Trailing zeros beyond length r are harmless; anything else is an error.
    for (std::size_t i = ctx.r; i < parts.size(); ++i) {
      if (parts[i] != 0) {
        throw ArgumentError("partition " + partition_to_string(parts) +
                            " has more than r=" + std::to_string(ctx.r) +
                            " nonzero parts");
      }
    }
    parts.resize(ctx.r);
  }
  parts.resize(ctx.r, 0);
  require_valid_partition(ctx, parts);
  return parts;
}

std::vector<Partition> enumerate_partitions(const BoxContext& ctx) {
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(ctx.basis_count()));
  Partition current(ctx.r, 0);
  // Depth-first over weakly decreasing tuples bounded by s.
  auto rec = [&](auto&& self, int row, int bound) -> void {
    if (row == ctx.r) {
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      current[row] = v;
      self(self, row + 1, v);
    }
  };
  rec(rec, 0, ctx.s);
  std::sort(out.begin(), out.end(), CanonicalPartitionLess{});
  return out;
}

Partition complement(const BoxContext& ctx, const Partition& a) {
  require_valid_partition(ctx, a);
  Partition c(ctx.r);
  for (int i = 0; i < ctx.r; ++i) c[i] = ctx.s - a[ctx.r - 1 - i];
  return c;
}

int partition_size(const Partition& a) {
  int total = 0;
  for (int part : a) total += part;
  return total;
}

bool CanonicalPartitionLess::operator()(const Partition& a, const Partition& b) const {
  const int sa = partition_size(a);
  const int sb = partition_size(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

std::string partition_to_string(const Partition& a) {
  if (a.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << a[i];
  }
  return out.str();
}

Partition parse_partition(const BoxContext& ctx, const std::string& text) {
  std::string body = text;
  // Strip optional surrounding brackets and whitespace.
  auto trim = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  };
  trim(body);
  if (!body.empty() && body.front() == '[' && body.back() == ']') {
    body = body.substr(1, body.size() - 2);
    trim(body);
  }
  std::vector<int> parts;
  if (!body.empty()) {
    std::istringstream in(body);
    std::string token;
    while (std::getline(in, token, ',')) {
      trim(token);
      if (token.empty()) {
        throw ArgumentError("invalid partition syntax: '" + text + "'");
      }
      try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        parts.push_back(value);
      } catch (const std::exception&) {
        throw ArgumentError("invalid partition syntax: '" + text + "'");
      }
    }
    if (body.back() == ',') {
      throw ArgumentError("invalid partition syntax: '" + text + "'");
    }
  }
  return normalize_partition(ctx, std::move(parts));
}

}  // namespace qtqft
