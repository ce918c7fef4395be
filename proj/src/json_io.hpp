#pragma once

#include <json.hpp>

#include "fusion.hpp"
#include "spectrum.hpp"
#include "tqft.hpp"

namespace qtqft {

// All emission goes through ordered_json with canonical orders so that
// identical inputs produce byte-identical output. Integers that may exceed
// 2^53 travel as decimal strings; floats as strings with 17 significant
// digits.
using Json = nlohmann::ordered_json;

struct JsonOptions {
  bool q_at_one = false;  // specialize Laurent values at q = 1
};

std::string format_double(double value);  // %.17g

Json json_partition(const Partition& a);
Json json_laurent(const LaurentInt& value, const JsonOptions& opt = {});
Json json_qclass(const QClass& x, const JsonOptions& opt = {});
Json json_tensor(const TqftTensor& t, const std::vector<Partition>& basis,
                 const JsonOptions& opt = {});
Json json_complex(const Complex& z);

}  // namespace qtqft
