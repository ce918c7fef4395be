#include "json_io.hpp"

#include <cstdio>

namespace qtqft {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Json json_partition(const Partition& a) {
  Json out = Json::array();
  for (int part : a) out.push_back(part);
  return out;
}

Json json_laurent(const LaurentInt& value, const JsonOptions& opt) {
  if (opt.q_at_one) {
    return Json{{"value", value.at_one().get_str()}};
  }
  Json out = Json::object();
  for (const auto& [exp, coeff] : value.terms()) {
    out[std::to_string(exp)] = coeff.get_str();
  }
  return out;
}

Json json_qclass(const QClass& x, const JsonOptions& opt) {
  Json out = Json::array();
  for (const auto& [a, c] : x.coeffs()) {
    out.push_back(Json{{"partition", json_partition(a)},
                       {"laurent", json_laurent(c, opt)}});
  }
  return out;
}

Json json_tensor(const TqftTensor& t, const std::vector<Partition>& basis,
                 const JsonOptions& opt) {
  const SurfaceSignature& sig = t.signature();
  Json entries = Json::array();
  for (const auto& [key, value] : t.entries()) {
    Json in = Json::array();
    for (int i : key.in) in.push_back(json_partition(basis[i]));
    Json out = Json::array();
    for (int i : key.out) out.push_back(json_partition(basis[i]));
    entries.push_back(Json{{"in", std::move(in)},
                           {"out", std::move(out)},
                           {"laurent", json_laurent(value, opt)}});
  }
  return Json{{"signature", Json{{"g", sig.genus},
                                 {"d", sig.weight},
                                 {"m", sig.inputs},
                                 {"n", sig.outputs}}},
              {"entries", std::move(entries)}};
}

Json json_complex(const Complex& z) {
  return Json{{"re", format_double(z.real())}, {"im", format_double(z.imag())}};
}

}  // namespace qtqft
