#include "qpl/poly_json.hpp"

namespace qpl {

namespace {

nlohmann::ordered_json encode(const std::vector<BigInt>& coeffs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : coeffs) out.push_back(c.get_str());
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const IntPolynomial& p) { return encode(p.coeffs()); }

nlohmann::ordered_json to_json(const TruncatedSeries& s) { return encode(s.coeffs()); }

IntPolynomial polynomial_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw InvalidParams("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw InvalidParams("polynomial coefficients must be strings");
    const auto& text = item.get_ref<const std::string&>();
    BigInt c;
    if (text.empty() || c.set_str(text, 10) != 0) {
      throw InvalidParams("not a decimal integer: '" + text + "'");
    }
    coeffs.push_back(std::move(c));
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace qpl
