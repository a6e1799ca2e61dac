#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "qpl/poly_json.hpp"

namespace qpl::cli {

void Report::param(const std::string& key, long long value) { params_[key] = std::to_string(value); }

void Report::param(const std::string& key, const std::string& value) { params_[key] = value; }

void Report::poly(const std::string& name, const IntPolynomial& p) {
  results_.push_back({name, "poly", qpl::to_json(p), to_string(p)});
}

void Report::series(const std::string& name, const TruncatedSeries& s) {
  results_.push_back({name, "poly", qpl::to_json(s), to_string(s)});
}

void Report::integer(const std::string& name, const BigInt& v) {
  results_.push_back({name, "int", v.get_str(), v.get_str()});
}

void Report::record(const std::string& name, const BigInt& v) {
  results_.push_back({name, "int", v.get_str(), v.get_str(), false});
}

void Report::boolean(const std::string& name, bool v) {
  results_.push_back({name, "bool", v, v ? "true" : "false"});
}

bool Report::check(const std::string& name, bool ok, const std::string& detail) {
  boolean(name, ok);
  if (!ok) mismatches_.push_back(detail.empty() ? name : name + ": " + detail);
  return ok;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["params"] = params_;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& e : results_) {
    nlohmann::ordered_json r;
    r["name"] = e.name;
    r["kind"] = e.kind;
    r["value"] = e.value;
    j["results"].push_back(std::move(r));
  }
  j["status"] = passed() ? "pass" : "fail";
  j["mismatches"] = mismatches_;
  return j;
}

std::string Report::human() const {
  std::ostringstream out;
  out << command_;
  for (const auto& [k, v] : params_.items()) out << "  " << k << "=" << v.get<std::string>();
  out << "\n";
  for (const auto& line : notes_) out << line << "\n";
  std::size_t width = 0;
  for (const auto& e : results_) {
    if (e.shown) width = std::max(width, e.name.size());
  }
  for (const auto& e : results_) {
    if (!e.shown) continue;
    out << "  " << e.name << std::string(width - e.name.size(), ' ') << " : " << e.text << "\n";
  }
  if (!mismatches_.empty()) {
    out << "mismatches:\n";
    for (const auto& m : mismatches_) out << "  - " << m << "\n";
  }
  out << "status: " << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string Report::csv() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  };
  line(csv_header_);
  for (const auto& row : csv_) line(row);
  return out.str();
}

}  // namespace qpl::cli
