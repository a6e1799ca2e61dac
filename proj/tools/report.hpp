#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpl/polyseries.hpp"

namespace qpl::cli {

/// One run of a command: named results plus the checks that failed.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void param(const std::string& key, long long value);
  void param(const std::string& key, const std::string& value);

  void poly(const std::string& name, const IntPolynomial& p);
  void series(const std::string& name, const TruncatedSeries& s);
  void integer(const std::string& name, const BigInt& v);
  /// An int result that only appears in the JSON report.
  void record(const std::string& name, const BigInt& v);
  void boolean(const std::string& name, bool v);

  /// Records a bool result; a false value also becomes a mismatch.
  bool check(const std::string& name, bool ok, const std::string& detail = "");
  void mismatch(const std::string& what) { mismatches_.push_back(what); }

  /// Free-form line for the human rendering only.
  void note(const std::string& line) { notes_.push_back(line); }

  /// Rows for --csv output.
  void csv_row(std::vector<std::string> row) { csv_.push_back(std::move(row)); }
  void csv_header(std::vector<std::string> header) { csv_header_ = std::move(header); }

  bool passed() const noexcept { return mismatches_.empty(); }

  nlohmann::ordered_json to_json() const;
  std::string human() const;
  std::string csv() const;

 private:
  struct Entry {
    std::string name;
    std::string kind;
    nlohmann::ordered_json value;
    std::string text;
    bool shown = true;
  };

  std::string command_;
  nlohmann::ordered_json params_ = nlohmann::ordered_json::object();
  std::vector<Entry> results_;
  std::vector<std::string> mismatches_;
  std::vector<std::string> notes_;
  std::vector<std::string> csv_header_;
  std::vector<std::vector<std::string>> csv_;
};

}  // namespace qpl::cli
