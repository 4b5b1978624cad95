#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace majorana {

enum class Backend { Exact, Float };

struct CheckRecord {
  std::string id;
  std::string anchor;  // short topic tag the check belongs to
  Backend backend = Backend::Exact;
  bool passed = false;
  std::optional<double> max_abs_error;  // float checks only
};

// Outcome of a verification suite. Records are kept sorted by id.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const noexcept { return suite_; }
  const std::vector<CheckRecord>& records() const noexcept { return records_; }

  void add_exact(std::string id, std::string anchor, bool passed);
  void add_float(std::string id, std::string anchor, double max_abs_error, double tolerance);
  void merge(const Report& other);

  std::size_t passed_count() const;
  std::size_t failed_count() const { return records_.size() - passed_count(); }
  bool all_passed() const { return failed_count() == 0; }
  const CheckRecord* find(const std::string& id) const;

  nlohmann::ordered_json to_json() const;

 private:
  void insert(CheckRecord rec);

  std::string suite_;
  std::vector<CheckRecord> records_;
};

}  // namespace majorana
