#include "majorana/report.h"

#include <algorithm>
#include <cmath>

namespace majorana {

void Report::insert(CheckRecord rec) {
  auto pos = std::upper_bound(records_.begin(), records_.end(), rec.id,
                              [](const std::string& id, const CheckRecord& r) { return id < r.id; });
  records_.insert(pos, std::move(rec));
}

void Report::add_exact(std::string id, std::string anchor, bool passed) {
  insert({std::move(id), std::move(anchor), Backend::Exact, passed, std::nullopt});
}

void Report::add_float(std::string id, std::string anchor, double max_abs_error, double tolerance) {
  const bool ok = std::isfinite(max_abs_error) && max_abs_error <= tolerance;
  insert({std::move(id), std::move(anchor), Backend::Float, ok, max_abs_error});
}

void Report::merge(const Report& other) {
  for (const auto& r : other.records_) insert(r);
}

std::size_t Report::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.passed; }));
}

const CheckRecord* Report::find(const std::string& id) const {
  auto it = std::find_if(records_.begin(), records_.end(), [&](const CheckRecord& r) { return r.id == id; });
  return it == records_.end() ? nullptr : &*it;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : records_) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["backend"] = r.backend == Backend::Exact ? "exact" : "float";
    j["status"] = r.passed ? "pass" : "fail";
    if (r.max_abs_error) j["max_abs_error"] = *r.max_abs_error;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["suite"] = suite_;
  out["checks"] = std::move(checks);
  out["summary"] = {{"total", records_.size()}, {"passed", passed_count()}, {"failed", failed_count()}};
  return out;
}

}  // namespace majorana
