#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace affkm {

struct Failure {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

/// Outcome of a verify_* operation: {checked, failures: [{inputs, lhs, rhs}]}.
struct Report {
  std::string name;
  std::size_t checked = 0;
  std::vector<Failure> failures;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  bool ok() const { return failures.empty(); }
  void fail(std::vector<std::string> inputs, std::string lhs, std::string rhs) {
    failures.push_back({std::move(inputs), std::move(lhs), std::move(rhs)});
  }
  void merge(const Report& o) {
    checked += o.checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

/// Failures beyond this many are counted but not listed.
inline constexpr std::size_t kMaxListedFailures = 20;

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["checked"] = r.checked;
  j["passed"] = r.ok();
  j["failure_count"] = r.failures.size();
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < kMaxListedFailures; ++i) {
    const auto& f = r.failures[i];
    arr.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["failures"] = arr;
  if (!r.extra.empty()) j["details"] = r.extra;
  return j;
}

}  // namespace affkm
