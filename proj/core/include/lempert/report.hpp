#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace lempert {

// Result of one quantified check.  `metrics` holds every number the check
// computed; `pass` is the check's own verdict against `tolerance`.  Reports
// serialize deterministically (ordered keys, shortest-roundtrip doubles).
struct VerificationReport {
  std::string check_name;
  std::map<std::string, std::string> inputs;
  std::map<std::string, double> metrics;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  int grid_size = 0;
};

std::string to_json(const VerificationReport& r);

}  // namespace lempert
