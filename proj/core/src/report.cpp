#include "lempert/report.hpp"

#include "json.hpp"

namespace lempert {

std::string to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_name"] = r.check_name;
  j["inputs"] = r.inputs;    // std::map: keys already sorted
  j["metrics"] = r.metrics;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["seed"] = r.seed;
  j["grid_size"] = r.grid_size;
  return j.dump();
}

}  // namespace lempert
