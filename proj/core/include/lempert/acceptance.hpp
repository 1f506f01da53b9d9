#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lempert/report.hpp"

namespace lempert {
namespace acceptance {

// One gate criterion: an id like "A7", a short title, and the aggregated
// report with the pinned tolerance baked in.
struct Criterion {
  std::string id;
  std::string title;
  VerificationReport report;
};

// Runs the whole gate with seeds derived from `seed`.
std::vector<Criterion> run_all(std::uint64_t seed);

// Same, restricted to criteria whose id or title contains `only`
// (case-insensitive); empty string runs everything.
std::vector<Criterion> run_filtered(std::uint64_t seed, const std::string& only);

}  // namespace acceptance
}  // namespace lempert
