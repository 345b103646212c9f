#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "primegraph/io.hpp"

namespace pg::cli {

// argv without the program name. Returns the process exit code:
// 0 accepted / success, 1 rejected / failed check, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FamilyCounts {
  std::size_t classes = 0;
  std::size_t accepted = 0;
  std::size_t containment_violations = 0;  // solvable-accepted but family-rejected
  std::size_t roundtrip_pass = 0;
  std::size_t roundtrip_pending = 0;
  std::size_t roundtrip_fail = 0;
};

// counts[n][family]. With sample > 0 only that many classes per n are
// visited, chosen by the seeded generator.
std::map<std::size_t, std::map<std::string, FamilyCounts>> enumerate_report(
    std::size_t max_vertices, const std::vector<std::string>& families, bool roundtrip = false,
    std::size_t sample = 0, std::uint64_t seed = 1, std::size_t min_vertices = 1);

json catalog_record_json(const std::string& name);

}  // namespace pg::cli
