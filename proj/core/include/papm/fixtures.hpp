#pragma once

// Built-in charts.  Each fixture embeds the exact text of the matching file
// under fixtures/ together with the class membership expected at every one of
// its sample points.  The embedded copy is authoritative; a test keeps the
// files in sync byte for byte.

#include <string>
#include <vector>

namespace papm {

struct Fixture {
  std::string name;
  std::string json;
  bool w0 = false;  // structure tensor vanishes
  bool w3 = false;  // cyclic sum of the fundamental tensor vanishes
  bool l1 = false;  // curvature absorbs the structure twist
  bool l2 = false;  // cyclic sum of the twisted curvature vanishes
  std::string note;
};

const std::vector<Fixture>& fixtures();

// Lookup by name; throws Error when the name is unknown.
const Fixture& fixture(const std::string& name);

} // namespace papm
