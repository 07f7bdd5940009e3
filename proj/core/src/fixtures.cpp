#include "papm/fixtures.hpp"

#include "papm/errors.hpp"

namespace papm {

namespace {

const char* kFlatProduct = R"json({
  "dimension": 4,
  "coordinates": ["x1", "x2", "x3", "x4"],
  "metric": [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "1", "0"],
    ["0", "0", "0", "1"]
  ],
  "structure": [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "-1", "0"],
    ["0", "0", "0", "-1"]
  ],
  "points": [
    [0.0, 0.0, 0.0, 0.0],
    [0.3, -1.2, 0.5, 2.0]
  ]
}
)json";

const char* kRotating2d = R"json({
  "dimension": 2,
  "coordinates": ["x1", "x2"],
  "metric": [
    ["1", "0"],
    ["0", "1"]
  ],
  "structure": [
    ["cos(x1)", "sin(x1)"],
    ["sin(x1)", "-cos(x1)"]
  ],
  "points": [
    [0.0, 0.0],
    [0.7, -0.3],
    [1.2, 0.5]
  ]
}
)json";

const char* kRotating4d = R"json({
  "dimension": 4,
  "coordinates": ["x1", "x2", "x3", "x4"],
  "metric": [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "1", "0"],
    ["0", "0", "0", "1"]
  ],
  "structure": [
    ["cos(x3)", "sin(x3)", "0", "0"],
    ["sin(x3)", "-cos(x3)", "0", "0"],
    ["0", "0", "cos(x1)", "sin(x1)"],
    ["0", "0", "sin(x1)", "-cos(x1)"]
  ],
  "points": [
    [0.0, 0.0, 0.0, 0.0],
    [0.5, 1.0, -0.7, 0.2],
    [1.2, -0.4, 0.8, -1.5]
  ]
}
)json";

const char* kWarpedProduct = R"json({
  "dimension": 4,
  "coordinates": ["x1", "x2", "x3", "x4"],
  "metric": [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "1 + x1^2", "0"],
    ["0", "0", "0", "1 + x1^2"]
  ],
  "structure": [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "-1", "0"],
    ["0", "0", "0", "-1"]
  ],
  "points": [
    [0.5, 0.2, -0.3, 0.7],
    [1.0, -0.5, 0.4, 0.1],
    [-0.8, 0.3, 1.2, -0.6]
  ]
}
)json";

const char* kHeisenberg = R"json({
  "dimension": 4,
  "coordinates": ["x1", "x2", "x3", "x4"],
  "metric": [
    ["1", "0", "0", "-x3"],
    ["0", "1", "0", "0"],
    ["0", "0", "1", "0"],
    ["-x3", "0", "0", "1 + x3^2"]
  ],
  "structure": [
    ["1", "0", "0", "-2*x3"],
    ["0", "1", "0", "0"],
    ["0", "0", "-1", "0"],
    ["0", "0", "0", "-1"]
  ],
  "points": [
    [0.0, 0.0, 0.0, 0.0],
    [0.4, -0.7, 0.9, 0.3],
    [-1.1, 0.5, -0.6, 1.3]
  ]
}
)json";

const char* kSpherePatch = R"json({
  "dimension": 2,
  "coordinates": ["x1", "x2"],
  "metric": [
    ["1", "0"],
    ["0", "sin(x1)^2"]
  ],
  "structure": [
    ["1", "0"],
    ["0", "-1"]
  ],
  "points": [
    [0.7, 0.3],
    [0.785398163397448, 1.1],
    [1.9, 2.5]
  ]
}
)json";

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"flat_product", kFlatProduct, true, true, true, true,
                 "Flat metric with a constant split structure; everything is "
                 "parallel and every identity degenerates to 0 = 0."});
  out.push_back({"rotating_2d", kRotating2d, false, false, true, true,
                 "Euclidean plane whose structure eigenframe rotates with the "
                 "first coordinate; nonparallel structure on a flat metric."});
  out.push_back({"rotating_4d", kRotating4d, false, false, true, true,
                 "Two planes whose structure angles each depend on a "
                 "coordinate of the other plane; flat metric, nonparallel "
                 "structure in four dimensions."});
  out.push_back({"warped_product", kWarpedProduct, false, false, false, true,
                 "Split structure on a warped metric; curvature and structure "
                 "tensor both nonzero, cyclic sum of the fundamental tensor "
                 "nonzero."});
  out.push_back({"heisenberg", kHeisenberg, false, true, false, true,
                 "Nilpotent-group style metric whose fundamental tensor has "
                 "vanishing cyclic sum; exercises the conditional scalar "
                 "identities with nonzero curvature."});
  out.push_back({"sphere_patch", kSpherePatch, false, false, false, true,
                 "Round sphere chart with a diagonal reflection structure; "
                 "pins classical connection and curvature values."});
  return out;
}

} // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = make_fixtures();
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return f;
  throw Error("unknown fixture: " + name);
}

} // namespace papm
