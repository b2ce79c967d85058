#pragma once

#include <string>

#include "sfb/body.hpp"

namespace sfb {

// JSON body specs:
//   {"kind": "cap",      "center": [x,y,z], "radius": r}
//   {"kind": "polytope", "vertices": [[x,y,z], ...]}
//   {"kind": "chart",    "pole": [x,y,z], "polygon": [[x,y], ...]}
// Vectors are renormalized when within 1e-9 of unit length, rejected
// otherwise. Parse failures throw BadBodySpec naming the offending field.
SphericalBody parse_body_spec(const std::string& json_text);
SphericalBody load_body_spec(const std::string& path);

std::string dump_body_spec(const SphericalBody& K);
void save_body_spec(const SphericalBody& K, const std::string& path);

// 17-significant-digit, locale-independent formatting used for all CSV and
// JSON output.
std::string fmt17(double x);

}  // namespace sfb
