#pragma once

#include <string>

#include "geomcut/fence.hpp"
#include "geomcut/geometry.hpp"

namespace geomcut {

// Instance JSON: { "num_colors": k, "objects": [ { "color": c,
//   "vertices": [["x","y"], ...] } ] } with coordinates as exact decimal
// strings (or "p/q" fractions). parse(serialize(inst)) == inst.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Fence JSON: { "total_length": float, "segments": [ [["x","y"],["x","y"]],
//  ... ] } with exact coordinate strings.
Fence parse_fence(const std::string& text);
std::string serialize_fence(const Fence& fence);

std::string read_file(const std::string& path);             // InputError on failure
void write_file(const std::string& path, const std::string& data);  // SinkWriteFailure

}  // namespace geomcut
