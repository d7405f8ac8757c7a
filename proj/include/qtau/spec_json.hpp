#pragma once

#include <string>

#include "qtau/manifold.hpp"

namespace qtau {

// ManifoldSpec file format (JSON):
// {
//   "name": "poincare",
//   "components": [
//     {"special": {"kind": "trefoil", "chirality": "left", "framing": -1}},
//     {"special": {"kind": "hopf", "framings": [2, 2]}},
//     {"braid": {"strands": 2, "word": [1,1,1], "framings": [0], "component_map": [0,0]}}
//   ],
//   "connected_sum": [ ...nested specs... ]
// }
ManifoldSpec parse_manifold_spec(const std::string& json_text);
ManifoldSpec load_manifold_spec(const std::string& path);
std::string manifold_spec_to_json(const ManifoldSpec& spec);

// Braid record alone (the link_engine interface format).
BraidLink parse_braid_record(const std::string& json_text);
std::string braid_record_to_json(const BraidLink& braid);

} // namespace qtau
