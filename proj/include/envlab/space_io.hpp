/**
 * @file space_io.hpp
 * @brief JSON space definitions.
 *
 * {
 *   "rank": 2,
 *   "points": ["p", "q"],
 *   "tangent": {"p": [[1, 0]], "q": [[-1, 0]]},
 *   "edges": {"p": ["q"], "q": ["p"]},                 (optional)
 *   "bundles": {"L": {"restriction": {"p": [0, 0], "q": [1, 0]},
 *                     "ampleness": "anti-ample"}},
 *   "order": {"1,0": [["q", "p"]]},                     (optional, per chamber)
 *   "certifications": {"smooth_closures": true, "local_product": true}
 * }
 *
 * Tangent weights may also be written [a_1, ..., a_r, y] with y = 0. Orders
 * are keyed by a representative cocharacter and list (less, greater) pairs.
 */
#pragma once

#include <string>

#include "envlab/spaces.hpp"

namespace envlab {

/// Parses and validates; throws InputError with a diagnostic.
GKMSpace parse_space_json(const std::string& text);
GKMSpace load_space_file(const std::string& path);

/// Serializes in the format above; parse_space_json inverts it.
std::string space_to_json(const GKMSpace& x);

} // namespace envlab
