#pragma once

#include <string>

#include "gqd/state_core.hpp"

namespace gqd {

/// Loads a state file. Two layouts are accepted:
///   {"dim": d, "re": [[...]], "im": [[...]]}     row-major matrix ("im" optional)
///   {"amplitudes_re": [...], "amplitudes_im": [...]}   pure state ("..._im" optional)
/// The result passes through validate_density, so malformed physics surfaces
/// as the usual typed errors.
DensityMatrix load_state_json(const std::string& path);

}  // namespace gqd
