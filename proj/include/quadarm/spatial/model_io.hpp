#pragma once

#include <string>

#include "quadarm/spatial/model.hpp"

namespace quadarm::spatial {

/// Parses a model description file (key-value tree, YAML syntax). Throws
/// std::runtime_error with file/line diagnostics on malformed input.
KinematicModel load_model(const std::string& path);

/// Writes `model` in the same format load_model() reads.
void save_model(const KinematicModel& model, const std::string& path);

/// The default desk-scale quadruped + 7-DoF arm that ships with the repo.
KinematicModel make_default_model();

}  // namespace quadarm::spatial
