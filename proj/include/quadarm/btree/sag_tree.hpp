#pragma once

#include "quadarm/btree/btree.hpp"
#include "quadarm/sag/controller.hpp"

namespace quadarm::bt {

/// Blackboard keys used by the SAG tree.
namespace keys {
inline constexpr const char* kDetectionValid = "detection.valid";
inline constexpr const char* kSagInputs = "sag.inputs";
inline constexpr const char* kSagReferences = "sag.references";
}  // namespace keys

/// fallback( sequence( target-acquired?, approach-and-grasp ), search ).
///
/// The guard succeeds while the detector reports a valid target or an
/// open-loop grasp is latched; losing the target mid-approach fails the
/// guard and the very next tick runs the search branch instead.
BtNodePtr build_sag_tree(sag::SagController& controller);

}  // namespace quadarm::bt
