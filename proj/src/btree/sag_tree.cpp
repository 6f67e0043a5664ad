#include "quadarm/btree/sag_tree.hpp"

namespace quadarm::bt {

using sag::SagController;
using sag::SagInputs;
using sag::SagPhase;
using sag::SagReferences;

BtNodePtr build_sag_tree(SagController& controller) {
  auto target_acquired = condition("target-acquired", [&controller](Blackboard& bb) {
    return bb.get<bool>(keys::kDetectionValid, false) || controller.grasp_latched();
  });

  auto approach_and_grasp = action("approach-and-grasp", [&controller](Blackboard& bb) {
    const auto inputs = bb.get<SagInputs>(keys::kSagInputs);
    const SagReferences refs = controller.tick_approach(inputs);
    bb.set(keys::kSagReferences, refs);
    return refs.phase == SagPhase::Done ? TickStatus::Success : TickStatus::Running;
  });

  auto search = action("search", [&controller](Blackboard& bb) {
    const auto inputs = bb.get<SagInputs>(keys::kSagInputs);
    bb.set(keys::kSagReferences, controller.tick_search(inputs));
    return TickStatus::Running;
  });

  return fallback("sag-root",
                  {sequence("approach-grasp", {target_acquired, approach_and_grasp}), search});
}

}  // namespace quadarm::bt
