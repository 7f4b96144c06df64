#include "robotask/types.hpp"

namespace robotask {

void validate_chaining(const Trajectory& trajectory) {
  const auto& ts = trajectory.transitions;
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    if (!(ts[k].next_obs == ts[k + 1].obs)) {
      throw ContractViolation("trajectory broken at transition " + std::to_string(k) +
                              ": next_obs != following obs");
    }
    if (ts[k].terminal || ts[k].truncated) {
      throw ContractViolation("trajectory has terminal/truncated before last transition");
    }
  }
}

}  // namespace robotask
