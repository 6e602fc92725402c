#include "durghotona/netfetch/host_gate.hpp"

namespace durghotona::netfetch {

void HostGate::wait_turn(const std::string& host, std::chrono::milliseconds min_delay) {
    std::shared_ptr<HostState> state;
    {
        std::lock_guard lock(map_mutex_);
        auto& slot = hosts_[host];
        if (!slot) slot = std::make_shared<HostState>();
        state = slot;
    }
    std::lock_guard lock(state->mutex);
    auto now = clock_.now();
    if (state->has_last) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(now - state->last);
        if (elapsed < min_delay) {
            clock_.sleep_for(min_delay - elapsed);
            now = clock_.now();
        }
    }
    state->has_last = true;
    state->last = now;
}

}  // namespace durghotona::netfetch
