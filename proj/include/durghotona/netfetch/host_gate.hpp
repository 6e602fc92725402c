#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "durghotona/netfetch/clock.hpp"

namespace durghotona::netfetch {

/// Enforces a minimum spacing between consecutive requests to one host.
/// Distinct hosts proceed independently; callers hitting the same host are
/// serialized for the duration of their slot.
class HostGate {
public:
    explicit HostGate(Clock& clock) : clock_(clock) {}

    /// Blocks (via the clock) until at least `min_delay` has passed since
    /// the previous request to `host`, then claims the slot.
    void wait_turn(const std::string& host, std::chrono::milliseconds min_delay);

private:
    struct HostState {
        std::mutex mutex;
        bool has_last = false;
        std::chrono::steady_clock::time_point last;
    };

    Clock& clock_;
    std::mutex map_mutex_;
    std::map<std::string, std::shared_ptr<HostState>> hosts_;
};

}  // namespace durghotona::netfetch
