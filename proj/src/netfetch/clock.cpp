#include "durghotona/netfetch/clock.hpp"

#include <thread>

namespace durghotona::netfetch {

std::chrono::steady_clock::time_point SystemClock::now() {
    return std::chrono::steady_clock::now();
}

std::chrono::system_clock::time_point SystemClock::wall_now() {
    return std::chrono::system_clock::now();
}

void SystemClock::sleep_for(std::chrono::milliseconds d) {
    if (d.count() > 0) std::this_thread::sleep_for(d);
}

DeterministicClock::DeterministicClock(std::chrono::system_clock::time_point wall_start)
    : mono_(std::chrono::steady_clock::time_point{}), wall_(wall_start) {}

std::chrono::system_clock::time_point DeterministicClock::default_wall_start() {
    // 2024-04-10T00:00:00Z
    return std::chrono::system_clock::time_point{std::chrono::seconds{1712707200}};
}

std::chrono::steady_clock::time_point DeterministicClock::now() {
    std::lock_guard lock(mutex_);
    return mono_;
}

std::chrono::system_clock::time_point DeterministicClock::wall_now() {
    std::lock_guard lock(mutex_);
    return wall_;
}

void DeterministicClock::sleep_for(std::chrono::milliseconds d) {
    std::lock_guard lock(mutex_);
    mono_ += d;
}

}  // namespace durghotona::netfetch
