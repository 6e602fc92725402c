#pragma once

#include <chrono>
#include <mutex>

namespace durghotona::netfetch {

/// Time source used by the fetcher and host gate. Injected so tests and
/// deterministic runs never sleep for real.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::chrono::steady_clock::time_point now() = 0;
    virtual std::chrono::system_clock::time_point wall_now() = 0;
    virtual void sleep_for(std::chrono::milliseconds d) = 0;
};

class SystemClock final : public Clock {
public:
    std::chrono::steady_clock::time_point now() override;
    std::chrono::system_clock::time_point wall_now() override;
    void sleep_for(std::chrono::milliseconds d) override;
};

/// Monotonic time advances on sleep_for without real waiting; wall time is
/// pinned to a fixed instant so serialized timestamps are reproducible.
class DeterministicClock final : public Clock {
public:
    explicit DeterministicClock(
        std::chrono::system_clock::time_point wall_start = default_wall_start());

    std::chrono::steady_clock::time_point now() override;
    std::chrono::system_clock::time_point wall_now() override;
    void sleep_for(std::chrono::milliseconds d) override;

    static std::chrono::system_clock::time_point default_wall_start();

private:
    std::mutex mutex_;
    std::chrono::steady_clock::time_point mono_;
    std::chrono::system_clock::time_point wall_;
};

}  // namespace durghotona::netfetch
