#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "durghotona/netfetch/clock.hpp"
#include "durghotona/netfetch/host_gate.hpp"
#include "durghotona/netfetch/robots.hpp"
#include "durghotona/netfetch/transport.hpp"

namespace durghotona::netfetch {

struct FetchOptions {
    std::string user_agent = "durghotona-bot/0.1";
    int max_retries = 2;
    std::vector<std::chrono::milliseconds> backoff_schedule = {
        std::chrono::milliseconds{5000}, std::chrono::milliseconds{10000}};
    std::chrono::milliseconds per_host_delay{2000};
    std::chrono::milliseconds timeout{30000};

    /// backoff_schedule must cover max_retries and durations must be
    /// non-negative; throws std::invalid_argument otherwise.
    void validate() const;
};

struct FetchResult {
    std::string url;
    int status = 0;
    std::string body;
    int attempts = 0;
    std::chrono::system_clock::time_point fetched_at;
};

class RobotsDenied : public std::runtime_error {
public:
    explicit RobotsDenied(const std::string& url)
        : std::runtime_error("robots policy denies: " + url) {}
};

class NonRetryable : public std::runtime_error {
public:
    NonRetryable(const std::string& url, int status)
        : std::runtime_error("non-retryable status " + std::to_string(status) + " for " + url),
          status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

class ExhaustedRetries : public std::runtime_error {
public:
    ExhaustedRetries(const std::string& url, int attempts, const std::string& last_error)
        : std::runtime_error("retries exhausted after " + std::to_string(attempts) +
                             " attempts for " + url + " (last: " + last_error + ")"),
          attempts_(attempts) {}
    int attempts() const { return attempts_; }

private:
    int attempts_;
};

/// Polite HTTP retrieval: robots.txt consultation with a per-host policy
/// cache, per-host request spacing, and deterministic retry/backoff on
/// transient failures (network errors, timeouts, 429 and 5xx responses).
class Fetcher {
public:
    Fetcher(Transport& transport, Clock& clock, FetchOptions options = {});

    /// GET an absolute http(s) URL. Re-checks the host's robots policy
    /// even when the caller already consulted it; a denied path throws
    /// RobotsDenied before any request is issued.
    FetchResult fetch(const std::string& url);

    /// Cached robots policy for a host. A missing or unreachable
    /// robots.txt degrades to an empty allow-all policy.
    RobotsPolicy policy_for(const std::string& scheme, const std::string& host);

    bool allowed(const std::string& url);

    const FetchOptions& options() const { return options_; }
    HostGate& gate() { return gate_; }

    /// Diagnostics sink; defaults to discarding messages.
    void set_warning_sink(std::function<void(const std::string&)> sink);

private:
    HttpResponse gated_get(const std::string& host_key, const std::string& url);
    void warn(const std::string& message);

    Transport& transport_;
    Clock& clock_;
    FetchOptions options_;
    HostGate gate_;
    std::mutex cache_mutex_;
    std::map<std::string, RobotsPolicy> policy_cache_;
    std::function<void(const std::string&)> warning_sink_;
};

}  // namespace durghotona::netfetch
