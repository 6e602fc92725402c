#include "durghotona/netfetch/fetcher.hpp"

#include "durghotona/netfetch/url.hpp"

namespace durghotona::netfetch {

namespace {

bool is_retryable_status(int status) {
    return status == 429 || (status >= 500 && status <= 599);
}

bool is_success_status(int status) {
    return status >= 200 && status <= 299;
}

}  // namespace

void FetchOptions::validate() const {
    if (max_retries < 0) throw std::invalid_argument("max_retries must be >= 0");
    if (static_cast<int>(backoff_schedule.size()) < max_retries) {
        throw std::invalid_argument("backoff_schedule shorter than max_retries");
    }
    for (auto d : backoff_schedule) {
        if (d.count() < 0) throw std::invalid_argument("negative backoff duration");
    }
    if (per_host_delay.count() < 0) throw std::invalid_argument("negative per_host_delay");
    if (timeout.count() < 0) throw std::invalid_argument("negative timeout");
}

Fetcher::Fetcher(Transport& transport, Clock& clock, FetchOptions options)
    : transport_(transport), clock_(clock), options_(std::move(options)), gate_(clock) {
    options_.validate();
}

void Fetcher::set_warning_sink(std::function<void(const std::string&)> sink) {
    warning_sink_ = std::move(sink);
}

void Fetcher::warn(const std::string& message) {
    if (warning_sink_) warning_sink_(message);
}

HttpResponse Fetcher::gated_get(const std::string& host_key, const std::string& url) {
    gate_.wait_turn(host_key, options_.per_host_delay);
    return transport_.get(url, options_.user_agent, options_.timeout);
}

RobotsPolicy Fetcher::policy_for(const std::string& scheme, const std::string& host) {
    {
        std::lock_guard lock(cache_mutex_);
        auto it = policy_cache_.find(host);
        if (it != policy_cache_.end()) return it->second;
    }
    RobotsPolicy policy;
    const std::string robots_url = scheme + "://" + host + "/robots.txt";
    try {
        HttpResponse response = gated_get(host, robots_url);
        if (is_success_status(response.status)) {
            policy = parse_robots(response.body);
        } else {
            // 404 and friends: conventionally no restrictions.
            warn("robots.txt for " + host + " returned " + std::to_string(response.status) +
                 "; treating as allow-all");
        }
    } catch (const TransportError& e) {
        warn("robots.txt fetch failed for " + host + " (" + e.what() + "); treating as allow-all");
    }
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = policy_cache_.emplace(host, std::move(policy));
    (void)inserted;  // a concurrent load of the same host keeps the first entry
    return it->second;
}

bool Fetcher::allowed(const std::string& url) {
    auto parsed = Url::parse(url);
    if (!parsed) return false;
    RobotsPolicy policy = policy_for(parsed->scheme, parsed->host_port());
    return is_allowed(policy, options_.user_agent, parsed->request_target());
}

FetchResult Fetcher::fetch(const std::string& url) {
    options_.validate();
    auto parsed = Url::parse(url);
    if (!parsed) throw std::invalid_argument("not an absolute http(s) URL: " + url);
    const std::string host_key = parsed->host_port();

    RobotsPolicy policy = policy_for(parsed->scheme, host_key);
    if (!is_allowed(policy, options_.user_agent, parsed->request_target())) {
        throw RobotsDenied(url);
    }

    const int max_attempts = 1 + options_.max_retries;
    std::string last_error;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        try {
            HttpResponse response = gated_get(host_key, url);
            if (is_success_status(response.status)) {
                FetchResult result;
                result.url = url;
                result.status = response.status;
                result.body = std::move(response.body);
                result.attempts = attempt;
                result.fetched_at = clock_.wall_now();
                return result;
            }
            if (!is_retryable_status(response.status)) {
                throw NonRetryable(url, response.status);
            }
            last_error = "status " + std::to_string(response.status);
        } catch (const TransportError& e) {
            last_error = e.what();
        }
        if (attempt < max_attempts) {
            clock_.sleep_for(options_.backoff_schedule[static_cast<size_t>(attempt - 1)]);
        }
    }
    throw ExhaustedRetries(url, max_attempts, last_error);
}

}  // namespace durghotona::netfetch
