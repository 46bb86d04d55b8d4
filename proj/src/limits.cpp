#include "weylkit/limits.hpp"

#include <atomic>
#include <cstdlib>

namespace weylkit {

namespace {

int initial_limit() {
    if (const char* env = std::getenv("WEYLKIT_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 64;
}

std::atomic<int>& limit_slot() {
    static std::atomic<int> limit{initial_limit()};
    return limit;
}

} // namespace

int degree_limit() { return limit_slot().load(); }

void set_degree_limit(int limit) { limit_slot().store(limit); }

} // namespace weylkit
