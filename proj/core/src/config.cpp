#include "tmcore/config.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace tmf {

namespace {

int env_max_level() {
    static const int value = [] {
        const char* s = std::getenv("TM_MAX_LEVEL");
        if (!s || !*s) return -1;
        const long v = std::strtol(s, nullptr, 10);
        return (v >= 1 && v <= 40) ? static_cast<int>(v) : -1;
    }();
    return value;
}

std::atomic<int>& cap_storage() {
    static std::atomic<int> cap{0};
    return cap;
}

}  // namespace

int resource_cap(int default_cap) {
    const int env = env_max_level();
    return env > 0 ? env : default_cap;
}

int thread_cap() {
    const int c = cap_storage().load(std::memory_order_relaxed);
    if (c > 0) return c;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_thread_cap(int n) {
    cap_storage().store(n > 0 ? n : 0, std::memory_order_relaxed);
}

int resolve_threads(int requested) {
    return requested > 0 ? requested : thread_cap();
}

}  // namespace tmf
