#include "wskit/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace wskit {

namespace {
std::atomic<int> g_override{0};
}

int max_threads() {
    int o = g_override.load(std::memory_order_relaxed);
    if (o > 0) return o;
    if (const char* env = std::getenv("WSKIT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

void set_max_threads(int n) { g_override.store(n, std::memory_order_relaxed); }

bool parallel_enabled() { return max_threads() > 1; }

}  // namespace wskit
