// parallel.cpp — Sweep concurrency cap

#include "dicke/parallel.hpp"

#include <cstdlib>
#include <string>

namespace dicke {

unsigned sweep_thread_count() {
    if (const char* env = std::getenv("DICKE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
            // Unparseable values fall back to the machine default.
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

} // namespace dicke
