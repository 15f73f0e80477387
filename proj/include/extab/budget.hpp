#pragma once

#include <chrono>
#include <cstdio>
#include <string>

#include "errors.hpp"

namespace extab {

// Wall-clock and resident-memory budget, polled at computation checkpoints
// (table cells, Groebner pair batches, resolution levels).
struct Budget {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long max_seconds = 0;   // 0 = unlimited
    long max_memory_mb = 0; // 0 = unlimited
    std::string stage;      // most recent checkpoint label, for error messages

    static long rss_mb() {
        FILE* f = std::fopen("/proc/self/status", "r");
        if (!f) return 0;
        long kb = 0;
        char line[256];
        while (std::fgets(line, sizeof line, f)) {
            if (std::sscanf(line, "VmRSS: %ld kB", &kb) == 1) break;
        }
        std::fclose(f);
        return kb / 1024;
    }

    void check() const {
        if (max_seconds > 0) {
            auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            if (elapsed > max_seconds)
                throw budget_exceeded("time budget exceeded (" + std::to_string(max_seconds) +
                                      "s) at " + (stage.empty() ? "work" : stage));
        }
        if (max_memory_mb > 0 && rss_mb() > max_memory_mb)
            throw budget_exceeded("memory budget exceeded (" + std::to_string(max_memory_mb) +
                                  " MB) at " + (stage.empty() ? "work" : stage));
    }

    void checkpoint(const std::string& what) {
        stage = what;
        check();
    }
};

inline void budget_progress(void* ctx) {
    if (ctx) static_cast<Budget*>(ctx)->check();
}

} // namespace extab
