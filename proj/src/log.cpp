#include "routelab/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>

namespace routelab {

namespace {

LogLevel current_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("LOG_LEVEL");
        if (env == nullptr) return LogLevel::Info;
        if (std::strcmp(env, "error") == 0) return LogLevel::Error;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        return LogLevel::Info;
    }();
    return level;
}

const char* tag(LogLevel level) {
    switch (level) {
        case LogLevel::Error: return "error";
        case LogLevel::Debug: return "debug";
        default: return "info";
    }
}

}  // namespace

bool log_enabled(LogLevel level) {
    return static_cast<int>(level) <= static_cast<int>(current_level());
}

void log_line(LogLevel level, const std::string& msg) {
    if (!log_enabled(level)) return;
    std::time_t now = std::time(nullptr);
    std::tm tm_buf{};
    localtime_r(&now, &tm_buf);
    char stamp[16];
    std::strftime(stamp, sizeof(stamp), "%H:%M:%S", &tm_buf);
    std::fprintf(stderr, "[%s] %s: %s\n", stamp, tag(level), msg.c_str());
}

}  // namespace routelab
