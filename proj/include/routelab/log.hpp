#pragma once

#include <string>

namespace routelab {

// Verbosity comes from the LOG_LEVEL environment variable
// (error | info | debug), default info. Log lines go to stderr and are
// the only place timestamps appear.
enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

bool log_enabled(LogLevel level);
void log_line(LogLevel level, const std::string& msg);

inline void log_error(const std::string& msg) { log_line(LogLevel::Error, msg); }
inline void log_info(const std::string& msg) { log_line(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_line(LogLevel::Debug, msg); }

}  // namespace routelab
