#pragma once

#include <sstream>
#include <string>

namespace rcgp::log {

enum class Level { Error = 0, Info = 1, Debug = 2 };

/// Current threshold; initialized from RCGP_LOG (error|info|debug) on first use.
Level threshold();
void set_threshold(Level lv);
bool enabled(Level lv);

/// Writes one line to stderr (the diagnostic stream), prefixed with the level.
void write(Level lv, const std::string& msg);

template <typename... Args>
void info(Args&&... args) {
    if (!enabled(Level::Info)) return;
    std::ostringstream os;
    (os << ... << args);
    write(Level::Info, os.str());
}

template <typename... Args>
void debug(Args&&... args) {
    if (!enabled(Level::Debug)) return;
    std::ostringstream os;
    (os << ... << args);
    write(Level::Debug, os.str());
}

template <typename... Args>
void error(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    write(Level::Error, os.str());
}

}  // namespace rcgp::log
