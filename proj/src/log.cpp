#include "rcgp/log.hpp"

#include <cstdlib>
#include <iostream>

namespace rcgp::log {

namespace {

Level initial_threshold() {
    const char* env = std::getenv("RCGP_LOG");
    if (!env) return Level::Error;
    std::string v(env);
    if (v == "debug") return Level::Debug;
    if (v == "info") return Level::Info;
    return Level::Error;
}

Level& state() {
    static Level lv = initial_threshold();
    return lv;
}

}  // namespace

Level threshold() { return state(); }

void set_threshold(Level lv) { state() = lv; }

bool enabled(Level lv) { return static_cast<int>(lv) <= static_cast<int>(state()); }

void write(Level lv, const std::string& msg) {
    if (!enabled(lv)) return;
    const char* tag = lv == Level::Error ? "error" : lv == Level::Info ? "info" : "debug";
    std::cerr << "[rcgp:" << tag << "] " << msg << "\n";
}

}  // namespace rcgp::log
