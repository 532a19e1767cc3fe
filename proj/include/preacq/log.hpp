#pragma once

#include <iostream>
#include <mutex>
#include <string_view>

namespace preacq {

namespace detail {
inline std::mutex& log_mutex() {
    static std::mutex m;
    return m;
}
} // namespace detail

inline void log_info(std::string_view msg) {
    std::lock_guard<std::mutex> lock(detail::log_mutex());
    std::cerr << "[preacq] " << msg << "\n";
}

inline void log_warn(std::string_view msg) {
    std::lock_guard<std::mutex> lock(detail::log_mutex());
    std::cerr << "[preacq] warning: " << msg << "\n";
}

} // namespace preacq
