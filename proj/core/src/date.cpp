#include "tscluster/date.hpp"

#include <chrono>
#include <cstdio>

#include "tscluster/errors.hpp"

namespace tsc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

}  // namespace

Date Date::from_iso(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
        !all_digits(text.substr(8, 2))) {
        throw InvalidArgument("expected ISO-8601 date (YYYY-MM-DD), got '" + std::string(text) + "'");
    }
    const int y = to_int(text.substr(0, 4));
    const unsigned m = static_cast<unsigned>(to_int(text.substr(5, 2)));
    const unsigned d = static_cast<unsigned>(to_int(text.substr(8, 2)));

    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                          std::chrono::day{d}};
    if (!ymd.ok()) throw InvalidArgument("no such calendar date: '" + std::string(text) + "'");
    const std::chrono::sys_days sd{ymd};
    return Date(static_cast<int>(sd.time_since_epoch().count()));
}

std::string Date::to_iso() const {
    const std::chrono::sys_days sd{std::chrono::days{days_}};
    const std::chrono::year_month_day ymd{sd};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

}  // namespace tsc
