#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace tsc {

/// Calendar date, stored as days since 1970-01-01. ISO-8601 text form
/// (YYYY-MM-DD) on both ends; day arithmetic is plain integer math.
class Date {
public:
    Date() = default;

    /// Parses "YYYY-MM-DD"; throws InvalidArgument on malformed or
    /// non-existent dates.
    static Date from_iso(std::string_view text);

    static Date from_days(int days) { return Date(days); }

    std::string to_iso() const;

    int days_since_epoch() const { return days_; }

    Date operator+(int days) const { return Date(days_ + days); }
    Date operator-(int days) const { return Date(days_ - days); }
    /// Signed whole-day difference.
    int operator-(Date other) const { return days_ - other.days_; }

    Date& operator++() { ++days_; return *this; }

    auto operator<=>(const Date&) const = default;

private:
    explicit Date(int days) : days_(days) {}
    int days_ = 0;
};

}  // namespace tsc
