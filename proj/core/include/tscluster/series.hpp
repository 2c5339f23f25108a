#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tscluster/date.hpp"

namespace tsc {

/// The per-day telemetry variable a series was extracted from.
enum class VariableKind { time, sessions, actions, purchase };

std::string_view to_string(VariableKind kind);
VariableKind variable_kind_from_string(std::string_view name);

/// One subject's equal-frequency daily observations, anchored to a start
/// date. Immutable after construction; values are validated to be finite
/// and at least two long.
class TimeSeries {
public:
    TimeSeries(std::string subject_id, Date start_date, std::vector<double> values,
               VariableKind kind);

    const std::string& subject_id() const { return subject_id_; }
    Date start_date() const { return start_date_; }
    VariableKind kind() const { return kind_; }

    const std::vector<double>& values() const { return values_; }
    std::span<const double> span() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    /// Same identity and calendar anchor, different values (transform output).
    TimeSeries with_values(std::vector<double> values) const;

private:
    std::string subject_id_;
    Date start_date_;
    std::vector<double> values_;
    VariableKind kind_;
};

/// An aligned collection of series sharing start date, length and variable
/// kind, plus the day offsets of game-event week boundaries.
class SeriesSet {
public:
    explicit SeriesSet(std::vector<TimeSeries> series, std::vector<int> event_boundaries = {});

    std::size_t size() const { return series_.size(); }
    std::size_t length() const { return length_; }
    Date start_date() const { return start_date_; }
    VariableKind kind() const { return kind_; }

    const TimeSeries& operator[](std::size_t i) const { return series_[i]; }
    const std::vector<TimeSeries>& series() const { return series_; }
    const std::vector<int>& event_boundaries() const { return event_boundaries_; }

    std::vector<std::string> subject_ids() const;

    /// Same metadata and events, transformed values (one vector per member).
    SeriesSet with_transformed(std::vector<std::vector<double>> values) const;

    auto begin() const { return series_.begin(); }
    auto end() const { return series_.end(); }

private:
    std::vector<TimeSeries> series_;
    std::vector<int> event_boundaries_;
    Date start_date_;
    std::size_t length_ = 0;
    VariableKind kind_ = VariableKind::time;
};

/// Shifts and scales to sample mean 0, sample (N-1) standard deviation 1.
/// Throws ConstantSeries when the standard deviation is zero and TooShort
/// below two points.
std::vector<double> znormalize(std::span<const double> x);
TimeSeries znormalize(const TimeSeries& x);

double mean(std::span<const double> x);
/// Sample standard deviation (N-1 denominator).
double sample_sd(std::span<const double> x);

}  // namespace tsc
