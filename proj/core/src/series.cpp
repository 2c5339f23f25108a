#include "tscluster/series.hpp"

#include <cmath>

#include "tscluster/errors.hpp"

namespace tsc {

std::string_view to_string(VariableKind kind) {
    switch (kind) {
        case VariableKind::time: return "time";
        case VariableKind::sessions: return "sessions";
        case VariableKind::actions: return "actions";
        case VariableKind::purchase: return "purchase";
    }
    return "time";
}

VariableKind variable_kind_from_string(std::string_view name) {
    if (name == "time") return VariableKind::time;
    if (name == "sessions") return VariableKind::sessions;
    if (name == "actions") return VariableKind::actions;
    if (name == "purchase") return VariableKind::purchase;
    throw InvalidArgument("unknown variable kind '" + std::string(name) + "'");
}

namespace {

void check_values(const std::vector<double>& values) {
    if (values.size() < 2) throw TooShort("time series needs at least 2 values");
    for (double v : values)
        if (!std::isfinite(v)) throw InvalidArgument("time series values must be finite");
}

}  // namespace

TimeSeries::TimeSeries(std::string subject_id, Date start_date, std::vector<double> values,
                       VariableKind kind)
    : subject_id_(std::move(subject_id)),
      start_date_(start_date),
      values_(std::move(values)),
      kind_(kind) {
    check_values(values_);
}

TimeSeries TimeSeries::with_values(std::vector<double> values) const {
    return TimeSeries(subject_id_, start_date_, std::move(values), kind_);
}

SeriesSet::SeriesSet(std::vector<TimeSeries> series, std::vector<int> event_boundaries)
    : series_(std::move(series)), event_boundaries_(std::move(event_boundaries)) {
    if (series_.empty()) throw InvalidArgument("series set must not be empty");
    start_date_ = series_.front().start_date();
    length_ = series_.front().size();
    kind_ = series_.front().kind();
    for (const auto& s : series_) {
        if (s.start_date() != start_date_ || s.size() != length_ || s.kind() != kind_)
            throw InvalidArgument("all series in a set must share start date, length and kind");
    }
    int prev = -1;
    for (int b : event_boundaries_) {
        if (b <= prev || b < 0 || static_cast<std::size_t>(b) > length_)
            throw InvalidArgument("event boundaries must be strictly increasing within [0, length]");
        prev = b;
    }
}

std::vector<std::string> SeriesSet::subject_ids() const {
    std::vector<std::string> ids;
    ids.reserve(series_.size());
    for (const auto& s : series_) ids.push_back(s.subject_id());
    return ids;
}

SeriesSet SeriesSet::with_transformed(std::vector<std::vector<double>> values) const {
    if (values.size() != series_.size())
        throw LengthMismatch("transformed value count does not match set size");
    std::vector<TimeSeries> out;
    out.reserve(series_.size());
    for (std::size_t i = 0; i < series_.size(); ++i)
        out.push_back(series_[i].with_values(std::move(values[i])));
    return SeriesSet(std::move(out), event_boundaries_);
}

double mean(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v;
    return sum / static_cast<double>(x.size());
}

double sample_sd(std::span<const double> x) {
    const double m = mean(x);
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

std::vector<double> znormalize(std::span<const double> x) {
    if (x.size() < 2) throw TooShort("znormalize needs at least 2 values");
    const double m = mean(x);
    const double sd = sample_sd(x);
    if (sd == 0.0) throw ConstantSeries("cannot z-normalize a constant series");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - m) / sd;
    return out;
}

TimeSeries znormalize(const TimeSeries& x) { return x.with_values(znormalize(x.span())); }

}  // namespace tsc
