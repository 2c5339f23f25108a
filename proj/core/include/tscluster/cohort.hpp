#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tscluster/date.hpp"
#include "tscluster/dendrogram.hpp"
#include "tscluster/series.hpp"

namespace tsc {

/// One subject-day of telemetry.
struct ActivityRecord {
    std::string subject_id;
    Date date;
    double time_played_s = 0.0;
    long long sessions = 0;
    long long actions = 0;
    double purchase = 0.0;
};

/// Snapshot attributes per subject, as supplied by the attributes file.
struct SubjectAttributes {
    std::string subject_id;
    Date install_date;
    long long level_at_start = 0;
    bool is_paying_user_at_start = false;
    Date last_activity_date;
};

/// Immutable indexed telemetry: per-subject daily activity plus attributes.
class TelemetryStore {
public:
    void add_activity(ActivityRecord rec);          // throws DuplicateRecord
    void add_attributes(SubjectAttributes attrs);   // throws DuplicateRecord

    std::size_t subject_count() const { return activity_.size(); }
    const std::map<std::string, std::map<Date, ActivityRecord>>& activity() const {
        return activity_;
    }
    const std::map<std::string, SubjectAttributes>& attributes() const { return attributes_; }

    const ActivityRecord* find_activity(const std::string& subject, Date day) const;
    const SubjectAttributes* find_attributes(const std::string& subject) const;

private:
    std::map<std::string, std::map<Date, ActivityRecord>> activity_;
    std::map<std::string, SubjectAttributes> attributes_;
};

/// Parses the activity and attributes CSV streams into a store.
/// Activity columns: subject_id,date,time_played_s,sessions,actions,purchase
/// Attribute columns: subject_id,install_date,level_at_start,
///                    is_paying_user_at_start,last_activity_date
TelemetryStore ingest(std::istream& activity_csv, std::istream& attributes_csv);
TelemetryStore ingest_files(const std::string& activity_path, const std::string& attributes_path);

void write_activity_csv(std::ostream& out, const std::vector<ActivityRecord>& rows);
void write_attributes_csv(std::ostream& out, const std::vector<SubjectAttributes>& rows);

/// Study-period definition and cohort filters.
struct CohortConfig {
    Date p_start;
    int n_weeks = 3;
    VariableKind variable = VariableKind::time;
    int min_active_days_per_week = 6;       // applied to time-variable cohorts
    bool require_purchase_in_period = true; // applied to purchase cohorts
    int sample_size = 1000;
    std::uint64_t rng_seed = 1;

    Date p_end() const { return p_start + (7 * n_weeks - 1); }
};

/// Applies the cohort filters in order (installed before the period, still
/// active after it, activity/purchase thresholds per variable kind), fills
/// missing days with zeros, then samples down to sample_size with the
/// seeded generator. Subjects are processed in id order, so the result is
/// independent of input row order. Throws EmptyCohort when nothing
/// qualifies.
SeriesSet build_cohort(const TelemetryStore& store, const CohortConfig& cfg);

/// Per-cluster summary of the subjects' starting-date characteristics.
struct CharacteristicsRow {
    int cluster = 0;
    std::size_t member_count = 0;
    double paying_user_ratio = 0.0;
    double mean_level = 0.0;
};
struct CharacteristicsTable {
    std::vector<CharacteristicsRow> rows;

    void write_csv(std::ostream& out) const;
    void write_text(std::ostream& out) const;
};

CharacteristicsTable characteristics_table(const Partition& p,
                                           const std::vector<std::string>& subject_ids,
                                           const TelemetryStore& store);

/// Cumulative churn per cluster at each checkpoint date.
struct ChurnConfig {
    std::vector<Date> checkpoints;   // strictly increasing, all after p_end
    int inactivity_window_days = 30;
};
struct ChurnTable {
    std::vector<Date> checkpoints;
    std::vector<std::vector<double>> ratios;  // [cluster][checkpoint]

    void write_csv(std::ostream& out) const;
    void write_text(std::ostream& out) const;
};

/// A subject counts as churned at checkpoint D when its last activity date
/// lies before D minus the inactivity window. Ratios are non-decreasing
/// across checkpoints.
ChurnTable churn_table(const Partition& p, const std::vector<std::string>& subject_ids,
                       const TelemetryStore& store, const ChurnConfig& cfg);

}  // namespace tsc
