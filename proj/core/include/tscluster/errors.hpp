#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsc {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TSC_DEFINE_ERROR(Name)                                \
    class Name : public Error {                               \
    public:                                                   \
        using Error::Error;                                    \
    }

TSC_DEFINE_ERROR(InvalidArgument);
TSC_DEFINE_ERROR(ConstantSeries);
TSC_DEFINE_ERROR(LengthMismatch);
TSC_DEFINE_ERROR(FlatDifferences);
TSC_DEFINE_ERROR(EmptySeries);
TSC_DEFINE_ERROR(TooShort);
TSC_DEFINE_ERROR(NonDivisibleLength);
TSC_DEFINE_ERROR(NotNormalized);
TSC_DEFINE_ERROR(BadLength);
TSC_DEFINE_ERROR(ConfigMismatch);
TSC_DEFINE_ERROR(InvalidMatrix);
TSC_DEFINE_ERROR(BadK);
TSC_DEFINE_ERROR(SingleCluster);
TSC_DEFINE_ERROR(DegenerateMatrix);
TSC_DEFINE_ERROR(DuplicateRecord);
TSC_DEFINE_ERROR(EmptyCohort);
TSC_DEFINE_ERROR(BadSpec);
TSC_DEFINE_ERROR(IoError);

#undef TSC_DEFINE_ERROR

/// Malformed input row; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A subject in the partition has no attribute row.
class MissingAttributes : public Error {
public:
    explicit MissingAttributes(std::vector<std::string> subject_ids)
        : Error(describe(subject_ids)), subject_ids_(std::move(subject_ids)) {}

    const std::vector<std::string>& subject_ids() const { return subject_ids_; }

private:
    static std::string describe(const std::vector<std::string>& ids);
    std::vector<std::string> subject_ids_;
};

/// A per-pair measure failure inside pairwise_matrix, annotated with the pair.
class PairwiseError : public Error {
public:
    PairwiseError(std::size_t i, std::size_t j, const std::string& inner)
        : Error("pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + inner),
          i_(i), j_(j) {}

    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }

private:
    std::size_t i_;
    std::size_t j_;
};

inline std::string MissingAttributes::describe(const std::vector<std::string>& ids) {
    std::string msg = "missing attributes for " + std::to_string(ids.size()) + " subject(s):";
    std::size_t shown = 0;
    for (const auto& id : ids) {
        if (shown++ == 8) {
            msg += " ...";
            break;
        }
        msg += " " + id;
    }
    return msg;
}

}  // namespace tsc
