#include "tscluster/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "tscluster/errors.hpp"

namespace tsc {

namespace {

// %.17g round-trips doubles exactly through text.
std::string fmt_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string MeasureTag::to_string() const {
    std::string out = "measure=" + measure + " representation=" + representation;
    for (const auto& [k, v] : params) out += " " + k + "=" + v;
    return out;
}

MeasureTag MeasureTag::parse(const std::string& line) {
    MeasureTag tag;
    tag.params.clear();
    std::istringstream in(line);
    std::string token;
    bool have_measure = false;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ParseError(1, "malformed provenance token '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "measure") {
            tag.measure = value;
            have_measure = true;
        } else if (key == "representation") {
            tag.representation = value;
        } else {
            tag.add_param(key, value);
        }
    }
    if (!have_measure) throw ParseError(1, "provenance line lacks measure=");
    return tag;
}

DissimilarityMatrix::DissimilarityMatrix(std::size_t size, std::vector<double> row_major,
                                         MeasureTag tag)
    : size_(size), entries_(std::move(row_major)), tag_(std::move(tag)) {
    if (size_ < 1 || entries_.size() != size_ * size_)
        throw InvalidMatrix("entry count does not match declared size");
    for (std::size_t i = 0; i < size_; ++i) {
        if (entries_[i * size_ + i] != 0.0)
            throw InvalidMatrix("diagonal entry " + std::to_string(i) + " is not zero");
        for (std::size_t j = 0; j < i; ++j) {
            const double v = entries_[i * size_ + j];
            if (!std::isfinite(v) || v < 0.0)
                throw InvalidMatrix("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is not a finite non-negative value");
            if (v != entries_[j * size_ + i])
                throw InvalidMatrix("matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
        }
    }
}

void DissimilarityMatrix::save(std::ostream& out) const {
    out << "# " << tag_.to_string() << "\n";
    out << size_ << "\n";
    for (std::size_t i = 1; i < size_; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (j) out << ' ';
            out << fmt_full(at(i, j));
        }
        out << "\n";
    }
}

DissimilarityMatrix DissimilarityMatrix::load(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.size() < 2 || header[0] != '#')
        throw ParseError(1, "expected '# <provenance>' header line");
    MeasureTag tag = MeasureTag::parse(header.substr(1));

    std::size_t k = 0;
    std::string line;
    if (!std::getline(in, line)) throw ParseError(2, "expected matrix size");
    try {
        k = std::stoul(line);
    } catch (const std::exception&) {
        throw ParseError(2, "expected matrix size, got '" + line + "'");
    }
    if (k < 1) throw ParseError(2, "matrix size must be >= 1");

    std::vector<double> entries(k * k, 0.0);
    for (std::size_t i = 1; i < k; ++i) {
        if (!std::getline(in, line)) throw ParseError(2 + i, "unexpected end of matrix");
        std::istringstream row(line);
        for (std::size_t j = 0; j < i; ++j) {
            double v;
            if (!(row >> v)) throw ParseError(2 + i, "row " + std::to_string(i) + " is too short");
            entries[i * k + j] = v;
            entries[j * k + i] = v;
        }
        double extra;
        if (row >> extra) throw ParseError(2 + i, "row " + std::to_string(i) + " is too long");
    }
    return DissimilarityMatrix(k, std::move(entries), std::move(tag));
}

}  // namespace tsc
