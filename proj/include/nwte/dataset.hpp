#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nwte {

/// An ordered sample of positive reals.  `values` keeps the file order;
/// `sorted` is the ascending copy used by the fitting and test statistics.
struct Dataset {
    std::string name;
    std::string source;  // provenance of the numbers
    std::vector<double> values;
    std::vector<double> sorted;

    std::size_t size() const noexcept { return values.size(); }
};

enum class IngestFormat { automatic, csv, whitespace };

struct IngestOptions {
    IngestFormat format = IngestFormat::automatic;
    std::string column;  // CSV column name or 0-based index; empty = single column
    std::string name;    // dataset name; defaults to the file stem
};

/// Reads a single-column text file or a CSV with a column selector.  Lines
/// starting with '#' and blank lines are ignored.  Parse failures carry the
/// 1-based line number; nonpositive values are rejected.
Dataset ingest(const std::string& path, const IngestOptions& opts = {});

struct DescriptiveStats {
    std::size_t n = 0;
    double mean = 0, median = 0, sd = 0;
    double kurtosis = 0, skewness = 0;   // population moment ratios; NaN when sd == 0
    double mean_abs_dev_mean = 0;        // M1: mean |x - mean|
    double median_abs_dev_median = 0;    // M2: median |x - median|
    double min = 0, max = 0;
    bool shape_available = true;         // false for constant samples
};

/// Summary statistics; requires n >= 2.
DescriptiveStats describe(const Dataset& d);

/// Loads one of the two bundled environmental datasets ("gwd" or "fd") from
/// `data_dir` and verifies it against its descriptive-statistics checksum;
/// a file failing the checksum is rejected with checksum_error.
Dataset load_bundled(const std::string& key, const std::string& data_dir);

/// Resolves the data directory: explicit argument, then the NWTE_DATA_DIR
/// environment variable, then "data".
std::string resolve_data_dir(const std::string& explicit_dir = "");

}  // namespace nwte
