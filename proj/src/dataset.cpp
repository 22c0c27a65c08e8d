#include "nwte/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "nwte/errors.hpp"
#include "nwte/reference.hpp"

namespace nwte {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = strip(s);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
}

double median_of_sorted(const std::vector<double>& s) {
    const std::size_t n = s.size();
    return n % 2 == 1 ? s[n / 2] : 0.5 * (s[n / 2 - 1] + s[n / 2]);
}

}  // namespace

Dataset ingest(const std::string& path, const IngestOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ingest: cannot open " + path);

    bool csv = opts.format == IngestFormat::csv;
    if (opts.format == IngestFormat::automatic) {
        auto ext = std::filesystem::path(path).extension().string();
        csv = ext == ".csv" || !opts.column.empty();
    }

    Dataset d;
    d.name = opts.name.empty() ? std::filesystem::path(path).stem().string() : opts.name;
    d.source = path;

    std::string line;
    long line_no = 0;
    long column_index = -1;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.size() >= 3 && line[0] == '\xEF')
            line = line.substr(3);  // strip a UTF-8 BOM
        const std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;

        if (!csv) {
            double v;
            if (!parse_double(t, v)) throw parse_error("ingest: not a number: '" + t + "'", line_no);
            if (!(v > 0.0)) throw parse_error("ingest: nonpositive value " + std::to_string(v), line_no);
            d.values.push_back(v);
            continue;
        }

        auto fields = split_csv(t);
        if (column_index < 0) {
            // resolve the column selector on the first data-bearing row
            if (opts.column.empty()) {
                column_index = 0;
            } else {
                double tmp;
                if (parse_double(opts.column, tmp) && opts.column.find_first_not_of("0123456789") ==
                                                          std::string::npos) {
                    column_index = std::strtol(opts.column.c_str(), nullptr, 10);
                } else {
                    auto it = std::find(fields.begin(), fields.end(), opts.column);
                    if (it == fields.end())
                        throw parse_error("ingest: column '" + opts.column + "' not found", line_no);
                    column_index = static_cast<long>(it - fields.begin());
                    saw_header = true;
                    continue;
                }
            }
            // a non-numeric first row is treated as a header
            double probe;
            if (!saw_header && !fields.empty() &&
                !parse_double(fields[static_cast<std::size_t>(column_index)], probe))
                continue;
        }
        if (column_index >= static_cast<long>(fields.size()))
            throw parse_error("ingest: row has too few columns", line_no);
        const std::string& cell = fields[static_cast<std::size_t>(column_index)];
        double v;
        if (!parse_double(cell, v)) throw parse_error("ingest: not a number: '" + cell + "'", line_no);
        if (!(v > 0.0)) throw parse_error("ingest: nonpositive value " + std::to_string(v), line_no);
        d.values.push_back(v);
    }
    d.sorted = d.values;
    std::sort(d.sorted.begin(), d.sorted.end());
    return d;
}

DescriptiveStats describe(const Dataset& d) {
    const std::size_t n = d.size();
    if (n < 2) throw insufficient_data_error("describe: need at least two observations");
    DescriptiveStats s;
    s.n = n;
    const double nd = static_cast<double>(n);
    double sum = 0.0;
    for (double x : d.values) sum += x;
    s.mean = sum / nd;
    s.median = median_of_sorted(d.sorted);
    s.min = d.sorted.front();
    s.max = d.sorted.back();

    double m2 = 0.0, m3 = 0.0, m4 = 0.0, adev = 0.0;
    for (double x : d.values) {
        const double c = x - s.mean;
        m2 += c * c;
        m3 += c * c * c;
        m4 += c * c * c * c;
        adev += std::fabs(c);
    }
    m2 /= nd;
    m3 /= nd;
    m4 /= nd;
    s.sd = std::sqrt(m2 * nd / (nd - 1.0));  // sample standard deviation
    s.mean_abs_dev_mean = adev / nd;

    std::vector<double> dev(n);
    for (std::size_t i = 0; i < n; ++i) dev[i] = std::fabs(d.values[i] - s.median);
    std::sort(dev.begin(), dev.end());
    s.median_abs_dev_median = median_of_sorted(dev);

    if (m2 > 0.0) {
        // population moment ratios; kurtosis is the raw (non-excess) ratio
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis = m4 / (m2 * m2);
        s.shape_available = true;
    } else {
        s.skewness = std::numeric_limits<double>::quiet_NaN();
        s.kurtosis = std::numeric_limits<double>::quiet_NaN();
        s.shape_available = false;
    }
    return s;
}

namespace {

void check_close(double got, double want, double rel_tol, const char* what,
                 const std::string& key) {
    const double scale = std::max(std::fabs(want), 1e-12);
    if (std::fabs(got - want) > rel_tol * scale)
        throw checksum_error("bundled dataset '" + key + "' failed its checksum: " + what + " = " +
                             std::to_string(got) + ", expected " + std::to_string(want));
}

}  // namespace

Dataset load_bundled(const std::string& key, const std::string& data_dir) {
    const reference::DatasetStats* ref = nullptr;
    std::string file, name, source;
    if (key == "gwd") {
        ref = &reference::kGwdStats;
        file = "gwd.txt";
        name = "GWD";
        source = "vinyl chloride concentrations from clean upgradient monitoring wells "
                 "(Bhaumik & Gibbons, Ground Water 44(5), 2006)";
    } else if (key == "fd") {
        ref = &reference::kFdStats;
        file = "fd.txt";
        name = "FD";
        source = "annual flood discharge rates of the Floyd River at James, Iowa, 1935-1973 "
                 "(Akinsete, Famoye & Lee, Statistics 42(6), 2008)";
    } else {
        throw std::domain_error("load_bundled: expected 'gwd' or 'fd', got '" + key + "'");
    }

    IngestOptions opts;
    opts.name = name;
    Dataset d = ingest((std::filesystem::path(data_dir) / file).string(), opts);
    d.source = source;

    if (d.size() != ref->n)
        throw checksum_error("bundled dataset '" + key + "' failed its checksum: n = " +
                             std::to_string(d.size()) + ", expected " + std::to_string(ref->n));
    const auto s = describe(d);
    check_close(s.mean, ref->mean, 1e-3, "mean", key);
    check_close(s.sd, ref->sd, 1e-3, "sd", key);
    check_close(s.median, ref->median, 1e-3, "median", key);
    check_close(s.min, ref->min, 1e-3, "min", key);
    check_close(s.max, ref->max, 1e-3, "max", key);
    return d;
}

std::string resolve_data_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("NWTE_DATA_DIR"); env && *env) return env;
    return "data";
}

}  // namespace nwte
