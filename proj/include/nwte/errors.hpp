#pragma once

#include <stdexcept>
#include <string>

namespace nwte {

// Series truncation could not meet the requested tolerance within the
// configured outer-index cap (or the partial sums are too ill-conditioned
// for the tolerance to be certified).
class truncation_error : public std::runtime_error {
public:
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// Conditioning event has (numerically) zero probability, e.g. S(t) or F(t)
// underflowed below 1e-300.
class null_event_error : public std::runtime_error {
public:
    explicit null_event_error(const std::string& what) : std::runtime_error(what) {}
};

// A probability-integral transform z_i landed exactly on 0 or 1, so the
// Anderson-Darling statistic is undefined.
class degenerate_sample_error : public std::runtime_error {
public:
    explicit degenerate_sample_error(const std::string& what) : std::runtime_error(what) {}
};

// Some observation has zero density under the model, so the log-likelihood
// is -inf.
class nonfinite_loglik_error : public std::runtime_error {
public:
    explicit nonfinite_loglik_error(const std::string& what) : std::runtime_error(what) {}
};

// Input file could not be parsed; line() is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

// A bundled dataset failed its descriptive-statistics checksum.
class checksum_error : public std::runtime_error {
public:
    explicit checksum_error(const std::string& what) : std::runtime_error(what) {}
};

class insufficient_data_error : public std::runtime_error {
public:
    explicit insufficient_data_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nwte
