#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sspca {

/// An index lies outside the matrix dimension.
struct InvalidIndex : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// An operation that needs a non-empty index set received an empty one.
struct EmptySet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Seed is larger than the requested solution size.
struct InvalidSeed : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An iterative eigensolver ran out of its iteration budget. Carries the
/// best eigenvalue estimate reached before giving up.
struct NoConvergence : std::runtime_error {
    NoConvergence(const std::string& msg, double best)
        : std::runtime_error(msg), best_estimate(best) {}
    double best_estimate;
};

/// The number of seed subsets does not fit in 64 bits. `approx_count`
/// is a floating-point estimate of the true count.
struct TooManySeeds : std::runtime_error {
    TooManySeeds(const std::string& msg, double approx)
        : std::runtime_error(msg), approx_count(approx) {}
    double approx_count;
};

/// Every threshold of a covariance-thresholding run failed to converge.
struct CtFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration rejected; collects every problem found, not just the first.
struct ConfigError : std::runtime_error {
    explicit ConfigError(std::vector<std::string> problems_list)
        : std::runtime_error(join(problems_list)), problems(std::move(problems_list)) {}
    std::vector<std::string> problems;

private:
    static std::string join(const std::vector<std::string>& ps) {
        std::string out = "invalid configuration:";
        for (const auto& p : ps) {
            out += "\n  - ";
            out += p;
        }
        return out;
    }
};

}  // namespace sspca
