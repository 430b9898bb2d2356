#pragma once

#include <cstddef>
#include <vector>

namespace recmed {

// Right-continuous step function: value(t) = sum of jump sizes at times <= t.
// Jump times are strictly ascending; value(t) = 0 before the first jump.
class StepFunction {
public:
    StepFunction() = default;

    // `times` strictly ascending, same length as `sizes`.
    StepFunction(std::vector<double> times, std::vector<double> sizes);

    double value(double t) const;

    std::size_t size() const { return times_.size(); }
    bool empty() const { return times_.empty(); }
    const std::vector<double>& jump_times() const { return times_; }
    const std::vector<double>& jump_sizes() const { return sizes_; }
    double jump_time(std::size_t k) const { return times_[k]; }
    double jump_size(std::size_t k) const { return sizes_[k]; }

    // Cumulative value at the k-th jump time, i.e. value(jump_time(k)).
    double cumulative(std::size_t k) const { return cum_[k]; }

    double total() const { return cum_.empty() ? 0.0 : cum_.back(); }

private:
    std::vector<double> times_;
    std::vector<double> sizes_;
    std::vector<double> cum_;
};

}  // namespace recmed
