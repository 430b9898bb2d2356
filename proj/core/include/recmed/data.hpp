#pragma once

#include <string>
#include <vector>

#include "recmed/step_function.hpp"

namespace recmed {

enum class MediatorKind { continuous_gaussian, binary };

// One individual's raw record. Event times are kept as recorded, including
// times past min(tau, censor_time); observed-process operations truncate,
// so the same Subject can be re-truncated at a different tau without loss.
struct Subject {
    std::string id;
    std::vector<double> event_times;  // sorted ascending (ties allowed), all >= 0
    double censor_time = 0.0;         // >= 0
    int exposure = 0;                 // {0,1}
    double mediator = 0.0;
    std::vector<double> confounders;
};

// Immutable collection of subjects plus the derived pooled event grid.
class Cohort {
public:
    Cohort(std::vector<Subject> subjects, double tau, MediatorKind mediator_kind);

    const std::vector<Subject>& subjects() const { return subjects_; }
    const Subject& subject(std::size_t i) const { return subjects_[i]; }
    std::size_t size() const { return subjects_.size(); }
    double tau() const { return tau_; }
    MediatorKind mediator_kind() const { return mediator_kind_; }
    std::size_t n_confounders() const { return p_; }

    // Sorted unique observed event times; every estimator integral is a sum
    // over this grid.
    const std::vector<double>& event_grid() const { return grid_; }

private:
    std::vector<Subject> subjects_;
    double tau_;
    MediatorKind mediator_kind_;
    std::size_t p_;
    std::vector<double> grid_;
};

// Observation window end for a subject: min(tau, censor_time).
double exit_time(const Subject& s, double tau);

// At-risk indicator Y(u) = I(u <= min(tau, censor_time)).
int at_risk(const Subject& s, double u, double tau);

// Observed counting process: unit jumps at each event time <= min(tau,
// censor_time); a subject's own tied times accumulate into one jump.
StepFunction counting_process(const Subject& s, double tau);

std::vector<double> pooled_event_grid(const Cohort& cohort);

}  // namespace recmed
