#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace singlab {

using OdeRhs = std::function<void(double t, const double* y, double* dydt)>;

/// Initial value problem. Tolerances must be positive and the span
/// non-degenerate; singular abscissae have to be excluded by the caller.
struct IvpProblem {
    int dim = 1;
    OdeRhs rhs;
    std::vector<double> y0;
    double t0 = 0.0;
    double t1 = 1.0;
    double rtol = 1e-10;
    double atol = 1e-12;
    double max_step = 0.0;  // 0 => no cap
    long max_steps = 4000000;
    /// Optional early stop; integration ends at the first accepted step
    /// whose endpoint satisfies the predicate.
    std::function<bool(double t, const double* y)> stop;
};

struct OdeNonConvergence : std::runtime_error {
    double reached;
    OdeNonConvergence(const std::string& what, double reached_t)
        : std::runtime_error(what), reached(reached_t) {}
};

/// Accepted-step trajectory with dense queries (cubic Hermite per step,
/// matching the fourth-order member of the embedded pair).
class Trajectory {
public:
    Trajectory(int dim) : dim_(dim) {}

    void push(double t, const std::vector<double>& y, const std::vector<double>& f);

    int dim() const { return dim_; }
    size_t steps() const { return ts_.size(); }
    double t_front() const { return ts_.front(); }
    double t_back() const { return ts_.back(); }
    const std::vector<double>& times() const { return ts_; }
    const std::vector<double>& state(size_t i) const { return ys_[i]; }
    const std::vector<double>& back() const { return ys_.back(); }

    /// Dense evaluation at any t inside the covered span.
    std::vector<double> at(double t) const;
    double at(double t, int comp) const { return at(t)[static_cast<size_t>(comp)]; }

    bool stopped_early = false;

private:
    int dim_;
    std::vector<double> ts_;
    std::vector<std::vector<double>> ys_;
    std::vector<std::vector<double>> fs_;
};

/// Adaptive Dormand-Prince 5(4) with PI step control.
Trajectory integrate_ivp(const IvpProblem& p);

/// Fixed-step eighth-order Dormand-Prince step scheme; the independent
/// oracle used for two-integrator agreement checks.
Trajectory integrate_fixed_rk8(const IvpProblem& p, long nsteps);

}  // namespace singlab
