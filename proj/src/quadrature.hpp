#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "rotsurf/semi_metric.hpp"

namespace rotsurf::detail {

using ScalarFn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) integral of f over [a, b], absolute error
/// around 1e-13 per accepted panel.
double integrate(const ScalarFn& f, double a, double b);

/// F(u) = integral of f from domain.lo to u. Panel sums are tabulated once;
/// each evaluation integrates only from the nearest node, so F is smooth in u
/// to roundoff level.
class CumulativeIntegral {
public:
    CumulativeIntegral(ScalarFn integrand, Interval domain, double max_panel = 1e-2);

    double operator()(double u) const;
    double derivative(double u) const { return state_->integrand(u); }

private:
    struct State {
        ScalarFn integrand;
        std::vector<double> nodes;
        std::vector<double> values;
    };
    std::shared_ptr<const State> state_;
};

}  // namespace rotsurf::detail
