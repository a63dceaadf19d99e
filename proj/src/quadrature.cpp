#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rotsurf::detail {

namespace {

constexpr double kTolerance = 1e-13;
constexpr int kMaxDepth = 20;

// Boost's K15-G7 estimate carries a roundoff floor near eps * |f| that does
// not shrink with the panel, so its relative stopping rule never fires on
// short intervals. Accept a panel once the error is below kTolerance times
// the mean magnitude of f (or kTolerance absolute for small f).
double adaptive(const ScalarFn& f, double a, double b, int depth) {
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    double l1 = 0.0;
    const double value = gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &err, &l1);
    if (err <= kTolerance * std::max(1.0, l1 / (b - a)) || depth >= kMaxDepth) return value;
    const double mid = 0.5 * (a + b);
    return adaptive(f, a, mid, depth + 1) + adaptive(f, mid, b, depth + 1);
}

}  // namespace

double integrate(const ScalarFn& f, double a, double b) {
    if (a == b) return 0.0;
    if (b < a) return -integrate(f, b, a);
    return adaptive(f, a, b, 0);
}

CumulativeIntegral::CumulativeIntegral(ScalarFn integrand, Interval domain, double max_panel) {
    auto state = std::make_shared<State>();
    state->integrand = std::move(integrand);
    const auto panels = static_cast<std::size_t>(
        std::max(1.0, std::ceil(domain.length() / max_panel)));
    state->nodes.resize(panels + 1);
    state->values.resize(panels + 1);
    for (std::size_t i = 0; i <= panels; ++i) {
        state->nodes[i] = domain.lo + domain.length() * static_cast<double>(i) / static_cast<double>(panels);
    }
    state->nodes.back() = domain.hi;
    state->values[0] = 0.0;
    for (std::size_t i = 1; i <= panels; ++i) {
        state->values[i] =
            state->values[i - 1] + integrate(state->integrand, state->nodes[i - 1], state->nodes[i]);
    }
    state_ = std::move(state);
}

double CumulativeIntegral::operator()(double u) const {
    const auto& nodes = state_->nodes;
    // Nearest node keeps the residual integral short on either side.
    auto it = std::lower_bound(nodes.begin(), nodes.end(), u);
    std::size_t k;
    if (it == nodes.end()) {
        k = nodes.size() - 1;
    } else {
        k = static_cast<std::size_t>(it - nodes.begin());
        if (k > 0 && (u - nodes[k - 1]) < (nodes[k] - u)) --k;
    }
    return state_->values[k] + integrate(state_->integrand, nodes[k], u);
}

}  // namespace rotsurf::detail
