#pragma once

// Test-only reference computations. Nothing here calls into the library's
// numerical paths, so agreement is an independent check.

#include <cmath>
#include <functional>
#include <random>

namespace oracle {

enum class Shape { Exp, Trig, Affine };

inline double profile(Shape shape, double C, double C1, double C2, double u) {
    switch (shape) {
        case Shape::Exp: return C1 * std::exp(C * u) + C2 * std::exp(-C * u);
        case Shape::Trig: return C1 * std::sin(C * u) + C2 * std::cos(C * u);
        case Shape::Affine: return C1 * u + C2;
    }
    return 0.0;
}

/// Five-point second derivative (error O(h^4)).
inline double second_derivative(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

inline double first_derivative(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

/// Composite Simpson with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

/// Gaussian curvature of the torus ((R + r cos u) cos v, (R + r cos u) sin v, r sin u).
inline double torus_curvature(double R, double r, double u) {
    return std::cos(u) / (r * (R + r * std::cos(u)));
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

}  // namespace oracle
