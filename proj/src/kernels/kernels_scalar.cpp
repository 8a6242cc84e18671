#include "semigraph/kernels.hpp"

#include <cmath>

namespace semigraph::kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void rank2_update_scalar(double a, const double* u, double b, const double* v, double* y,
                         std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] -= a * u[i] + b * v[i];
}

double sum_abs_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i]);
    return acc;
}

double sum_sq_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar",         dot_scalar,     axpy_scalar,
                         rank2_update_scalar, sum_abs_scalar, sum_sq_scalar};
    return ops;
}

} // namespace semigraph::kernels
