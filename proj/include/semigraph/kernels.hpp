#ifndef SEMIGRAPH_KERNELS_HPP
#define SEMIGRAPH_KERNELS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

namespace semigraph::kernels {

// Data-parallel primitives behind the dense eigensolver's inner loops.
// Scalar reference semantics:
//   dot:          sum_i x[i] * y[i]
//   axpy:         y[i] += a * x[i]
//   rank2_update: y[i] -= a * u[i] + b * v[i]
//   sum_abs:      sum_i |x[i]|
//   sum_sq:       sum_i x[i]^2
// SIMD variants may reassociate the accumulation, so results can differ from
// the scalar ones by normal floating-point roundoff.
struct Ops {
    const char* name;
    double (*dot)(const double* x, const double* y, std::size_t n);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    void (*rank2_update)(double a, const double* u, double b, const double* v, double* y,
                         std::size_t n);
    double (*sum_abs)(const double* x, std::size_t n);
    double (*sum_sq)(const double* x, std::size_t n);
};

const Ops& scalar_ops();

// Null when the build or the running CPU lacks the instruction set.
const Ops* avx2_ops();
const Ops* neon_ops();

// The implementation selected at startup: the widest supported one, unless
// the SEMIGRAPH_KERNELS environment variable names a specific backend.
const Ops& active();

// Forces a backend by name ("scalar", "avx2", "neon"); false if unavailable.
bool select(std::string_view name);

std::vector<const Ops*> available();

} // namespace semigraph::kernels

#endif // SEMIGRAPH_KERNELS_HPP
