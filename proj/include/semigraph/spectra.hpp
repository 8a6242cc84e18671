#ifndef SEMIGRAPH_SPECTRA_HPP
#define SEMIGRAPH_SPECTRA_HPP

#include "semigraph/matrix.hpp"
#include "semigraph/rational.hpp"

#include <utility>
#include <vector>

namespace semigraph {

// Real eigenvalues sorted descending.
struct Spectrum {
    std::vector<double> values;

    double largest() const { return values.empty() ? 0.0 : values.front(); }
    double sum() const;
    double sum_sq() const;
};

// Uniform tolerance policy: tau = 1e-10 * n * max |a_ij|.
double spectrum_tolerance(const QuarterMatrix& a);

// Householder tridiagonalization + implicit-shift QL. Throws
// ConvergenceFailure if the QL iteration cap is exceeded.
Spectrum eigenvalues(const QuarterMatrix& a);

// Sum of absolute eigenvalues.
double energy(const QuarterMatrix& a);

// Monic integer characteristic polynomial of the integer matrix 4A, so that
// lambda is an eigenvalue of A iff mu = 4*lambda is a root.
struct IntCharPoly {
    static constexpr int scale = 4;
    std::vector<Int> coeffs; // c[0] + c[1] mu + ... + c[deg] mu^deg, monic
    // Gershgorin row-sum bound on |mu|; keeps the integer-root scan small.
    // When 0 (hand-built polynomials) the Cauchy bound is used instead.
    Int root_bound = 0;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

IntCharPoly char_poly_exact(const QuarterMatrix& a);

// Exact rational roots (as eigenvalues of A, i.e. mu/4) with multiplicities,
// plus the deflated remainder in mu, which has no rational roots left.
struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots; // descending by value
    std::vector<Int> remainder;             // monic, degree 0 when all roots rational

    bool all_rational() const { return remainder.size() <= 1; }
};

RationalRoots rational_eigenvalues(const IntCharPoly& p);

// Real roots of t^3 + b t + c: the trigonometric form when all three roots
// are real, Cardano otherwise. Returns 3 or 1 values, ascending.
std::vector<double> solve_cubic_depressed(double b, double c);

// Real roots of the monic cubic x^3 + a2 x^2 + a1 x + a0, ascending.
std::vector<double> solve_cubic(double a2, double a1, double a0);

} // namespace semigraph

#endif // SEMIGRAPH_SPECTRA_HPP
