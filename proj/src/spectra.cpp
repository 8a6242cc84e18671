#include "semigraph/spectra.hpp"

#include "semigraph/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace semigraph {

double Spectrum::sum() const {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
}

double Spectrum::sum_sq() const {
    return kernels::active().sum_sq(values.data(), values.size());
}

double spectrum_tolerance(const QuarterMatrix& a) {
    return 1e-10 * a.dim() * (static_cast<double>(a.max_abs_quarters()) / 4.0);
}

namespace {

// Householder reduction to tridiagonal form, eigenvalues only. Works on the
// full symmetric matrix so every inner loop runs over contiguous rows.
// d receives the diagonal, e the subdiagonals (e[i] couples d[i], d[i+1]).
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
    const auto& ops = kernels::active();
    auto row = [&](int i) { return a.data() + static_cast<std::size_t>(i) * n; };

    std::vector<double> u(static_cast<std::size_t>(n));
    std::vector<double> p(static_cast<std::size_t>(n));

    for (int i = n - 1; i >= 1; --i) {
        const std::size_t len = static_cast<std::size_t>(i); // active prefix 0..i-1
        if (len == 1) {
            e[static_cast<std::size_t>(i) - 1] = row(i)[0];
            continue;
        }
        const double scale = ops.sum_abs(row(i), len);
        if (scale == 0.0) {
            e[len - 1] = 0.0;
            continue;
        }
        for (std::size_t k = 0; k < len; ++k) u[k] = row(i)[k] / scale;
        const double sigma = ops.sum_sq(u.data(), len);
        const double f = u[len - 1];
        const double g = f >= 0.0 ? -std::sqrt(sigma) : std::sqrt(sigma);
        e[len - 1] = scale * g;
        const double h = sigma - f * g; // = |v|^2 / 2 for the reflector v
        u[len - 1] = f - g;

        for (std::size_t j = 0; j < len; ++j) {
            p[j] = ops.dot(row(static_cast<int>(j)), u.data(), len) / h;
        }
        const double K = ops.dot(u.data(), p.data(), len) / (2.0 * h);
        ops.axpy(-K, u.data(), p.data(), len); // p := p - K u  (the q vector)

        for (std::size_t j = 0; j < len; ++j) {
            // A[j][k] -= q[j] u[k] + u[j] q[k]
            ops.rank2_update(p[j], u.data(), u[j], p.data(), row(static_cast<int>(j)), len);
        }
    }
    for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = row(j)[j];
}

constexpr int kQlMaxIterations = 64;

// Implicit-shift QL on a symmetric tridiagonal matrix, eigenvalues only.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
    if (n <= 1) return;
    const double eps = std::numeric_limits<double>::epsilon();
    e[static_cast<std::size_t>(n) - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == kQlMaxIterations) {
                    throw SemigraphError(Errc::ConvergenceFailure,
                                         "QL iteration cap (" +
                                             std::to_string(kQlMaxIterations) +
                                             ") exceeded at eigenvalue " + std::to_string(l));
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, pshift = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= pshift;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - pshift;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    pshift = s * r;
                    d[i + 1] = g + pshift;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= pshift;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

Spectrum eigenvalues(const QuarterMatrix& a) {
    const int n = a.dim();
    std::vector<double> dense = a.to_dense();
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    if (n == 1) {
        d[0] = dense[0];
    } else {
        tridiagonalize(dense, n, d, e);
        ql_implicit(d, e, n);
    }
    std::sort(d.begin(), d.end(), std::greater<double>());
    return Spectrum{std::move(d)};
}

double energy(const QuarterMatrix& a) {
    const Spectrum s = eigenvalues(a);
    return kernels::active().sum_abs(s.values.data(), s.values.size());
}

IntCharPoly char_poly_exact(const QuarterMatrix& a) {
    const int n = a.dim();

    std::vector<Int> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m[static_cast<std::size_t>(i) * n + j] = Int(a.quarters(i, j));
        }
    }

    Int bound = 0;
    for (int i = 0; i < n; ++i) {
        Int row_sum = 0;
        for (int j = 0; j < n; ++j) row_sum += abs(m[static_cast<std::size_t>(i) * n + j]);
        bound = std::max(bound, row_sum);
    }

    // Faddeev-LeVerrier over exact integers: every division is exact because
    // the characteristic coefficients of an integer matrix are integers.
    IntCharPoly out;
    out.coeffs.assign(static_cast<std::size_t>(n) + 1, Int(0));
    out.coeffs[static_cast<std::size_t>(n)] = 1;
    out.root_bound = bound;

    std::vector<Int> work = m; // M_1 = A
    Int trace = 0;
    for (int i = 0; i < n; ++i) trace += work[static_cast<std::size_t>(i) * n + i];
    if (n >= 1) out.coeffs[static_cast<std::size_t>(n) - 1] = -trace;

    std::vector<Int> next(static_cast<std::size_t>(n) * n);
    for (int k = 2; k <= n; ++k) {
        // work += c_{n-k+1} I
        const Int& ck = out.coeffs[static_cast<std::size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) work[static_cast<std::size_t>(i) * n + i] += ck;
        // next = A * work
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Int acc = 0;
                for (int l = 0; l < n; ++l) {
                    acc += m[static_cast<std::size_t>(i) * n + l] *
                           work[static_cast<std::size_t>(l) * n + j];
                }
                next[static_cast<std::size_t>(i) * n + j] = acc;
            }
        }
        work.swap(next);
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += work[static_cast<std::size_t>(i) * n + i];
        Int c;
        mpz_divexact(c.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
        out.coeffs[static_cast<std::size_t>(n - k)] = -c;
    }
    return out;
}

namespace {

Int eval_poly(const std::vector<Int>& coeffs, const Int& x) {
    Int acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * x + coeffs[k];
    }
    return acc;
}

// Exact synthetic division of a monic polynomial by (mu - root).
std::vector<Int> deflate(const std::vector<Int>& coeffs, const Int& root) {
    const std::size_t deg = coeffs.size() - 1;
    std::vector<Int> q(deg);
    q[deg - 1] = coeffs[deg];
    for (std::size_t k = deg - 1; k-- > 0;) {
        q[k] = coeffs[k + 1] + root * q[k + 1];
    }
    return q;
}

} // namespace

RationalRoots rational_eigenvalues(const IntCharPoly& p) {
    RationalRoots out;
    std::vector<Int> work = p.coeffs;

    std::vector<std::pair<Int, int>> found; // mu root, multiplicity

    // mu = 0 first: strip trailing zero constant terms.
    int zero_mult = 0;
    while (work.size() > 1 && work[0] == 0) {
        work.erase(work.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) found.emplace_back(Int(0), zero_mult);

    // All eigenvalues of 4A satisfy |mu| <= Gershgorin row-sum bound; any
    // rational root of a monic integer polynomial is an integer dividing the
    // constant term.
    Int bound = p.root_bound;
    if (bound <= 0) {
        for (std::size_t k = 0; k + 1 < p.coeffs.size(); ++k) {
            bound = std::max(bound, Int(abs(p.coeffs[k]) + 1));
        }
    }
    for (Int cand = -bound; cand <= bound && work.size() > 1; cand += 1) {
        if (cand == 0) continue;
        if (!mpz_divisible_p(work[0].get_mpz_t(), cand.get_mpz_t())) continue;
        int mult = 0;
        while (work.size() > 1 && eval_poly(work, cand) == 0) {
            work = deflate(work, cand);
            ++mult;
        }
        if (mult > 0) found.emplace_back(cand, mult);
    }

    std::sort(found.begin(), found.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first > rhs.first; });
    for (const auto& [mu, mult] : found) {
        Rat lambda(mu, IntCharPoly::scale);
        lambda.canonicalize();
        out.roots.emplace_back(lambda, mult);
    }
    out.remainder = std::move(work);
    return out;
}

namespace {

double polish_cubic(double a2, double a1, double a0, double x) {
    for (int it = 0; it < 3; ++it) {
        const double f = ((x + a2) * x + a1) * x + a0;
        const double fp = (3.0 * x + 2.0 * a2) * x + a1;
        if (fp == 0.0) break;
        const double step = f / fp;
        if (!std::isfinite(step)) break;
        x -= step;
    }
    return x;
}

} // namespace

std::vector<double> solve_cubic_depressed(double b, double c) {
    if (b == 0.0 && c == 0.0) return {0.0, 0.0, 0.0};

    const double disc = -4.0 * b * b * b - 27.0 * c * c;
    std::vector<double> roots;
    if (disc >= 0.0) {
        // Three real roots: t_k = m cos(theta - 2 pi k / 3).
        const double mcoef = 2.0 * std::sqrt(-b / 3.0);
        double u = -4.0 * c / (mcoef * mcoef * mcoef);
        u = std::clamp(u, -1.0, 1.0);
        const double theta = std::acos(u) / 3.0;
        for (int k = 0; k < 3; ++k) {
            const double t = mcoef * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
            roots.push_back(polish_cubic(0.0, b, c, t));
        }
    } else {
        const double shifted = std::sqrt(c * c / 4.0 + b * b * b / 27.0);
        const double t = std::cbrt(-c / 2.0 + shifted) + std::cbrt(-c / 2.0 - shifted);
        roots.push_back(polish_cubic(0.0, b, c, t));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<double> solve_cubic(double a2, double a1, double a0) {
    const double shift = a2 / 3.0;
    const double b = a1 - a2 * a2 / 3.0;
    const double c = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    std::vector<double> roots = solve_cubic_depressed(b, c);
    for (double& x : roots) x = polish_cubic(a2, a1, a0, x - shift);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace semigraph
