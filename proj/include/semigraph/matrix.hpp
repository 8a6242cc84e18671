#ifndef SEMIGRAPH_MATRIX_HPP
#define SEMIGRAPH_MATRIX_HPP

#include "semigraph/core.hpp"
#include "semigraph/rational.hpp"

#include <cstdint>
#include <vector>

namespace semigraph {

// Symmetric matrix with zero diagonal whose entries are nonnegative integer
// multiples of 1/4, stored exactly as the integer numerators (value * 4).
class QuarterMatrix {
public:
    explicit QuarterMatrix(int n);

    int dim() const { return n_; }

    std::int64_t quarters(int i, int j) const { return q_[idx(i, j)]; }
    double value(int i, int j) const { return static_cast<double>(q_[idx(i, j)]) / 4.0; }

    // Sets both (i,j) and (j,i).
    void set_quarters(int i, int j, std::int64_t v);

    std::int64_t max_abs_quarters() const;

    // Dense row-major copy of the entry values.
    std::vector<double> to_dense() const;

    bool operator==(const QuarterMatrix& other) const {
        return n_ == other.n_ && q_ == other.q_;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<std::int64_t> q_;
};

// Row sums of the adjacency matrix, exact multiples of 1/4.
using DegreeVector = std::vector<Rat>;

// Definition-4 adjacency matrix: skeleton distance within the shared edge,
// except 1/2 for partial half edges and 1/4 for quarter edges.
QuarterMatrix adjacency_matrix(const Semigraph& g);

DegreeVector degrees(const Semigraph& g);

// trace(A^2) as the exact sum of squared entries; the authoritative
// second moment used by the bounds.
Rat second_moment_direct(const QuarterMatrix& a);

// The printed second-moment formula
//   (1/6) sum r_i^2 (r_i^2 - 1) - (15/8) m2 - (3/4) m3 - (1/2) m4,
// kept verbatim for comparison. It disagrees with trace(A^2) whenever
// m3 or m4 > 0; see second_moment_direct.
Rat second_moment_paper(const Semigraph& g);

} // namespace semigraph

#endif // SEMIGRAPH_MATRIX_HPP
