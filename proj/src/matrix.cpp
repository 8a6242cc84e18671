#include "semigraph/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace semigraph {

QuarterMatrix::QuarterMatrix(int n)
    : n_(n), q_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

void QuarterMatrix::set_quarters(int i, int j, std::int64_t v) {
    q_[idx(i, j)] = v;
    q_[idx(j, i)] = v;
}

std::int64_t QuarterMatrix::max_abs_quarters() const {
    std::int64_t m = 0;
    for (std::int64_t v : q_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> QuarterMatrix::to_dense() const {
    std::vector<double> out(q_.size());
    for (std::size_t k = 0; k < q_.size(); ++k) out[k] = static_cast<double>(q_[k]) / 4.0;
    return out;
}

QuarterMatrix adjacency_matrix(const Semigraph& g) {
    const auto cls = classify_vertices(g);
    QuarterMatrix a(g.vertex_count());
    for (const Edge& e : g.edges()) {
        const auto& vs = e.vertices();
        const std::size_t k = vs.size();
        const bool front_me = cls[static_cast<std::size_t>(vs.front())] == VertexClass::MiddleEnd;
        const bool back_me = cls[static_cast<std::size_t>(vs.back())] == VertexClass::MiddleEnd;
        const bool quarter = (k == 2 && front_me && back_me);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                std::int64_t q;
                if (quarter) {
                    q = 1;
                } else if ((i == 0 && j == 1 && front_me) ||
                           (i == k - 2 && j == k - 1 && back_me)) {
                    q = 2; // partial half edge
                } else {
                    q = 4 * static_cast<std::int64_t>(j - i);
                }
                a.set_quarters(vs[i] - 1, vs[j] - 1, q);
            }
        }
    }
    return a;
}

DegreeVector degrees(const Semigraph& g) {
    const QuarterMatrix a = adjacency_matrix(g);
    const int n = a.dim();
    DegreeVector d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::int64_t sum = 0;
        for (int j = 0; j < n; ++j) sum += a.quarters(i, j);
        d[static_cast<std::size_t>(i)] = make_rat(sum, 4);
    }
    return d;
}

Rat second_moment_direct(const QuarterMatrix& a) {
    Int sum = 0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::int64_t q = a.quarters(i, j);
            sum += Int(q) * Int(q);
        }
    }
    Rat m2(sum, 16);
    m2.canonicalize();
    return m2;
}

Rat second_moment_paper(const Semigraph& g) {
    const EdgeCounts counts = edge_counts(g);
    Rat sum = 0;
    for (const Edge& e : g.edges()) {
        const long r = static_cast<long>(e.size());
        sum += make_rat(r * r * (r * r - 1), 6);
    }
    sum -= make_rat(15 * counts.m2, 8);
    sum -= make_rat(3 * counts.m3, 4);
    sum -= make_rat(counts.m4, 2);
    return sum;
}

} // namespace semigraph
