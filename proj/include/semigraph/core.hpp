#ifndef SEMIGRAPH_CORE_HPP
#define SEMIGRAPH_CORE_HPP

#include "semigraph/errors.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace semigraph {

// Vertices are 1-based ids in 1..n, matching the usual v_1..v_n numbering.
using VertexId = int;

enum class VertexClass { PureEnd, PureMiddle, MiddleEnd, Isolated };
enum class EdgeClass { Full, HalfOnePartial, HalfTwoPartial, Quarter };

const char* vertex_class_name(VertexClass c);
const char* edge_class_name(EdgeClass c);

// An edge is an ordered tuple of >= 2 distinct vertices, equal to its
// reversal. Stored in canonical orientation: smaller endpoint id first.
class Edge {
public:
    explicit Edge(std::vector<VertexId> vertices);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    VertexId front() const { return vertices_.front(); }
    VertexId back() const { return vertices_.back(); }
    VertexId at(std::size_t pos) const { return vertices_[pos]; }

    bool contains(VertexId v) const;
    // 0-based position of v within the canonical ordering.
    std::size_t position_of(VertexId v) const; // throws VertexNotOnEdge

    bool operator==(const Edge& other) const { return vertices_ == other.vertices_; }

private:
    std::vector<VertexId> vertices_;
};

struct EdgeCounts {
    int m1 = 0; // full edges
    int m2 = 0; // quarter edges
    int m3 = 0; // half edges with one partial half edge
    int m4 = 0; // half edges with two partial half edges

    int total() const { return m1 + m2 + m3 + m4; }
};

// Immutable after construction; all free functions below are pure.
class Semigraph {
public:
    Semigraph(int n, const std::vector<std::vector<VertexId>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
};

Semigraph new_semigraph(int n, const std::vector<std::vector<VertexId>>& edges);

VertexClass classify_vertex(const Semigraph& g, VertexId v);
std::vector<VertexClass> classify_vertices(const Semigraph& g);
EdgeClass classify_edge(const Semigraph& g, const Edge& e);
EdgeCounts edge_counts(const Semigraph& g);

bool has_middle_end_vertex(const Semigraph& g);

// Consecutive pairs adjacent to MiddleEnd end vertices; empty for full and
// quarter edges, the whole pair for a half 2-edge.
std::vector<std::pair<VertexId, VertexId>> partial_half_edges(const Semigraph& g, const Edge& e);

// Simple graph joining consecutively adjacent vertices; adjacency lists are
// sorted ascending.
struct Skeleton {
    std::vector<std::vector<VertexId>> adjacency; // index 0 unused
};

Skeleton skeleton(const Semigraph& g);

// |position(u) - position(v)| within the edge ordering.
int skeleton_distance(const Edge& e, VertexId u, VertexId v);

// Edge chains cannot reach isolated vertices, so any isolated vertex makes
// the semigraph disconnected.
bool is_connected(const Semigraph& g);

} // namespace semigraph

#endif // SEMIGRAPH_CORE_HPP
