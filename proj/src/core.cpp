#include "semigraph/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace semigraph {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case Errc::EdgesShareTwoVertices: return "EdgesShareTwoVertices";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EdgeNotInSemigraph: return "EdgeNotInSemigraph";
    case Errc::VertexNotOnEdge: return "VertexNotOnEdge";
    case Errc::ParseError: return "ParseError";
    case Errc::ProductViolatesSemigraphAxiom: return "ProductViolatesSemigraphAxiom";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    }
    return "UnknownError";
}

const char* vertex_class_name(VertexClass c) {
    switch (c) {
    case VertexClass::PureEnd: return "pure-end";
    case VertexClass::PureMiddle: return "pure-middle";
    case VertexClass::MiddleEnd: return "middle-end";
    case VertexClass::Isolated: return "isolated";
    }
    return "?";
}

const char* edge_class_name(EdgeClass c) {
    switch (c) {
    case EdgeClass::Full: return "full";
    case EdgeClass::HalfOnePartial: return "half-one-partial";
    case EdgeClass::HalfTwoPartial: return "half-two-partial";
    case EdgeClass::Quarter: return "quarter";
    }
    return "?";
}

Edge::Edge(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    // Endpoints are distinct in a valid edge, so the comparison never ties.
    if (vertices_.size() >= 2 && vertices_.front() > vertices_.back()) {
        std::reverse(vertices_.begin(), vertices_.end());
    }
}

bool Edge::contains(VertexId v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t Edge::position_of(VertexId v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) {
        throw SemigraphError(Errc::VertexNotOnEdge,
                             "vertex " + std::to_string(v) + " is not on the edge");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

Semigraph::Semigraph(int n, const std::vector<std::vector<VertexId>>& edges) : n_(n) {
    if (n < 1) {
        throw SemigraphError(Errc::VertexOutOfRange, "vertex count must be >= 1");
    }
    edges_.reserve(edges.size());
    for (const auto& seq : edges) {
        if (seq.size() < 2) {
            throw SemigraphError(Errc::DuplicateVertexInEdge,
                                 "edge must have at least 2 vertices");
        }
        std::set<VertexId> seen;
        for (VertexId v : seq) {
            if (v < 1 || v > n) {
                throw SemigraphError(Errc::VertexOutOfRange,
                                     "vertex " + std::to_string(v) + " outside 1.." +
                                         std::to_string(n));
            }
            if (!seen.insert(v).second) {
                throw SemigraphError(Errc::DuplicateVertexInEdge,
                                     "vertex " + std::to_string(v) + " repeated within an edge");
            }
        }
        edges_.emplace_back(seq);
    }

    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (std::size_t j = i + 1; j < edges_.size(); ++j) {
            if (edges_[i] == edges_[j]) {
                throw SemigraphError(Errc::DuplicateEdge,
                                     "edges " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) +
                                         " are equal up to reversal");
            }
            int shared = 0;
            VertexId a = 0, b = 0;
            for (VertexId v : edges_[i].vertices()) {
                if (edges_[j].contains(v)) {
                    ++shared;
                    (shared == 1 ? a : b) = v;
                }
            }
            if (shared > 1) {
                throw SemigraphError(Errc::EdgesShareTwoVertices,
                                     "edges " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " share vertices " +
                                         std::to_string(a) + " and " + std::to_string(b));
            }
        }
    }
}

Semigraph new_semigraph(int n, const std::vector<std::vector<VertexId>>& edges) {
    return Semigraph(n, edges);
}

std::vector<VertexClass> classify_vertices(const Semigraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> is_end(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> is_middle(static_cast<std::size_t>(n) + 1, false);
    for (const Edge& e : g.edges()) {
        const auto& vs = e.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i == 0 || i + 1 == vs.size()) {
                is_end[static_cast<std::size_t>(vs[i])] = true;
            } else {
                is_middle[static_cast<std::size_t>(vs[i])] = true;
            }
        }
    }
    std::vector<VertexClass> out(static_cast<std::size_t>(n) + 1, VertexClass::Isolated);
    for (int v = 1; v <= n; ++v) {
        const auto idx = static_cast<std::size_t>(v);
        if (is_end[idx] && is_middle[idx]) {
            out[idx] = VertexClass::MiddleEnd;
        } else if (is_end[idx]) {
            out[idx] = VertexClass::PureEnd;
        } else if (is_middle[idx]) {
            out[idx] = VertexClass::PureMiddle;
        }
    }
    return out;
}

VertexClass classify_vertex(const Semigraph& g, VertexId v) {
    if (v < 1 || v > g.vertex_count()) {
        throw SemigraphError(Errc::VertexOutOfRange,
                             "vertex " + std::to_string(v) + " outside 1.." +
                                 std::to_string(g.vertex_count()));
    }
    return classify_vertices(g)[static_cast<std::size_t>(v)];
}

namespace {

const Edge& require_edge(const Semigraph& g, const Edge& e) {
    for (const Edge& f : g.edges()) {
        if (f == e) return f;
    }
    throw SemigraphError(Errc::EdgeNotInSemigraph, "edge does not belong to the semigraph");
}

EdgeClass classify_edge_with(const std::vector<VertexClass>& cls, const Edge& e) {
    const bool front_me = cls[static_cast<std::size_t>(e.front())] == VertexClass::MiddleEnd;
    const bool back_me = cls[static_cast<std::size_t>(e.back())] == VertexClass::MiddleEnd;
    if (e.size() == 2 && front_me && back_me) return EdgeClass::Quarter;
    if (front_me && back_me) return EdgeClass::HalfTwoPartial;
    if (front_me || back_me) return EdgeClass::HalfOnePartial;
    return EdgeClass::Full;
}

} // namespace

EdgeClass classify_edge(const Semigraph& g, const Edge& e) {
    require_edge(g, e);
    return classify_edge_with(classify_vertices(g), e);
}

EdgeCounts edge_counts(const Semigraph& g) {
    const auto cls = classify_vertices(g);
    EdgeCounts counts;
    for (const Edge& e : g.edges()) {
        switch (classify_edge_with(cls, e)) {
        case EdgeClass::Full: ++counts.m1; break;
        case EdgeClass::Quarter: ++counts.m2; break;
        case EdgeClass::HalfOnePartial: ++counts.m3; break;
        case EdgeClass::HalfTwoPartial: ++counts.m4; break;
        }
    }
    return counts;
}

bool has_middle_end_vertex(const Semigraph& g) {
    const auto cls = classify_vertices(g);
    return std::any_of(cls.begin(), cls.end(),
                       [](VertexClass c) { return c == VertexClass::MiddleEnd; });
}

std::vector<std::pair<VertexId, VertexId>> partial_half_edges(const Semigraph& g, const Edge& e) {
    require_edge(g, e);
    const auto cls = classify_vertices(g);
    std::vector<std::pair<VertexId, VertexId>> out;
    if (classify_edge_with(cls, e) == EdgeClass::Quarter) return out;
    const auto& vs = e.vertices();
    if (cls[static_cast<std::size_t>(vs.front())] == VertexClass::MiddleEnd) {
        out.emplace_back(vs[0], vs[1]);
    }
    if (cls[static_cast<std::size_t>(vs.back())] == VertexClass::MiddleEnd) {
        out.emplace_back(vs[vs.size() - 2], vs[vs.size() - 1]);
    }
    return out;
}

Skeleton skeleton(const Semigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<VertexId>> adj(static_cast<std::size_t>(n) + 1);
    for (const Edge& e : g.edges()) {
        const auto& vs = e.vertices();
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
            adj[static_cast<std::size_t>(vs[i])].insert(vs[i + 1]);
            adj[static_cast<std::size_t>(vs[i + 1])].insert(vs[i]);
        }
    }
    Skeleton s;
    s.adjacency.resize(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        const auto idx = static_cast<std::size_t>(v);
        s.adjacency[idx].assign(adj[idx].begin(), adj[idx].end());
    }
    return s;
}

int skeleton_distance(const Edge& e, VertexId u, VertexId v) {
    const auto pu = e.position_of(u);
    const auto pv = e.position_of(v);
    return static_cast<int>(pu > pv ? pu - pv : pv - pu);
}

bool is_connected(const Semigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> component(static_cast<std::size_t>(n) + 1, 0);
    int next = 0;
    // Union via repeated flood fill over the co-edge relation: vertices in the
    // same edge land in the same component.
    std::vector<std::vector<const Edge*>> incident(static_cast<std::size_t>(n) + 1);
    for (const Edge& e : g.edges()) {
        for (VertexId v : e.vertices()) incident[static_cast<std::size_t>(v)].push_back(&e);
    }
    for (int start = 1; start <= n; ++start) {
        if (component[static_cast<std::size_t>(start)] != 0) continue;
        if (incident[static_cast<std::size_t>(start)].empty()) return false; // isolated vertex
        ++next;
        std::vector<VertexId> stack{start};
        component[static_cast<std::size_t>(start)] = next;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const Edge* e : incident[static_cast<std::size_t>(v)]) {
                for (VertexId w : e->vertices()) {
                    if (component[static_cast<std::size_t>(w)] == 0) {
                        component[static_cast<std::size_t>(w)] = next;
                        stack.push_back(w);
                    }
                }
            }
        }
    }
    return next <= 1;
}

} // namespace semigraph
