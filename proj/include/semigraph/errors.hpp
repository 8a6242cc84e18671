#ifndef SEMIGRAPH_ERRORS_HPP
#define SEMIGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semigraph {

enum class Errc {
    DuplicateVertexInEdge,
    EdgesShareTwoVertices,
    DuplicateEdge,
    VertexOutOfRange,
    EdgeNotInSemigraph,
    VertexNotOnEdge,
    ParseError,
    ProductViolatesSemigraphAxiom,
    ConvergenceFailure,
    NegativeRadicand,
};

const char* errc_name(Errc code);

class SemigraphError : public std::runtime_error {
public:
    SemigraphError(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace semigraph

#endif // SEMIGRAPH_ERRORS_HPP
