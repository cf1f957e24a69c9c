#ifndef MPKC_DECOMPOSE_HPP
#define MPKC_DECOMPOSE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mpkc/graph.hpp"
#include "mpkc/gyarfas.hpp"

namespace mpkc {

enum class SpineKind { Path, Cycle };

// The spine Q: the maximal induced path itself, or that path closed into an
// induced cycle by one extra vertex.
struct Spine {
    SpineKind kind = SpineKind::Path;
    std::vector<int> vertices; // consecutive; for cycles the ends are adjacent too
    int order() const { return static_cast<int>(vertices.size()); }
};

// If some vertex is adjacent to both endpoints of p and to no other path
// vertex, close p into an induced cycle through the smallest such vertex.
// Requires |p| >= 7 and p maximal induced.
Spine close_to_cycle(const Graph& g, const InducedPath& p);

// Neighborhood classes of N(Q). EndFirst/EndLast exist only for paths; Wide
// and Mid carry the 1-based spine position they attach around.
enum class NQClass { EndFirst, EndLast, Wide, Mid, Universal };

struct NQEntry {
    NQClass cls;
    int index = 0; // spine position for Wide (= B_i) and Mid (= C_i)
};

struct NQClassification {
    std::map<int, NQEntry> entries; // vertex -> class
};

// Assigns every vertex of N(Q) to exactly one class by its exact neighborhood
// signature on Q. A vertex matching no signature certifies that g is not
// (bull,E)-free; ClassViolationError then carries that vertex.
NQClassification classify_nq(const Graph& g, const Spine& q);

// Partition of V(G) into the fat path/cycle R = V_1..V_r, the separator D
// (complete to R, separating it from the rest) and the remainder T.
struct FatDecomposition {
    SpineKind kind = SpineKind::Path;
    std::vector<VertexSet> parts; // V_1..V_r
    VertexSet separator;          // D
    VertexSet remainder;          // T
    Spine spine;                  // the Q the parts were built around

    int order() const { return static_cast<int>(parts.size()); }
    VertexSet fat_union() const;
};

// Builds the decomposition from a maximal induced path of >= 7 vertices and
// verifies every structural claim; a failed check raises ClassViolationError.
FatDecomposition build_decomposition(const Graph& g, const InducedPath& p);

struct Violation {
    std::string rule;
    std::vector<int> witness;
};

// Empty iff the decomposition satisfies every invariant: non-empty parts,
// order bounds, fat adjacency, separator completeness, no fat-remainder
// edges, partition coverage, and containment of every remainder component in
// one component of G - N[Q].
std::vector<Violation> validate_decomposition(const Graph& g, const FatDecomposition& dec);

// For (bull,chair)-free inputs: each component of the remainder is complete
// to some separator vertex; the smallest such vertex is reported per
// component. A component with no dominator raises ClassViolationError.
std::vector<std::pair<VertexSet, int>> chair_component_dominators(const Graph& g,
                                                                  const FatDecomposition& dec);

// For (bull,chair)-free inputs and a maximal induced path of >= 3 vertices:
// each component of G - N[P] is complete to some vertex of N(P).
std::vector<std::pair<VertexSet, int>> path_neighborhood_dominators(const Graph& g,
                                                                    const InducedPath& p);

} // namespace mpkc

#endif
