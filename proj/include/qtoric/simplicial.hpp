#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtoric {

/// Abstract simplicial complex on vertices 1..m, stored by its maximal
/// simplices only. Face queries test containment in some facet, which is
/// cheap for the dual complexes of simple polytopes handled here.
///
/// Construction enforces: at least one vertex, facets sorted and within
/// range, no facet contained in another, every vertex on some facet.
/// The vertex ordering is part of the data and is never permuted silently.
class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets);

    int vertex_count() const { return vertex_count_; }

    /// Facets in lexicographic order, each sorted ascending, 1-based labels.
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    /// True iff the vertex set is contained in some facet. The empty set is
    /// a face of every complex.
    bool is_face(const std::vector<int>& vertices) const;

    /// Dimension of the largest simplex (|facet| - 1).
    int dimension() const;

    /// All facets have the same cardinality.
    bool is_pure() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int vertex_count_;
    std::vector<std::vector<int>> facets_;
};

/// All inclusion-minimal nonfaces, lexicographically ordered.
struct NonfaceReport {
    std::vector<std::vector<int>> minimal_nonfaces;
    std::vector<int> cardinalities;  // multiset of sizes, ascending
    bool pairwise_disjoint = true;
};

NonfaceReport minimal_nonfaces(const SimplicialComplex& k);

/// K(Delta^{d1} x ... x Delta^{dr}) = dDelta^{d1} * ... * dDelta^{dr}.
/// Vertex blocks are factor-major: factor i occupies d_i + 1 consecutive
/// labels, matching the facet ordering F_11, F_12, ..., F_1(d1+1), F_21, ...
/// Maximal simplices take all but one vertex from each block.
SimplicialComplex build_dual_of_simplex_product(const std::vector<int>& factor_dims);

/// Restriction K_I = { s in K : s subset of I }, relabeled to 1..|I|
/// preserving order. Second component maps new label i (1-based, position
/// i-1) back to the old label.
std::pair<SimplicialComplex, std::vector<int>> full_subcomplex(const SimplicialComplex& k,
                                                               const std::vector<int>& vertex_subset);

/// Decomposition of K as a join of boundary tetrahedra, when it is one.
struct TetraJoinCheck {
    /// Blocks of four vertices, sorted by least element; present iff K is
    /// the join of the boundary tetrahedra on these blocks.
    std::optional<std::vector<std::array<int, 4>>> blocks;
    /// Violated condition when absent, e.g. "nonface cardinality 5".
    std::string failure;

    explicit operator bool() const { return blocks.has_value(); }
};

/// K is of this shape iff all minimal nonfaces have cardinality 4, are
/// pairwise disjoint, cover every vertex, and K equals the join of the
/// boundary tetrahedra on the blocks.
TetraJoinCheck is_join_of_tetrahedron_boundaries(const SimplicialComplex& k);

}  // namespace qtoric
