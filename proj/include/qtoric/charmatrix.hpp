#pragma once

#include "qtoric/exact.hpp"
#include "qtoric/simplicial.hpp"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace qtoric {

/// Integer n x m matrix whose column j is attached to vertex j of the
/// context complex. Construction checks dimensions only; the determinant
/// condition is checked by validate().
class CharacteristicMatrix {
public:
    CharacteristicMatrix(IntMatrix entries, SimplicialComplex context);

    const IntMatrix& entries() const { return entries_; }
    const SimplicialComplex& context() const { return context_; }
    int rank_dim() const { return static_cast<int>(entries_.rows()); }   // n
    int facet_count() const { return static_cast<int>(entries_.cols()); }  // m

private:
    IntMatrix entries_;
    SimplicialComplex context_;
};

/// Determinants of all vertex column sets, in lexicographic facet order.
struct ValidityCertificate {
    bool valid = false;
    std::vector<std::pair<std::vector<int>, Int>> determinants;
    std::optional<std::vector<int>> first_failing_simplex;
};

/// Thrown where a valid matrix is a precondition (reduction, decision).
class InvalidMatrixError : public std::runtime_error {
public:
    InvalidMatrixError(std::string message, ValidityCertificate certificate);
    const ValidityCertificate& certificate() const { return certificate_; }

private:
    ValidityCertificate certificate_;
};

/// Success iff det of the columns of every maximal simplex is +-1.
ValidityCertificate validate(const CharacteristicMatrix& a);

// Equivalence moves: A = alpha . (Q B D).
struct LeftGl {
    IntMatrix q;  // n x n, det +-1
};
struct ColumnSigns {
    std::vector<int> signs;  // one +-1 per column
};
struct FacetPermutation {
    std::vector<int> image;  // vertex v (1-based) maps to image[v-1]
};
using EquivalenceMove = std::variant<LeftGl, ColumnSigns, FacetPermutation>;

/// Applies one move. Q must be unimodular; a facet permutation must be an
/// automorphism of the context (map facets onto facets). Validity of the
/// input is preserved: each vertex determinant is scaled by +-1 or the
/// certificate is permuted.
CharacteristicMatrix apply_move(const CharacteristicMatrix& a, const EquivalenceMove& move);

/// The block shape of a characteristic matrix over (Delta^3)^n after
/// reduction: identity blocks implicit, a(i,i) = t(1,1,1).
class StandardForm {
public:
    StandardForm(int factors, std::vector<Vec3I> blocks);  // blocks row-major n x n

    int factors() const { return factors_; }
    const Vec3I& block(int i, int j) const;  // 0-based
    std::vector<Vec3I>& mutable_blocks() { return blocks_; }
    const std::vector<Vec3I>& blocks() const { return blocks_; }

private:
    int factors_;
    std::vector<Vec3I> blocks_;
};

/// Reassembled 3n x 4n matrix over the standard (Delta^3)^n dual, columns
/// ordered F_11, F_12, F_13, F_14, F_21, ...
CharacteristicMatrix assemble(const StandardForm& sf);

struct ReductionResult {
    StandardForm form;
    std::vector<EquivalenceMove> moves;  // identity moves omitted
};

/// Relabels a matrix over a join of boundary tetrahedra so the vertex
/// blocks become the standard runs {1..4}, {5..8}, ... with columns moved
/// along. relabeling maps old vertex v to relabeling[v-1]; empty when the
/// labeling was standard already. Throws if the context is not such a join.
struct StandardizedContext {
    CharacteristicMatrix matrix;
    std::vector<int> relabeling;
};
StandardizedContext standardize_tetra_join_labels(const CharacteristicMatrix& a);

/// Reduction to standard form over the standard-labeled (Delta^3)^n dual
/// (vertex blocks {1..4}, {5..8}, ...): left-multiply by the inverse of the
/// 3n columns {F_i1, F_i2, F_i3}, then flip each row carrying a negative
/// entry of c_ii together with its identity column. Replaying the returned
/// moves on the input reproduces assemble(form) exactly.
ReductionResult reduce_to_standard_form(const CharacteristicMatrix& a);

}  // namespace qtoric
