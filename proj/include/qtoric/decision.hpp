#pragma once

#include "qtoric/charmatrix.hpp"
#include "qtoric/polyring.hpp"
#include "qtoric/simplicial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qtoric {

enum class Verdict { commutative, not_commutative };
enum class Stage { nonface_cardinality, nonface_intersection, not_tetra_join, parity, sq2 };

// Frozen identifiers of the report contract.
std::string_view to_string(Verdict v);
std::string_view to_string(Stage s);

/// Parity and Sq^2 are proven equivalent; a mismatch means a bug, never a
/// result. Surfaces as exit status 4 in the CLI.
class CriterionDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Bits r_ij = column sum of a_ij mod 2, diagonal zero. All zero iff the
/// homotopy-commutativity condition holds over (Delta^3)^n.
Eigen::MatrixXi parity_residues(const StandardForm& sf);

struct Sq2Report {
    std::vector<Z2Polynomial> classes;  // Sq^2 q_i mod 2, i = 1..n
    bool all_zero = true;
};

/// Sq^2 q_i mod 2 via the Cartan path on the expanded relations,
/// cross-checked against the closed form sum_{k != i} r_ik t_k q_i.
/// Throws CriterionDisagreement if the two routes differ.
Sq2Report sq2_criterion(const StandardForm& sf);

// Stage-specific certificates.
struct NonfaceCardinalityCertificate {
    std::vector<int> nonface;
};
struct NonfaceIntersectionCertificate {
    std::vector<int> first;
    std::vector<int> second;
};
struct NotTetraJoinCertificate {
    std::string reason;
};
struct CriterionCertificate {
    StandardForm form;
    Eigen::MatrixXi residues;
    std::vector<Z2Polynomial> sq2_classes;
    std::vector<int> relabeling;  // old vertex -> standard label; empty when identity
};

struct DecisionReport {
    Verdict verdict = Verdict::not_commutative;
    Stage stage = Stage::nonface_cardinality;
    std::variant<NonfaceCardinalityCertificate, NonfaceIntersectionCertificate,
                 NotTetraJoinCertificate, CriterionCertificate>
        certificate;
    struct CrossCheck {
        bool parity = false;
        bool sq2 = false;
    };
    std::optional<CrossCheck> cross_check;
};

/// Decision pipeline, in the fixed gate order:
///   1. a minimal nonface of cardinality 2, 3 or >= 5  -> not_commutative
///   2. two intersecting minimal nonfaces              -> not_commutative
///   3. not a join of boundary tetrahedra              -> not_commutative
///   4. reduce to standard form; commutative iff all parity residues
///      vanish, with the Sq^2 criterion computed independently and
///      recorded in cross_check.
/// The caller asserts K is the dual complex of a simple polytope; sphereness
/// is not verified here. Throws InvalidMatrixError if A is not valid over K.
DecisionReport decide(const SimplicialComplex& k, const CharacteristicMatrix& a);

}  // namespace qtoric
