#pragma once

#include "qtoric/charmatrix.hpp"
#include "qtoric/polyring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtoric {

/// Parameters of the family M(k,n): defined only for k >= 1 and n >= 2.
struct FamilyParams {
    int k;
    int n;
};

/// B(k,n): diagonal blocks B = (E_3 | t(1,1,1)), superdiagonal blocks k*N
/// with the lone entry at row 1, column 4. Valid over (Delta^3)^n.
CharacteristicMatrix generate_matrix(const FamilyParams& params);

/// H(k,n) = Z[t_1..t_n] / (t_i^4 + k t_i^3 t_{i+1} for i < n, t_n^4),
/// with its rewrite system (leading terms t_i^4).
struct HknRing {
    FamilyParams params;
    RingPresentation presentation;
    RewriteSystem rewrite;
};

HknRing hkn_ring(const FamilyParams& params);

/// Degree-2 solutions of x^4 = 0 inside the searched coefficient box.
struct FourthPowerLocus {
    int bound = 0;
    std::vector<std::vector<Int>> solutions;  // coefficient vectors, |a_i| <= bound
    /// Every box solution is a multiple of t_n.
    bool only_multiples_of_last_variable = false;
    /// The pairwise-product argument ran and confirms the locus is exactly
    /// { a t_n } for all integers a, not just inside the box: in the reduced
    /// x^4 the coefficient of t_i^2 t_j^2 is 6 a_i^2 a_j^2, forcing
    /// a_i a_j = 0 for i != j, and t_i^4 = 0 only for i = n.
    bool proof_shaped_complete = false;
};

/// Box search plus the proof-shaped completion over H(k,n).
FourthPowerLocus fourth_power_zero_locus(const HknRing& ring, int bound);

/// Box-only kernel search over an arbitrary rewrite system (the contrast
/// oracle path): all x = sum a_i t_i with |a_i| <= bound and x^4 = 0.
std::vector<std::vector<Int>> degree2_fourth_power_kernel(const RewriteSystem& rs, int nvars,
                                                          int bound);

/// Rank over the rationals of a set of coefficient vectors.
int independent_solution_rank(const std::vector<std::vector<Int>>& solutions);

struct IndecomposabilityWitness {
    int bound = 0;
    /// Maximal number of linearly independent degree-2 solutions of x^4 = 0
    /// found in the box; 1 witnesses that H(k,n) has no tensor splitting
    /// with two degree-2-nontrivial factors.
    int rank = 0;
};

IndecomposabilityWitness indecomposability_witness(const HknRing& ring, int bound);

/// Graded isomorphism decision H(k,2) vs H(l,2). Candidate maps follow the
/// constrained shape f(t_1) = e1 (t_1 + c t_2), f(t_2) = e2 t_2 that every
/// isomorphism must take; membership of f(relations) in the target ideal is
/// checked by normal forms. Independently, the three coefficient equations
///   6c^2 + 3 k e c = 0,  4c^3 + 3 k e c^2 = 0,  4c - l + k e = 0
/// are solved exactly over the integers (e = e1 e2).
struct IsoDecision {
    bool isomorphic = false;

    struct Witness {
        int eps1 = 1;
        int eps2 = 1;
        Int c = 0;
    };
    std::optional<Witness> witness;        // present iff isomorphic
    std::vector<Witness> box_witnesses;    // all passing maps with |c| <= bound
    int search_bound = 0;
    bool exact_equations_force_c_zero = false;
    std::string obstruction;               // nonempty iff not isomorphic
};

IsoDecision iso_decide_n2(int k, int l, int search_bound);

/// H(k,n) vs H(l,n) for n >= 2. For n > 2 every isomorphism restricts to an
/// isomorphism of the subalgebras on t_{n-1}, t_n, which are canonically
/// H(k,2) and H(l,2); the decision reduces to iso_decide_n2.
struct IsoVerdict {
    bool isomorphic = false;
    int n = 0;
    IsoDecision detail;  // the n = 2 decision that settles it
};

IsoVerdict iso_invariants(int k, int l, int n);

}  // namespace qtoric
