#pragma once

#include "qtoric/charmatrix.hpp"
#include "qtoric/polynomial.hpp"

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qtoric {

/// Z[t_1..t_n] / (relations), all relations homogeneous.
struct RingPresentation {
    int variable_count = 0;
    std::vector<ZPolynomial> relations;
    std::string source;  // optional provenance note, not part of equality

    friend bool operator==(const RingPresentation& a, const RingPresentation& b)
    {
        return a.variable_count == b.variable_count && a.relations == b.relations;
    }
};

/// Davis-Januszkiewicz relations of a standard form:
/// q_i = t_i * prod_{j=1..3} (sum_k a_ik^j t_k), homogeneous of degree 8.
RingPresentation dj_relations(const StandardForm& sf);

/// Sq^2 on a polynomial in degree-2 variables, by the Cartan formula:
/// Sq^2(t^e) = sum_i e_i t_i t^e mod 2, extended additively. Sq^1 vanishes
/// on this variable class.
Z2Polynomial sq2(const Z2Polynomial& p);

/// Closed form for a product of degree-2 classes:
/// Sq^2(x_1...x_m) = (x_1+...+x_m) * x_1...x_m mod 2.
Z2Polynomial sq2_of_degree_two_product(std::span<const Z2Polynomial> factors);

/// Rank over the rationals of the degree-d part of the quotient, as
/// (monomials of degree d) - rank{ m*q : deg(m*q) = d }. Degree is the
/// topological degree; odd degrees are rejected, negative ones give 0.
int graded_rank(const RingPresentation& pres, int degree);

/// Monomials of topological degree d in n variables, ascending grlex.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Oriented rewrite rules t_i^{d_i} -> tail from a presentation whose
/// relation leading terms are pure powers of pairwise distinct variables
/// with unit coefficient. Terminating (each step decreases grlex) and
/// confluent (leading monomials pairwise coprime): normal forms are unique
/// and vanish exactly on the relation ideal.
class RewriteSystem {
public:
    enum class Strategy { leading, random };

    /// Empty when the presentation is not of rewrite-admissible shape;
    /// callers fall back to the graded_rank path.
    static std::optional<RewriteSystem> from_presentation(const RingPresentation& pres);

    int variable_count() const { return nvars_; }

    ZPolynomial normal_form(const ZPolynomial& p) const;
    ZPolynomial normal_form(const ZPolynomial& p, Strategy strategy, std::mt19937& rng) const;

private:
    RewriteSystem(int nvars) : nvars_(nvars) {}

    struct Rule {
        int variable;
        int power;
        ZPolynomial tail;  // t_var^power rewrites to tail
    };

    int nvars_;
    std::vector<Rule> rules_;
    std::vector<std::optional<int>> caps_;
};

}  // namespace qtoric
