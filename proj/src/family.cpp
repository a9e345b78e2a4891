#include "qtoric/family.hpp"

#include "qtoric/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtoric {

namespace {

void check_params(const FamilyParams& p)
{
    if (p.k < 1)
        throw std::invalid_argument("FamilyParams: k must be a positive integer");
    if (p.n < 2)
        throw std::invalid_argument("FamilyParams: M(k,n) is defined only for n >= 2");
}

StandardForm bkn_standard_form(const FamilyParams& p)
{
    std::vector<Vec3I> blocks(static_cast<size_t>(p.n) * static_cast<size_t>(p.n),
                              Vec3I(Int(0), Int(0), Int(0)));
    for (int i = 0; i < p.n; ++i) {
        blocks[static_cast<size_t>(i) * static_cast<size_t>(p.n) + static_cast<size_t>(i)] =
            Vec3I(Int(1), Int(1), Int(1));
        if (i + 1 < p.n)
            blocks[static_cast<size_t>(i) * static_cast<size_t>(p.n) + static_cast<size_t>(i) + 1] =
                Vec3I(Int(p.k), Int(0), Int(0));
    }
    return StandardForm(p.n, std::move(blocks));
}

}  // namespace

CharacteristicMatrix generate_matrix(const FamilyParams& params)
{
    check_params(params);
    return assemble(bkn_standard_form(params));
}

HknRing hkn_ring(const FamilyParams& params)
{
    check_params(params);
    const int n = params.n;
    RingPresentation pres;
    pres.variable_count = n;
    pres.source = "hkn";
    for (int i = 0; i < n; ++i) {
        ZPolynomial rel(n);
        Monomial e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 4;
        rel.add_term(e, Int(1));
        if (i + 1 < n) {
            e[static_cast<size_t>(i)] = 3;
            e[static_cast<size_t>(i) + 1] = 1;
            rel.add_term(e, Int(params.k));
        }
        pres.relations.push_back(std::move(rel));
    }
    auto rs = RewriteSystem::from_presentation(pres);
    if (!rs)
        throw std::logic_error("hkn_ring: relations are rewrite-admissible by construction");
    return HknRing{params, std::move(pres), std::move(*rs)};
}

std::vector<std::vector<Int>> degree2_fourth_power_kernel(const RewriteSystem& rs, int nvars,
                                                          int bound)
{
    if (bound < 1)
        throw std::invalid_argument("degree2_fourth_power_kernel: bound must be >= 1");
    std::vector<std::vector<Int>> solutions;
    std::vector<int> a(static_cast<size_t>(nvars), -bound);
    while (true) {
        ZPolynomial x(nvars);
        for (int i = 0; i < nvars; ++i) {
            Monomial e(static_cast<size_t>(nvars), 0);
            e[static_cast<size_t>(i)] = 1;
            x.add_term(std::move(e), Int(a[static_cast<size_t>(i)]));
        }
        if (rs.normal_form(x.pow(4)).is_zero())
            solutions.emplace_back(a.begin(), a.end());
        int pos = nvars - 1;
        while (pos >= 0 && a[static_cast<size_t>(pos)] == bound) {
            a[static_cast<size_t>(pos)] = -bound;
            --pos;
        }
        if (pos < 0)
            break;
        ++a[static_cast<size_t>(pos)];
    }
    return solutions;
}

FourthPowerLocus fourth_power_zero_locus(const HknRing& ring, int bound)
{
    FourthPowerLocus locus;
    locus.bound = bound;
    const int n = ring.params.n;
    locus.solutions = degree2_fourth_power_kernel(ring.rewrite, n, bound);
    locus.only_multiples_of_last_variable = true;
    for (const auto& sol : locus.solutions)
        for (int i = 0; i + 1 < n; ++i)
            if (sol[static_cast<size_t>(i)] != 0)
                locus.only_multiples_of_last_variable = false;

    // Proof-shaped completion: expand x = sum a_i t_i with formal
    // coefficients, working in Z[a_1..a_n, t_1..t_n] with the t-rules only.
    const int nn = 2 * n;
    RingPresentation lifted;
    lifted.variable_count = nn;
    for (const auto& rel : ring.presentation.relations) {
        ZPolynomial up(nn);
        for (const auto& [e, c] : rel.terms()) {
            Monomial ee(static_cast<size_t>(nn), 0);
            for (int i = 0; i < n; ++i)
                ee[static_cast<size_t>(n + i)] = e[static_cast<size_t>(i)];
            up.add_term(std::move(ee), c);
        }
        lifted.relations.push_back(std::move(up));
    }
    const auto lifted_rs = RewriteSystem::from_presentation(lifted);
    if (!lifted_rs)
        throw std::logic_error("fourth_power_zero_locus: lifted rules must be admissible");

    ZPolynomial x(nn);
    for (int i = 0; i < n; ++i) {
        Monomial e(static_cast<size_t>(nn), 0);
        e[static_cast<size_t>(i)] = 1;
        e[static_cast<size_t>(n + i)] = 1;
        x.add_term(std::move(e), Int(1));
    }
    const ZPolynomial nf = lifted_rs->normal_form(x.pow(4));

    bool pairwise_ok = true;
    for (int i = 0; i < n && pairwise_ok; ++i)
        for (int j = i + 1; j < n && pairwise_ok; ++j) {
            // Coefficient of t_i^2 t_j^2 must be exactly 6 a_i^2 a_j^2.
            ZPolynomial coeff(nn);
            for (const auto& [e, c] : nf.terms()) {
                bool match = true;
                for (int v = 0; v < n; ++v) {
                    const int want = (v == i || v == j) ? 2 : 0;
                    if (e[static_cast<size_t>(n + v)] != want) {
                        match = false;
                        break;
                    }
                }
                if (!match)
                    continue;
                Monomial avars = e;
                for (int v = 0; v < n; ++v)
                    avars[static_cast<size_t>(n + v)] = 0;
                coeff.add_term(std::move(avars), c);
            }
            ZPolynomial expected(nn);
            Monomial e(static_cast<size_t>(nn), 0);
            e[static_cast<size_t>(i)] = 2;
            e[static_cast<size_t>(j)] = 2;
            expected.add_term(std::move(e), Int(6));
            if (coeff != expected)
                pairwise_ok = false;
        }

    bool single_ok = true;
    for (int i = 0; i < n; ++i) {
        ZPolynomial ti4(n);
        Monomial e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 4;
        ti4.add_term(std::move(e), Int(1));
        const bool vanishes = ring.rewrite.normal_form(ti4).is_zero();
        if (vanishes != (i == n - 1))
            single_ok = false;
    }
    locus.proof_shaped_complete = pairwise_ok && single_ok;
    return locus;
}

int independent_solution_rank(const std::vector<std::vector<Int>>& solutions)
{
    if (solutions.empty())
        return 0;
    IntMatrix m(static_cast<Eigen::Index>(solutions.size()),
                static_cast<Eigen::Index>(solutions.front().size()));
    for (size_t i = 0; i < solutions.size(); ++i)
        for (size_t j = 0; j < solutions[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = solutions[i][j];
    return integer_rank(m);
}

IndecomposabilityWitness indecomposability_witness(const HknRing& ring, int bound)
{
    const FourthPowerLocus locus = fourth_power_zero_locus(ring, bound);
    return IndecomposabilityWitness{bound, independent_solution_rank(locus.solutions)};
}

IsoDecision iso_decide_n2(int k, int l, int search_bound)
{
    if (k < 1 || l < 1)
        throw std::invalid_argument("iso_decide_n2: parameters must be positive");
    if (search_bound < 1)
        throw std::invalid_argument("iso_decide_n2: search bound must be >= 1");

    IsoDecision decision;
    decision.search_bound = search_bound;

    const HknRing source = hkn_ring({k, 2});
    const HknRing target = hkn_ring({l, 2});

    // Enumeration path over the constrained map shape.
    for (int eps1 : {1, -1})
        for (int eps2 : {1, -1})
            for (int c = -search_bound; c <= search_bound; ++c) {
                std::vector<ZPolynomial> images;
                ZPolynomial f1(2);
                f1.add_term({1, 0}, Int(eps1));
                f1.add_term({0, 1}, Int(eps1) * Int(c));
                images.push_back(std::move(f1));
                ZPolynomial f2(2);
                f2.add_term({0, 1}, Int(eps2));
                images.push_back(std::move(f2));

                bool maps_into_ideal = true;
                for (const auto& rel : source.presentation.relations)
                    if (!target.rewrite.normal_form(rel.substitute(images)).is_zero()) {
                        maps_into_ideal = false;
                        break;
                    }
                if (maps_into_ideal)
                    decision.box_witnesses.push_back({eps1, eps2, Int(c)});
            }

    // Exact path: integer roots of the coefficient equations, e = eps1 eps2.
    //   3c(2c + ke) = 0  and  c^2 (4c + 3ke) = 0  intersect in c = 0 only,
    //   then 4c - l + ke = 0 forces l = ke.
    bool exact_iso = false;
    IsoDecision::Witness exact_witness;
    decision.exact_equations_force_c_zero = true;
    for (int e : {1, -1}) {
        std::vector<Int> roots1{Int(0)};
        if (k % 2 == 0)
            roots1.push_back(Int(-k * e) / 2);
        std::vector<Int> roots2{Int(0)};
        if ((3 * k) % 4 == 0)
            roots2.push_back(Int(-3 * k * e) / 4);
        for (const Int& c : roots1) {
            if (std::find(roots2.begin(), roots2.end(), c) == roots2.end())
                continue;
            if (c != 0)
                decision.exact_equations_force_c_zero = false;
            if (4 * c - l + k * e == 0) {
                exact_iso = true;
                exact_witness = {1, e, c};
            }
        }
    }

    const bool box_iso = !decision.box_witnesses.empty();
    if (box_iso != exact_iso)
        throw std::logic_error("iso_decide_n2: enumeration and exact-equation paths disagree");

    decision.isomorphic = exact_iso;
    if (decision.isomorphic)
        decision.witness = exact_witness;
    else
        decision.obstruction =
            "the equations force c = 0 and l = k*e with e = +-1; positivity of k and l then "
            "requires k = l";
    return decision;
}

IsoVerdict iso_invariants(int k, int l, int n)
{
    if (n < 2)
        throw std::invalid_argument("iso_invariants: n must be >= 2");
    // For n > 2 every isomorphism preserves the ideal chain (t_n), (t_{n-1},
    // t_n), ... and restricts to the subalgebra on t_{n-1}, t_n, which is
    // canonically H(*, 2); equal n >= 2 cases therefore all reduce to n = 2.
    IsoVerdict verdict;
    verdict.n = n;
    verdict.detail = iso_decide_n2(k, l, 3 * std::max(k, l));
    verdict.isomorphic = verdict.detail.isomorphic;
    return verdict;
}

}  // namespace qtoric
