#include "qtoric/decision.hpp"

#include <algorithm>

namespace qtoric {

std::string_view to_string(Verdict v)
{
    return v == Verdict::commutative ? "commutative" : "not_commutative";
}

std::string_view to_string(Stage s)
{
    switch (s) {
        case Stage::nonface_cardinality: return "nonface_cardinality";
        case Stage::nonface_intersection: return "nonface_intersection";
        case Stage::not_tetra_join: return "not_tetra_join";
        case Stage::parity: return "parity";
        case Stage::sq2: return "sq2";
    }
    return "";
}

Eigen::MatrixXi parity_residues(const StandardForm& sf)
{
    const int n = sf.factors();
    Eigen::MatrixXi r = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            Int s = sf.block(i, j)(0) + sf.block(i, j)(1) + sf.block(i, j)(2);
            r(i, j) = static_cast<int>(s % 2 != 0);
        }
    return r;
}

Sq2Report sq2_criterion(const StandardForm& sf)
{
    const int n = sf.factors();
    const RingPresentation pres = dj_relations(sf);
    const Eigen::MatrixXi residues = parity_residues(sf);

    Sq2Report report;
    for (int i = 0; i < n; ++i) {
        const Z2Polynomial qi = reduce_mod2(pres.relations[static_cast<size_t>(i)]);
        Z2Polynomial cartan = sq2(qi);

        // Closed form sum_{k != i} r_ik t_k q_i from the parity residues.
        Z2Polynomial closed(n);
        for (int k = 0; k < n; ++k) {
            if (k == i || residues(i, k) == 0)
                continue;
            closed += Z2Polynomial::variable(n, k) * qi;
        }
        if (cartan != closed)
            throw CriterionDisagreement(
                "sq2_criterion: Cartan path and closed form disagree on q_" + std::to_string(i + 1));
        if (!cartan.is_zero())
            report.all_zero = false;
        report.classes.push_back(std::move(cartan));
    }
    return report;
}

DecisionReport decide(const SimplicialComplex& k, const CharacteristicMatrix& a)
{
    if (a.context().facets() != k.facets() || a.context().vertex_count() != k.vertex_count())
        throw std::invalid_argument("decide: matrix context differs from the given complex");
    ValidityCertificate cert = validate(a);
    if (!cert.valid)
        throw InvalidMatrixError("decide: matrix is not a characteristic matrix over the complex",
                                 std::move(cert));

    DecisionReport report;
    const NonfaceReport nf = minimal_nonfaces(k);

    for (const auto& face : nf.minimal_nonfaces)
        if (face.size() == 2 || face.size() == 3 || face.size() >= 5) {
            report.verdict = Verdict::not_commutative;
            report.stage = Stage::nonface_cardinality;
            report.certificate = NonfaceCardinalityCertificate{face};
            return report;
        }

    if (!nf.pairwise_disjoint) {
        for (size_t i = 0; i < nf.minimal_nonfaces.size(); ++i)
            for (size_t j = i + 1; j < nf.minimal_nonfaces.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(nf.minimal_nonfaces[i].begin(), nf.minimal_nonfaces[i].end(),
                                      nf.minimal_nonfaces[j].begin(), nf.minimal_nonfaces[j].end(),
                                      std::back_inserter(inter));
                if (!inter.empty()) {
                    report.verdict = Verdict::not_commutative;
                    report.stage = Stage::nonface_intersection;
                    report.certificate =
                        NonfaceIntersectionCertificate{nf.minimal_nonfaces[i], nf.minimal_nonfaces[j]};
                    return report;
                }
            }
    }

    const TetraJoinCheck join = is_join_of_tetrahedron_boundaries(k);
    if (!join) {
        report.verdict = Verdict::not_commutative;
        report.stage = Stage::not_tetra_join;
        report.certificate = NotTetraJoinCertificate{join.failure};
        return report;
    }

    // Bring the vertex blocks into the standard order F_11, F_12, ... before
    // reduction; the relabeling is recorded in the certificate.
    const StandardizedContext standardized = standardize_tetra_join_labels(a);
    const ReductionResult reduced = reduce_to_standard_form(standardized.matrix);
    const Eigen::MatrixXi residues = parity_residues(reduced.form);
    const Sq2Report sq2_report = sq2_criterion(reduced.form);

    const bool parity_zero = residues.isZero();
    if (parity_zero != sq2_report.all_zero)
        throw CriterionDisagreement("decide: parity and Sq^2 criteria disagree");

    report.verdict = parity_zero ? Verdict::commutative : Verdict::not_commutative;
    report.stage = Stage::parity;
    report.certificate =
        CriterionCertificate{reduced.form, residues, sq2_report.classes, standardized.relabeling};
    report.cross_check = DecisionReport::CrossCheck{parity_zero, sq2_report.all_zero};
    return report;
}

}  // namespace qtoric
