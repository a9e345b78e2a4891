#include "qtoric/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace qtoric {

namespace {

const Json& require(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw JsonSchemaError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key)
{
    const Json& v = require(j, key);
    if (!v.is_number_integer())
        throw JsonSchemaError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string block_key(int i, int j)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Json int_to_json(const Int& v)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi)
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Int int_from_json(const Json& j, const char* what)
{
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw JsonSchemaError(std::string(what) + ": not a decimal integer string");
        }
    }
    throw JsonSchemaError(std::string(what) + ": expected integer or decimal string");
}

Json to_json(const SimplicialComplex& k)
{
    Json j;
    j["vertices"] = k.vertex_count();
    j["facets"] = k.facets();
    return j;
}

SimplicialComplex complex_from_json(const Json& j)
{
    const int m = int_field(j, "vertices");
    const Json& fj = require(j, "facets");
    if (!fj.is_array())
        throw JsonSchemaError("\"facets\" must be an array of vertex arrays");
    std::vector<std::vector<int>> facets;
    for (const auto& f : fj) {
        if (!f.is_array())
            throw JsonSchemaError("each facet must be an array of vertex labels");
        facets.push_back(f.get<std::vector<int>>());
    }
    try {
        return SimplicialComplex(m, std::move(facets));
    } catch (const std::invalid_argument& e) {
        throw JsonSchemaError(e.what());
    }
}

SimplicialComplex polytope_from_json(const Json& j)
{
    if (j.is_object() && j.contains("type") && j.at("type") == "simplex_product") {
        const Json& fj = require(j, "factors");
        if (!fj.is_array())
            throw JsonSchemaError("\"factors\" must be an array of dimensions");
        try {
            return build_dual_of_simplex_product(fj.get<std::vector<int>>());
        } catch (const std::invalid_argument& e) {
            throw JsonSchemaError(e.what());
        }
    }
    return complex_from_json(j);
}

Json to_json(const CharacteristicMatrix& a)
{
    Json j;
    j["n"] = a.rank_dim();
    j["m"] = a.facet_count();
    Json rows = Json::array();
    for (int i = 0; i < a.rank_dim(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < a.facet_count(); ++c)
            row.push_back(int_to_json(a.entries()(i, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["polytope"] = to_json(a.context());
    return j;
}

Json matrix_json_with_factors(const CharacteristicMatrix& a, const std::vector<int>& factors)
{
    Json j = to_json(a);
    j["polytope"] = Json{{"type", "simplex_product"}, {"factors", factors}};
    return j;
}

CharacteristicMatrix matrix_from_json(const Json& j)
{
    const int n = int_field(j, "n");
    const int m = int_field(j, "m");
    const Json& ej = require(j, "entries");
    if (!ej.is_array() || static_cast<int>(ej.size()) != n)
        throw JsonSchemaError("\"entries\" must have n rows");
    IntMatrix entries(n, m);
    for (int i = 0; i < n; ++i) {
        const Json& row = ej.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            throw JsonSchemaError("each entries row must have m values");
        for (int c = 0; c < m; ++c)
            entries(i, c) = int_from_json(row.at(static_cast<size_t>(c)), "matrix entry");
    }
    SimplicialComplex context = polytope_from_json(require(j, "polytope"));
    try {
        return CharacteristicMatrix(std::move(entries), std::move(context));
    } catch (const std::invalid_argument& e) {
        throw JsonSchemaError(e.what());
    }
}

Json to_json(const StandardForm& sf)
{
    Json blocks = Json::object();
    for (int i = 0; i < sf.factors(); ++i)
        for (int j = 0; j < sf.factors(); ++j) {
            if (i == j)
                continue;
            const Vec3I& b = sf.block(i, j);
            if (b(0) == 0 && b(1) == 0 && b(2) == 0)
                continue;
            blocks[block_key(i + 1, j + 1)] =
                Json::array({int_to_json(b(0)), int_to_json(b(1)), int_to_json(b(2))});
        }
    Json j;
    j["n"] = sf.factors();
    j["blocks"] = std::move(blocks);
    return j;
}

StandardForm standard_form_from_json(const Json& j)
{
    const int n = int_field(j, "n");
    if (n < 1)
        throw JsonSchemaError("standard form needs n >= 1");
    std::vector<Vec3I> blocks(static_cast<size_t>(n) * static_cast<size_t>(n),
                              Vec3I(Int(0), Int(0), Int(0)));
    for (int i = 0; i < n; ++i)
        blocks[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(i)] =
            Vec3I(Int(1), Int(1), Int(1));
    if (j.contains("blocks")) {
        const Json& bj = j.at("blocks");
        if (!bj.is_object())
            throw JsonSchemaError("\"blocks\" must be an object keyed by \"(i,j)\"");
        for (const auto& [key, val] : bj.items()) {
            int bi = 0, bj2 = 0;
            if (std::sscanf(key.c_str(), "(%d,%d)", &bi, &bj2) != 2 || bi < 1 || bi > n ||
                bj2 < 1 || bj2 > n)
                throw JsonSchemaError("bad block key \"" + key + "\"");
            if (!val.is_array() || val.size() != 3)
                throw JsonSchemaError("block \"" + key + "\" must be a 3-vector");
            Vec3I v;
            for (int r = 0; r < 3; ++r)
                v(r) = int_from_json(val.at(static_cast<size_t>(r)), "block entry");
            if (bi == bj2 && (v(0) != 1 || v(1) != 1 || v(2) != 1))
                throw JsonSchemaError("diagonal blocks must be [1,1,1]");
            blocks[static_cast<size_t>(bi - 1) * static_cast<size_t>(n) +
                   static_cast<size_t>(bj2 - 1)] = v;
        }
    }
    return StandardForm(n, std::move(blocks));
}

Json to_json(const EquivalenceMove& move)
{
    Json j;
    if (const auto* gl = std::get_if<LeftGl>(&move)) {
        j["kind"] = "left_gl";
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < gl->q.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index c = 0; c < gl->q.cols(); ++c)
                row.push_back(int_to_json(gl->q(i, c)));
            rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
    } else if (const auto* d = std::get_if<ColumnSigns>(&move)) {
        j["kind"] = "column_signs";
        j["signs"] = d->signs;
    } else {
        j["kind"] = "facet_permutation";
        j["image"] = std::get<FacetPermutation>(move).image;
    }
    return j;
}

namespace {

template <class Coeff>
Json polynomial_to_json(const GradedPolynomial<Coeff>& p, bool mod2)
{
    Json terms = Json::array();
    // Leading term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json t;
        t["exp"] = it->first;
        t["coef"] = coeff_str(it->second);
        terms.push_back(std::move(t));
    }
    Json j;
    j["mod2"] = mod2;
    j["n"] = p.variable_count();
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace

Json to_json(const ZPolynomial& p)
{
    return polynomial_to_json(p, false);
}

Json to_json(const Z2Polynomial& p)
{
    return polynomial_to_json(p, true);
}

ZPolynomial polynomial_from_json(const Json& j)
{
    const int n = int_field(j, "n");
    if (n < 1)
        throw JsonSchemaError("polynomial needs n >= 1");
    if (j.contains("mod2") && j.at("mod2") == Json(true))
        throw JsonSchemaError("expected an integral polynomial, got \"mod2\": true");
    ZPolynomial p(n);
    const Json& terms = require(j, "terms");
    if (!terms.is_array())
        throw JsonSchemaError("\"terms\" must be an array");
    for (const auto& t : terms) {
        const Json& ej = require(t, "exp");
        if (!ej.is_array() || static_cast<int>(ej.size()) != n)
            throw JsonSchemaError("term \"exp\" must have n entries");
        Monomial e = ej.get<Monomial>();
        for (int x : e)
            if (x < 0)
                throw JsonSchemaError("negative exponent");
        p.add_term(std::move(e), int_from_json(require(t, "coef"), "term coefficient"));
    }
    return p;
}

Json to_json(const RingPresentation& pres)
{
    Json rels = Json::array();
    for (const auto& r : pres.relations)
        rels.push_back(to_json(r));
    Json j;
    j["n"] = pres.variable_count;
    j["relations"] = std::move(rels);
    return j;
}

RingPresentation presentation_from_json(const Json& j)
{
    RingPresentation pres;
    pres.variable_count = int_field(j, "n");
    const Json& rels = require(j, "relations");
    if (!rels.is_array())
        throw JsonSchemaError("\"relations\" must be an array of polynomials");
    for (const auto& r : rels) {
        ZPolynomial p = polynomial_from_json(r);
        if (p.variable_count() != pres.variable_count)
            throw JsonSchemaError("relation variable count differs from presentation");
        pres.relations.push_back(std::move(p));
    }
    return pres;
}

Json to_json(const ValidityCertificate& cert)
{
    Json dets = Json::array();
    for (const auto& [simplex, det] : cert.determinants) {
        Json d;
        d["simplex"] = simplex;
        d["det"] = int_to_json(det);
        dets.push_back(std::move(d));
    }
    Json j;
    j["valid"] = cert.valid;
    j["certificate"] = std::move(dets);
    if (cert.first_failing_simplex)
        j["first_failing_simplex"] = *cert.first_failing_simplex;
    return j;
}

Json to_json(const DecisionReport& report)
{
    Json j;
    j["verdict"] = std::string(to_string(report.verdict));
    j["stage"] = std::string(to_string(report.stage));

    Json cert;
    if (const auto* c = std::get_if<NonfaceCardinalityCertificate>(&report.certificate)) {
        cert["minimal_nonface"] = c->nonface;
        cert["cardinality"] = c->nonface.size();
    } else if (const auto* ci = std::get_if<NonfaceIntersectionCertificate>(&report.certificate)) {
        cert["first"] = ci->first;
        cert["second"] = ci->second;
    } else if (const auto* cj = std::get_if<NotTetraJoinCertificate>(&report.certificate)) {
        cert["reason"] = cj->reason;
    } else {
        const auto& cc = std::get<CriterionCertificate>(report.certificate);
        cert["standard_form"] = to_json(cc.form);
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < cc.residues.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index c2 = 0; c2 < cc.residues.cols(); ++c2)
                row.push_back(cc.residues(i, c2));
            rows.push_back(std::move(row));
        }
        cert["parity_residues"] = std::move(rows);
        Json classes = Json::array();
        for (const auto& p : cc.sq2_classes)
            classes.push_back(to_json(p));
        cert["sq2_classes"] = std::move(classes);
        if (!cc.relabeling.empty())
            cert["relabeling"] = cc.relabeling;
    }
    j["certificate"] = std::move(cert);
    if (report.cross_check) {
        j["cross_check"] =
            Json{{"parity", report.cross_check->parity}, {"sq2", report.cross_check->sq2}};
    }
    return j;
}

Json to_json(const FourthPowerLocus& locus)
{
    Json sols = Json::array();
    for (const auto& s : locus.solutions) {
        Json v = Json::array();
        for (const auto& c : s)
            v.push_back(int_to_json(c));
        sols.push_back(std::move(v));
    }
    Json j;
    j["box_bound"] = locus.bound;
    j["solutions"] = std::move(sols);
    j["only_multiples_of_last_variable"] = locus.only_multiples_of_last_variable;
    j["method"] = locus.proof_shaped_complete ? "proof_shaped" : "box_search";
    j["complete"] = locus.proof_shaped_complete;
    return j;
}

namespace {

Json witness_to_json(const IsoDecision::Witness& w)
{
    return Json{{"eps1", w.eps1}, {"eps2", w.eps2}, {"c", int_to_json(w.c)}};
}

}  // namespace

Json to_json(const IsoDecision& decision)
{
    Json j;
    j["isomorphic"] = decision.isomorphic;
    j["search_bound"] = decision.search_bound;
    j["exact_equations_force_c_zero"] = decision.exact_equations_force_c_zero;
    if (decision.witness)
        j["witness"] = witness_to_json(*decision.witness);
    Json box = Json::array();
    for (const auto& w : decision.box_witnesses)
        box.push_back(witness_to_json(w));
    j["box_witnesses"] = std::move(box);
    j["method"] = "exact_equations+box_search";
    if (!decision.obstruction.empty())
        j["obstruction"] = decision.obstruction;
    return j;
}

Json to_json(const IsoVerdict& verdict)
{
    Json j;
    j["isomorphic"] = verdict.isomorphic;
    j["n"] = verdict.n;
    j["reduction"] = "subalgebra on the last two variables";
    j["n2_decision"] = to_json(verdict.detail);
    return j;
}

std::string canonical_dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace qtoric
