// Batch front end: parse JSON inputs, run the pipelines, emit reports.
//
// Exit status: 0 when a verdict or report was computed (whatever it says),
// 2 on malformed input, 3 on an invalid characteristic matrix, 4 on an
// internal criterion disagreement.

#include "qtoric/decision.hpp"
#include "qtoric/family.hpp"
#include "qtoric/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using qtoric::Json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitInvalidMatrix = 3;
constexpr int kExitDisagreement = 4;

struct Request {
    std::string matrix;
    std::string polytope;
    std::string standard_form;
    std::string presentation;
    bool use_stdin = false;
    std::string output;
    std::string format = "json";
    int k = 0;
    int l = 0;
    int n = 0;
    int bound = 3;
    int degree = -1;
    bool with_ranks = false;
};

// Option values are inline JSON when they start with '{', file paths
// otherwise.
Json load_json(const std::string& spec)
{
    std::string text;
    if (!spec.empty() && spec.front() == '{') {
        text = spec;
    } else {
        std::ifstream in(spec);
        if (!in)
            throw qtoric::JsonSchemaError("cannot open input file: " + spec);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw qtoric::JsonSchemaError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_stdin_json()
{
    std::stringstream buf;
    buf << std::cin.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw qtoric::JsonSchemaError(std::string("malformed JSON on stdin: ") + e.what());
    }
}

Json primary_input(const Request& req, const std::string& flag_value, const char* what)
{
    if (req.use_stdin)
        return read_stdin_json();
    if (flag_value.empty())
        throw qtoric::JsonSchemaError(std::string("no ") + what + " given (flag or --stdin)");
    return load_json(flag_value);
}

qtoric::CharacteristicMatrix load_matrix(const Request& req)
{
    Json j = primary_input(req, req.matrix, "matrix");
    if (!j.contains("polytope")) {
        if (req.polytope.empty())
            throw qtoric::JsonSchemaError("matrix JSON has no \"polytope\" and no --polytope given");
        j["polytope"] = load_json(req.polytope);
    }
    qtoric::CharacteristicMatrix a = qtoric::matrix_from_json(j);
    if (!req.polytope.empty()) {
        const qtoric::SimplicialComplex given = qtoric::polytope_from_json(load_json(req.polytope));
        if (!(given == a.context()))
            throw qtoric::JsonSchemaError("--polytope does not match the matrix context");
    }
    return a;
}

void emit(const Request& req, const Json& report, const std::string& text_summary)
{
    std::string payload =
        req.format == "text" ? text_summary + "\n" : qtoric::canonical_dump(report);
    if (req.output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(req.output, std::ios::binary);
        if (!out)
            throw qtoric::JsonSchemaError("cannot open output file: " + req.output);
        out << payload;
    }
}

int cmd_validate(const Request& req)
{
    const auto a = load_matrix(req);
    const qtoric::ValidityCertificate cert = qtoric::validate(a);
    std::string summary = cert.valid ? "valid" : "invalid";
    if (!cert.valid && cert.first_failing_simplex) {
        summary += " at simplex {";
        for (size_t i = 0; i < cert.first_failing_simplex->size(); ++i)
            summary += (i ? "," : "") + std::to_string((*cert.first_failing_simplex)[i]);
        summary += "}";
    }
    emit(req, qtoric::to_json(cert), summary);
    return cert.valid ? kExitOk : kExitInvalidMatrix;
}

int cmd_normalize(const Request& req)
{
    const auto a = load_matrix(req);
    const qtoric::ValidityCertificate cert = qtoric::validate(a);
    if (!cert.valid)
        throw qtoric::InvalidMatrixError("matrix is not valid over its context", cert);
    const qtoric::StandardizedContext standardized = qtoric::standardize_tetra_join_labels(a);
    const qtoric::ReductionResult result = qtoric::reduce_to_standard_form(standardized.matrix);
    Json j;
    j["standard_form"] = qtoric::to_json(result.form);
    Json moves = Json::array();
    for (const auto& mv : result.moves)
        moves.push_back(qtoric::to_json(mv));
    j["moves"] = std::move(moves);
    if (!standardized.relabeling.empty())
        j["relabeling"] = standardized.relabeling;
    emit(req, j, "standard form with " + std::to_string(result.moves.size()) + " moves");
    return kExitOk;
}

int cmd_decide(const Request& req)
{
    const auto a = load_matrix(req);
    const qtoric::DecisionReport report = qtoric::decide(a.context(), a);
    emit(req, qtoric::to_json(report),
         std::string(qtoric::to_string(report.verdict)) + " (stage " +
             std::string(qtoric::to_string(report.stage)) + ")");
    return kExitOk;
}

int cmd_cohomology(const Request& req)
{
    const auto a = load_matrix(req);
    const qtoric::ValidityCertificate cert = qtoric::validate(a);
    if (!cert.valid)
        throw qtoric::InvalidMatrixError("matrix is not valid over its context", cert);
    const auto reduced = qtoric::reduce_to_standard_form(a);
    const qtoric::RingPresentation pres = qtoric::dj_relations(reduced.form);
    Json j = qtoric::to_json(pres);
    if (req.with_ranks) {
        Json ranks = Json::object();
        for (int d = 0; d <= 6 * pres.variable_count; d += 2)
            ranks[std::to_string(d)] = qtoric::graded_rank(pres, d);
        j["ranks"] = std::move(ranks);
    }
    emit(req, j, std::to_string(pres.relations.size()) + " relations");
    return kExitOk;
}

int cmd_sq2(const Request& req)
{
    qtoric::StandardForm sf = [&] {
        if (!req.matrix.empty() || (req.use_stdin && req.standard_form.empty())) {
            const auto a = load_matrix(req);
            const qtoric::ValidityCertificate cert = qtoric::validate(a);
            if (!cert.valid)
                throw qtoric::InvalidMatrixError("matrix is not valid over its context", cert);
            return qtoric::reduce_to_standard_form(a).form;
        }
        return qtoric::standard_form_from_json(primary_input(req, req.standard_form, "standard form"));
    }();
    const qtoric::Sq2Report report = qtoric::sq2_criterion(sf);
    Json classes = Json::array();
    for (const auto& cls : report.classes)
        classes.push_back(qtoric::to_json(cls));
    Json j;
    j["sq2_classes"] = std::move(classes);
    j["all_zero"] = report.all_zero;
    emit(req, j, report.all_zero ? "all Sq^2 q_i vanish" : "some Sq^2 q_i is nonzero");
    return kExitOk;
}

int cmd_rank(const Request& req)
{
    const qtoric::RingPresentation pres =
        qtoric::presentation_from_json(primary_input(req, req.presentation, "presentation"));
    Json j;
    if (req.degree >= 0) {
        j["degree"] = req.degree;
        j["rank"] = qtoric::graded_rank(pres, req.degree);
        emit(req, j, "rank " + std::to_string(j["rank"].get<int>()));
    } else {
        int top = 0;
        for (const auto& rel : pres.relations)
            top += std::max(rel.degree(), 0);
        top = std::max(top, 2 * pres.variable_count);
        Json ranks = Json::object();
        int total = 0;
        for (int d = 0; d <= top; d += 2) {
            const int r = qtoric::graded_rank(pres, d);
            ranks[std::to_string(d)] = r;
            total += r;
        }
        j["ranks"] = std::move(ranks);
        j["total_through_top"] = total;
        emit(req, j, "total rank " + std::to_string(total));
    }
    return kExitOk;
}

int cmd_family_gen(const Request& req)
{
    const qtoric::CharacteristicMatrix a = qtoric::generate_matrix({req.k, req.n});
    const Json j =
        qtoric::matrix_json_with_factors(a, std::vector<int>(static_cast<size_t>(req.n), 3));
    emit(req, j, "B(" + std::to_string(req.k) + "," + std::to_string(req.n) + ")");
    return kExitOk;
}

int cmd_family_iso(const Request& req)
{
    const qtoric::IsoVerdict verdict = qtoric::iso_invariants(req.k, req.l, req.n);
    emit(req, qtoric::to_json(verdict), verdict.isomorphic ? "isomorphic" : "not isomorphic");
    return kExitOk;
}

int cmd_family_invariants(const Request& req)
{
    const qtoric::HknRing ring = qtoric::hkn_ring({req.k, req.n});
    const qtoric::FourthPowerLocus locus = qtoric::fourth_power_zero_locus(ring, req.bound);
    const qtoric::IndecomposabilityWitness witness =
        qtoric::indecomposability_witness(ring, req.bound);
    Json j;
    j["fourth_power_zero_locus"] = qtoric::to_json(locus);
    j["indecomposability"] =
        Json{{"box_bound", witness.bound},
             {"rank", witness.rank},
             {"method", locus.proof_shaped_complete ? "proof_shaped" : "box_search"}};
    emit(req, j, "locus rank " + std::to_string(witness.rank));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact decision procedures for loop-space homotopy commutativity of "
                 "quasitoric manifolds"};
    app.require_subcommand(1);

    Request req;
    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--output", req.output, "write the report to a file instead of stdout");
        cmd->add_option("--format", req.format, "json (stable) or text (summary only)")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto add_matrix_input = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", req.matrix, "matrix JSON (path or inline)");
        cmd->add_option("--polytope", req.polytope, "polytope JSON (path or inline)");
        cmd->add_flag("--stdin", req.use_stdin, "read the primary input from stdin");
        add_io(cmd);
    };

    CLI::App* validate = app.add_subcommand("validate", "check the determinant condition");
    add_matrix_input(validate);

    CLI::App* normalize =
        app.add_subcommand("normalize", "reduce to standard form over (Delta^3)^n");
    add_matrix_input(normalize);

    CLI::App* decide = app.add_subcommand("decide", "decide loop-space homotopy commutativity");
    add_matrix_input(decide);

    CLI::App* cohomology = app.add_subcommand("cohomology", "Davis-Januszkiewicz presentation");
    add_matrix_input(cohomology);
    cohomology->add_flag("--ranks", req.with_ranks, "include the graded rank table");

    CLI::App* sq2 = app.add_subcommand("sq2", "Sq^2 q_i mod 2 of a standard form");
    add_matrix_input(sq2);
    sq2->add_option("--standard-form", req.standard_form, "standard form JSON (path or inline)");

    CLI::App* rank = app.add_subcommand("rank", "graded ranks of a quotient presentation");
    rank->add_option("--presentation", req.presentation, "presentation JSON (path or inline)");
    rank->add_option("--degree", req.degree, "single even degree (otherwise a full table)");
    rank->add_flag("--stdin", req.use_stdin, "read the presentation from stdin");
    add_io(rank);

    CLI::App* family_gen = app.add_subcommand("family-gen", "emit the matrix B(k,n)");
    family_gen->add_option("--k", req.k, "family parameter k >= 1")->required();
    family_gen->add_option("--n", req.n, "number of Delta^3 factors, n >= 2")->required();
    add_io(family_gen);

    CLI::App* family_iso = app.add_subcommand("family-iso", "compare H(k,n) and H(l,n)");
    family_iso->add_option("--k", req.k)->required();
    family_iso->add_option("--l", req.l)->required();
    family_iso->add_option("--n", req.n)->required();
    add_io(family_iso);

    CLI::App* family_inv =
        app.add_subcommand("family-invariants", "fourth-power locus and indecomposability");
    family_inv->add_option("--k", req.k)->required();
    family_inv->add_option("--n", req.n)->required();
    family_inv->add_option("--bound", req.bound, "coefficient box bound (default 3)");
    add_io(family_inv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (app.got_subcommand(validate))
            return cmd_validate(req);
        if (app.got_subcommand(normalize))
            return cmd_normalize(req);
        if (app.got_subcommand(decide))
            return cmd_decide(req);
        if (app.got_subcommand(cohomology))
            return cmd_cohomology(req);
        if (app.got_subcommand(sq2))
            return cmd_sq2(req);
        if (app.got_subcommand(rank))
            return cmd_rank(req);
        if (app.got_subcommand(family_gen))
            return cmd_family_gen(req);
        if (app.got_subcommand(family_iso))
            return cmd_family_iso(req);
        if (app.got_subcommand(family_inv))
            return cmd_family_invariants(req);
    } catch (const qtoric::JsonSchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const qtoric::InvalidMatrixError& e) {
        std::cerr << "invalid matrix: " << e.what() << "\n";
        std::cout << qtoric::canonical_dump(qtoric::to_json(e.certificate()));
        return kExitInvalidMatrix;
    } catch (const qtoric::CriterionDisagreement& e) {
        std::cerr << "internal criterion disagreement: " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
