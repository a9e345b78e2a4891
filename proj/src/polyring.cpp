#include "qtoric/polyring.hpp"

#include "qtoric/linalg.hpp"

#include <algorithm>

namespace qtoric {

RingPresentation dj_relations(const StandardForm& sf)
{
    const int n = sf.factors();
    RingPresentation pres;
    pres.variable_count = n;
    pres.source = "davis-januszkiewicz";
    for (int i = 0; i < n; ++i) {
        ZPolynomial q = ZPolynomial::variable(n, i);
        for (int j = 0; j < 3; ++j) {
            ZPolynomial form(n);
            for (int k = 0; k < n; ++k) {
                Monomial e(static_cast<size_t>(n), 0);
                e[static_cast<size_t>(k)] = 1;
                form.add_term(std::move(e), sf.block(i, k)(j));
            }
            q = q * form;
        }
        pres.relations.push_back(std::move(q));
    }
    return pres;
}

Z2Polynomial sq2(const Z2Polynomial& p)
{
    const int n = p.variable_count();
    Z2Polynomial out(n);
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] % 2 == 0)
                continue;
            Monomial up = e;
            ++up[i];
            out.add_term(std::move(up), c);
        }
    }
    return out;
}

Z2Polynomial sq2_of_degree_two_product(std::span<const Z2Polynomial> factors)
{
    if (factors.empty())
        throw std::invalid_argument("sq2_of_degree_two_product: no factors");
    const int n = factors[0].variable_count();
    Z2Polynomial sum(n);
    Z2Polynomial prod = Z2Polynomial::constant(n, Z2(1));
    for (const auto& f : factors) {
        if (!f.is_zero() && f.degree() != 2)
            throw std::invalid_argument("sq2_of_degree_two_product: factor is not of degree 2");
        sum += f;
        prod = prod * f;
    }
    return sum * prod;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree)
{
    std::vector<Monomial> out;
    if (degree < 0 || degree % 2 != 0)
        return out;
    const int s = degree / 2;
    Monomial e(static_cast<size_t>(nvars), 0);
    // Lexicographic enumeration of compositions of s into nvars parts.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            e[static_cast<size_t>(pos)] = remaining;
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            e[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, s);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

int graded_rank(const RingPresentation& pres, int degree)
{
    if (degree % 2 != 0)
        throw std::invalid_argument("graded_rank: degree must be even");
    for (const auto& r : pres.relations)
        if (!r.is_homogeneous())
            throw std::invalid_argument("graded_rank: relations must be homogeneous");
    if (degree < 0)
        return 0;

    const int n = pres.variable_count;
    const std::vector<Monomial> basis = monomials_of_degree(n, degree);
    std::map<Monomial, int, GrlexLess> column;
    for (size_t j = 0; j < basis.size(); ++j)
        column[basis[j]] = static_cast<int>(j);

    std::vector<std::vector<Int>> rows;
    for (const auto& rel : pres.relations) {
        if (rel.is_zero())
            continue;
        const int reldeg = rel.degree();
        for (const auto& mult : monomials_of_degree(n, degree - reldeg)) {
            std::vector<Int> row(basis.size(), Int(0));
            Monomial e(static_cast<size_t>(n), 0);
            for (const auto& [re, rc] : rel.terms()) {
                for (size_t i = 0; i < e.size(); ++i)
                    e[i] = re[i] + mult[i];
                row[static_cast<size_t>(column.at(e))] = rc;
            }
            rows.push_back(std::move(row));
        }
    }

    if (rows.empty())
        return static_cast<int>(basis.size());
    IntMatrix mat(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(basis.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return static_cast<int>(basis.size()) - integer_rank(mat);
}

std::optional<RewriteSystem> RewriteSystem::from_presentation(const RingPresentation& pres)
{
    RewriteSystem rs(pres.variable_count);
    rs.caps_.assign(static_cast<size_t>(pres.variable_count), std::nullopt);
    for (const auto& rel : pres.relations) {
        if (rel.is_zero())
            return std::nullopt;
        const auto& [lead, coeff] = rel.leading_term();
        if (coeff != 1 && coeff != -1)
            return std::nullopt;
        int var = -1;
        for (size_t i = 0; i < lead.size(); ++i)
            if (lead[i] > 0) {
                if (var >= 0)
                    return std::nullopt;  // not a pure power
                var = static_cast<int>(i);
            }
        if (var < 0 || rs.caps_[static_cast<size_t>(var)].has_value())
            return std::nullopt;
        ZPolynomial tail = rel;
        Monomial lead_copy = lead;
        tail.add_term(std::move(lead_copy), -coeff);  // rel - lead
        tail *= -coeff;                               // t^d -> -coeff^{-1} * tail, coeff = +-1
        rs.caps_[static_cast<size_t>(var)] = lead[static_cast<size_t>(var)];
        rs.rules_.push_back(Rule{var, lead[static_cast<size_t>(var)], std::move(tail)});
    }
    return rs;
}

ZPolynomial RewriteSystem::normal_form(const ZPolynomial& p) const
{
    std::mt19937 unused(0);
    return normal_form(p, Strategy::leading, unused);
}

ZPolynomial RewriteSystem::normal_form(const ZPolynomial& p, Strategy strategy,
                                       std::mt19937& rng) const
{
    if (p.variable_count() != nvars_)
        throw std::invalid_argument("normal_form: variable count mismatch");
    ZPolynomial work = p;
    while (true) {
        // Collect reducible (term, rule) pairs; grlex-descending term order.
        std::vector<std::pair<Monomial, const Rule*>> reducible;
        for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
            for (const Rule& rule : rules_)
                if (it->first[static_cast<size_t>(rule.variable)] >= rule.power) {
                    reducible.emplace_back(it->first, &rule);
                    if (strategy == Strategy::leading)
                        break;
                }
            if (strategy == Strategy::leading && !reducible.empty())
                break;
        }
        if (reducible.empty())
            return work;
        const auto& [mono, rule] =
            strategy == Strategy::leading
                ? reducible.front()
                : reducible[std::uniform_int_distribution<size_t>(0, reducible.size() - 1)(rng)];
        const Int coeff = work.coefficient(mono);
        Monomial quotient = mono;
        quotient[static_cast<size_t>(rule->variable)] -= rule->power;
        // c * t^e  ->  c * t^(e - d*e_v) * tail
        ZPolynomial replacement(nvars_);
        Monomial e(static_cast<size_t>(nvars_), 0);
        for (const auto& [te, tc] : rule->tail.terms()) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = te[i] + quotient[i];
            replacement.add_term(e, tc * coeff);
        }
        work.add_term(mono, -coeff);
        work += replacement;
    }
}

}  // namespace qtoric
