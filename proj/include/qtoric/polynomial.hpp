#pragma once

#include "qtoric/exact.hpp"

#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtoric {

/// Exponent vector; entry i is the exponent of t_{i+1}.
using Monomial = std::vector<int>;

inline int exponent_sum(const Monomial& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded lexicographic order with t_1 > ... > t_n, used everywhere.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        const int da = exponent_sum(a), db = exponent_sum(b);
        if (da != db)
            return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] < b[i];
        return false;
    }
};

/// Multivariate polynomial in variables of degree 2, with exact
/// coefficients. Terms are kept grlex-sorted with no zero coefficients.
template <class Coeff>
class GradedPolynomial {
public:
    using TermMap = std::map<Monomial, Coeff, GrlexLess>;

    explicit GradedPolynomial(int variable_count) : nvars_(variable_count)
    {
        if (nvars_ < 1)
            throw std::invalid_argument("GradedPolynomial: at least one variable required");
    }

    static GradedPolynomial zero(int nvars) { return GradedPolynomial(nvars); }

    static GradedPolynomial constant(int nvars, Coeff c)
    {
        GradedPolynomial p(nvars);
        p.add_term(Monomial(static_cast<size_t>(nvars), 0), std::move(c));
        return p;
    }

    /// t_{index+1}; index is 0-based.
    static GradedPolynomial variable(int nvars, int index)
    {
        if (index < 0 || index >= nvars)
            throw std::invalid_argument("GradedPolynomial::variable: index out of range");
        GradedPolynomial p(nvars);
        Monomial e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(index)] = 1;
        p.add_term(std::move(e), Coeff(1));
        return p;
    }

    /// sum_i coeffs[i] * t_{i+1}
    static GradedPolynomial linear_form(std::span<const Coeff> coeffs)
    {
        GradedPolynomial p(static_cast<int>(coeffs.size()));
        for (size_t i = 0; i < coeffs.size(); ++i) {
            Monomial e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(std::move(e), coeffs[i]);
        }
        return p;
    }

    int variable_count() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Topological degree (2 per exponent unit); -1 for the zero polynomial.
    int degree() const
    {
        return terms_.empty() ? -1 : 2 * exponent_sum(terms_.rbegin()->first);
    }

    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        const int s = exponent_sum(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (exponent_sum(e) != s)
                return false;
        return true;
    }

    Coeff coefficient(const Monomial& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    /// Grlex-largest term; polynomial must be nonzero.
    const std::pair<const Monomial, Coeff>& leading_term() const
    {
        if (terms_.empty())
            throw std::logic_error("leading_term of zero polynomial");
        return *terms_.rbegin();
    }

    void add_term(Monomial e, Coeff c)
    {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("GradedPolynomial: exponent vector of wrong length");
        for (int x : e)
            if (x < 0)
                throw std::invalid_argument("GradedPolynomial: negative exponent");
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (qtoric::is_zero(it->second))
                terms_.erase(it);
        } else if (qtoric::is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    GradedPolynomial& operator+=(const GradedPolynomial& o)
    {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    GradedPolynomial& operator-=(const GradedPolynomial& o)
    {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    GradedPolynomial& operator*=(const Coeff& s)
    {
        if (qtoric::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b)
    {
        a += b;
        return a;
    }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b)
    {
        a -= b;
        return a;
    }
    friend GradedPolynomial operator-(const GradedPolynomial& a)
    {
        GradedPolynomial out(a.nvars_);
        for (const auto& [e, c] : a.terms_)
            out.terms_.emplace(e, -c);
        return out;
    }

    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b)
    {
        a.check_same_ring(b);
        GradedPolynomial out(a.nvars_);
        Monomial e(static_cast<size_t>(a.nvars_), 0);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend GradedPolynomial operator*(const Coeff& s, GradedPolynomial p)
    {
        p *= s;
        return p;
    }

    GradedPolynomial pow(int e) const
    {
        if (e < 0)
            throw std::invalid_argument("GradedPolynomial::pow: negative exponent");
        GradedPolynomial out = constant(nvars_, Coeff(1));
        GradedPolynomial base = *this;
        while (e > 0) {
            if (e & 1)
                out = out * base;
            e >>= 1;
            if (e)
                base = base * base;
        }
        return out;
    }

    /// Ring homomorphism t_{i+1} -> images[i]; all images share a target ring.
    GradedPolynomial substitute(std::span<const GradedPolynomial> images) const
    {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("substitute: one image per variable required");
        const int target_vars = images.empty() ? nvars_ : images[0].variable_count();
        GradedPolynomial out(target_vars);
        for (const auto& [e, c] : terms_) {
            GradedPolynomial term = constant(target_vars, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0)
                    term = term * images[i].pow(e[i]);
            out += term;
        }
        return out;
    }

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedPolynomial& a, const GradedPolynomial& b)
    {
        return !(a == b);
    }

private:
    void check_same_ring(const GradedPolynomial& o) const
    {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("GradedPolynomial: variable counts differ");
    }

    int nvars_;
    TermMap terms_;
};

using ZPolynomial = GradedPolynomial<Int>;
using Z2Polynomial = GradedPolynomial<Z2>;

inline Z2Polynomial reduce_mod2(const ZPolynomial& p)
{
    Z2Polynomial out(p.variable_count());
    for (const auto& [e, c] : p.terms())
        out.add_term(e, Z2(c));
    return out;
}

}  // namespace qtoric
