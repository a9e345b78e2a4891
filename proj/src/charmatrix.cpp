#include "qtoric/charmatrix.hpp"

#include "qtoric/linalg.hpp"

#include <algorithm>
#include <set>

namespace qtoric {

CharacteristicMatrix::CharacteristicMatrix(IntMatrix entries, SimplicialComplex context)
    : entries_(std::move(entries)), context_(std::move(context))
{
    if (entries_.cols() != context_.vertex_count())
        throw std::invalid_argument("CharacteristicMatrix: column count must equal vertex count");
    if (entries_.rows() < 1)
        throw std::invalid_argument("CharacteristicMatrix: empty matrix");
}

InvalidMatrixError::InvalidMatrixError(std::string message, ValidityCertificate certificate)
    : std::runtime_error(std::move(message)), certificate_(std::move(certificate))
{
}

ValidityCertificate validate(const CharacteristicMatrix& a)
{
    const int n = a.rank_dim();
    ValidityCertificate cert;
    cert.valid = true;
    for (const auto& simplex : a.context().facets()) {
        if (static_cast<int>(simplex.size()) != n)
            throw std::invalid_argument(
                "validate: maximal simplex size does not match matrix rank");
        IntMatrix cols(n, n);
        for (int j = 0; j < n; ++j)
            cols.col(j) = a.entries().col(simplex[static_cast<size_t>(j)] - 1);
        Int det = bareiss_determinant(cols);
        if (det != 1 && det != -1 && cert.valid) {
            cert.valid = false;
            cert.first_failing_simplex = simplex;
        }
        cert.determinants.emplace_back(simplex, std::move(det));
    }
    return cert;
}

CharacteristicMatrix apply_move(const CharacteristicMatrix& a, const EquivalenceMove& move)
{
    if (const auto* gl = std::get_if<LeftGl>(&move)) {
        if (gl->q.rows() != a.rank_dim() || gl->q.cols() != a.rank_dim())
            throw std::invalid_argument("apply_move: left matrix has wrong dimensions");
        if (!is_unimodular(gl->q))
            throw std::invalid_argument("apply_move: left matrix is not unimodular");
        return CharacteristicMatrix(mat_mul(gl->q, a.entries()), a.context());
    }
    if (const auto* d = std::get_if<ColumnSigns>(&move)) {
        if (static_cast<int>(d->signs.size()) != a.facet_count())
            throw std::invalid_argument("apply_move: sign list has wrong length");
        IntMatrix out = a.entries();
        for (int j = 0; j < a.facet_count(); ++j) {
            if (d->signs[static_cast<size_t>(j)] != 1 && d->signs[static_cast<size_t>(j)] != -1)
                throw std::invalid_argument("apply_move: column signs must be +-1");
            if (d->signs[static_cast<size_t>(j)] == -1)
                out.col(j) = -out.col(j);
        }
        return CharacteristicMatrix(std::move(out), a.context());
    }
    const auto& perm = std::get<FacetPermutation>(move);
    const int m = a.facet_count();
    if (static_cast<int>(perm.image.size()) != m)
        throw std::invalid_argument("apply_move: permutation has wrong length");
    std::vector<char> hit(static_cast<size_t>(m) + 1, 0);
    for (int img : perm.image) {
        if (img < 1 || img > m || hit[static_cast<size_t>(img)])
            throw std::invalid_argument("apply_move: not a permutation of 1..m");
        hit[static_cast<size_t>(img)] = 1;
    }
    std::set<std::vector<int>> facet_set(a.context().facets().begin(), a.context().facets().end());
    for (const auto& f : a.context().facets()) {
        std::vector<int> mapped;
        for (int v : f)
            mapped.push_back(perm.image[static_cast<size_t>(v) - 1]);
        std::sort(mapped.begin(), mapped.end());
        if (!facet_set.count(mapped))
            throw std::invalid_argument("apply_move: permutation is not an automorphism of the context");
    }
    IntMatrix out(a.rank_dim(), m);
    for (int v = 1; v <= m; ++v)
        out.col(perm.image[static_cast<size_t>(v) - 1] - 1) = a.entries().col(v - 1);
    return CharacteristicMatrix(std::move(out), a.context());
}

StandardForm::StandardForm(int factors, std::vector<Vec3I> blocks)
    : factors_(factors), blocks_(std::move(blocks))
{
    if (factors_ < 1)
        throw std::invalid_argument("StandardForm: at least one factor required");
    if (blocks_.size() != static_cast<size_t>(factors_) * static_cast<size_t>(factors_))
        throw std::invalid_argument("StandardForm: expected n*n blocks");
    for (int i = 0; i < factors_; ++i) {
        const Vec3I& d = blocks_[static_cast<size_t>(i) * static_cast<size_t>(factors_) +
                                 static_cast<size_t>(i)];
        if (d(0) != 1 || d(1) != 1 || d(2) != 1)
            throw std::invalid_argument("StandardForm: diagonal blocks must be t(1,1,1)");
    }
}

const Vec3I& StandardForm::block(int i, int j) const
{
    return blocks_[static_cast<size_t>(i) * static_cast<size_t>(factors_) + static_cast<size_t>(j)];
}

CharacteristicMatrix assemble(const StandardForm& sf)
{
    const int n = sf.factors();
    IntMatrix out = IntMatrix::Zero(3 * n, 4 * n);
    for (int j = 0; j < n; ++j) {
        for (int c = 0; c < 3; ++c)
            out(3 * j + c, 4 * j + c) = 1;
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < 3; ++r)
                out(3 * i + r, 4 * j + 3) = sf.block(i, j)(r);
    }
    return CharacteristicMatrix(std::move(out),
                                build_dual_of_simplex_product(std::vector<int>(static_cast<size_t>(n), 3)));
}

StandardizedContext standardize_tetra_join_labels(const CharacteristicMatrix& a)
{
    const auto join = is_join_of_tetrahedron_boundaries(a.context());
    if (!join)
        throw std::invalid_argument("standardize_tetra_join_labels: context is not a join of "
                                    "boundary tetrahedra: " + join.failure);
    const int n = static_cast<int>(join.blocks->size());
    std::vector<int> image(static_cast<size_t>(4 * n), 0);
    bool identity = true;
    for (int b = 0; b < n; ++b)
        for (int p = 0; p < 4; ++p) {
            const int old_label = (*join.blocks)[static_cast<size_t>(b)][static_cast<size_t>(p)];
            const int new_label = 4 * b + p + 1;
            image[static_cast<size_t>(old_label) - 1] = new_label;
            if (old_label != new_label)
                identity = false;
        }
    if (identity)
        return {a, {}};
    IntMatrix cols(a.rank_dim(), a.facet_count());
    for (int v = 1; v <= a.facet_count(); ++v)
        cols.col(image[static_cast<size_t>(v) - 1] - 1) = a.entries().col(v - 1);
    return {CharacteristicMatrix(std::move(cols), build_dual_of_simplex_product(
                                                      std::vector<int>(static_cast<size_t>(n), 3))),
            std::move(image)};
}

ReductionResult reduce_to_standard_form(const CharacteristicMatrix& a)
{
    const auto join = is_join_of_tetrahedron_boundaries(a.context());
    if (!join)
        throw std::invalid_argument("reduce_to_standard_form: context is not of (Delta^3)^n shape: " +
                                    join.failure);
    const int n = static_cast<int>(join.blocks->size());
    for (int b = 0; b < n; ++b)
        for (int p = 0; p < 4; ++p)
            if ((*join.blocks)[static_cast<size_t>(b)][static_cast<size_t>(p)] != 4 * b + p + 1)
                throw std::invalid_argument(
                    "reduce_to_standard_form: vertex blocks are not in the standard order "
                    "F_11, F_12, ...; relabel the complex first");
    if (a.rank_dim() != 3 * n)
        throw std::invalid_argument("reduce_to_standard_form: matrix rank does not match 3n");

    // Columns F_i1, F_i2, F_i3 meet at a vertex, so their 3n x 3n matrix is
    // unimodular for a valid input.
    IntMatrix q(3 * n, 3 * n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c)
            q.col(3 * i + c) = a.entries().col(4 * i + c);
    IntMatrix q_inv;
    try {
        q_inv = unimodular_inverse(q);
    } catch (const std::invalid_argument&) {
        throw InvalidMatrixError("reduce_to_standard_form: columns {F_i1,F_i2,F_i3} are not unimodular",
                                 validate(a));
    }
    IntMatrix c = mat_mul(q_inv, a.entries());

    // Validity forces c_ii in {+-1}^3. Flip each row with a negative c_ii
    // entry, restoring the identity column by a sign flip of that column.
    std::vector<int> row_signs(static_cast<size_t>(3 * n), 1);
    std::vector<int> col_signs(static_cast<size_t>(4 * n), 1);
    bool any_row_flip = false;
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < 3; ++r) {
            const Int& e = c(3 * i + r, 4 * i + 3);
            if (e != 1 && e != -1)
                throw InvalidMatrixError("reduce_to_standard_form: c_ii entry is not +-1; input invalid",
                                         validate(a));
            if (e == -1) {
                row_signs[static_cast<size_t>(3 * i + r)] = -1;
                col_signs[static_cast<size_t>(4 * i + r)] = -1;
                any_row_flip = true;
            }
        }
    for (int r = 0; r < 3 * n; ++r)
        if (row_signs[static_cast<size_t>(r)] == -1)
            c.row(r) = -c.row(r);
    for (int j = 0; j < 4 * n; ++j)
        if (col_signs[static_cast<size_t>(j)] == -1)
            c.col(j) = -c.col(j);

    std::vector<Vec3I> blocks(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < 3; ++r)
                blocks[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)](r) =
                    c(3 * i + r, 4 * j + 3);

    ReductionResult result{StandardForm(n, std::move(blocks)), {}};
    if (!matrices_equal(q_inv, IntMatrix::Identity(3 * n, 3 * n)))
        result.moves.push_back(LeftGl{q_inv});
    if (any_row_flip) {
        IntMatrix d_rows = IntMatrix::Zero(3 * n, 3 * n);
        for (int r = 0; r < 3 * n; ++r)
            d_rows(r, r) = row_signs[static_cast<size_t>(r)];
        result.moves.push_back(LeftGl{std::move(d_rows)});
        result.moves.push_back(ColumnSigns{col_signs});
    }
    return result;
}

}  // namespace qtoric
