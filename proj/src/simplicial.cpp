#include "qtoric/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qtoric {

namespace {

bool contains_sorted(const std::vector<int>& big, const std::vector<int>& small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Visits all cardinality-c subsets of {1..m} in lexicographic order.
template <class Fn>
void for_each_subset(int m, int c, Fn&& fn)
{
    std::vector<int> idx(c);
    for (int i = 0; i < c; ++i)
        idx[i] = i + 1;
    while (true) {
        fn(idx);
        int pos = c - 1;
        while (pos >= 0 && idx[pos] == m - (c - 1 - pos))
            --pos;
        if (pos < 0)
            return;
        ++idx[pos];
        for (int i = pos + 1; i < c; ++i)
            idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets)
    : vertex_count_(vertex_count), facets_(std::move(facets))
{
    if (vertex_count_ < 1)
        throw std::invalid_argument("SimplicialComplex: at least one vertex required");
    if (facets_.empty())
        throw std::invalid_argument("SimplicialComplex: facet list is empty");
    for (auto& f : facets_) {
        if (f.empty())
            throw std::invalid_argument("SimplicialComplex: empty facet");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.front() < 1 || f.back() > vertex_count_)
            throw std::invalid_argument("SimplicialComplex: vertex label out of range");
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());

    for (size_t i = 0; i < facets_.size(); ++i)
        for (size_t j = 0; j < facets_.size(); ++j)
            if (i != j && contains_sorted(facets_[i], facets_[j]))
                throw std::invalid_argument("SimplicialComplex: facet contained in another facet");

    std::vector<char> seen(static_cast<size_t>(vertex_count_) + 1, 0);
    for (const auto& f : facets_)
        for (int v : f)
            seen[static_cast<size_t>(v)] = 1;
    for (int v = 1; v <= vertex_count_; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw std::invalid_argument("SimplicialComplex: vertex " + std::to_string(v) +
                                        " lies on no facet");
}

bool SimplicialComplex::is_face(const std::vector<int>& vertices) const
{
    std::vector<int> s = vertices;
    std::sort(s.begin(), s.end());
    for (const auto& f : facets_)
        if (contains_sorted(f, s))
            return true;
    return false;
}

int SimplicialComplex::dimension() const
{
    size_t top = 0;
    for (const auto& f : facets_)
        top = std::max(top, f.size());
    return static_cast<int>(top) - 1;
}

bool SimplicialComplex::is_pure() const
{
    for (const auto& f : facets_)
        if (f.size() != facets_.front().size())
            return false;
    return true;
}

NonfaceReport minimal_nonfaces(const SimplicialComplex& k)
{
    // Breadth-first over subset cardinality. A candidate is a minimal
    // nonface iff it is not a face and all its (c-1)-subsets are faces;
    // downward closure makes checking the maximal proper subsets enough.
    // Supersets of recorded nonfaces are skipped early.
    const int m = k.vertex_count();
    NonfaceReport report;
    for (int c = 2; c <= m; ++c) {
        for_each_subset(m, c, [&](const std::vector<int>& s) {
            for (const auto& known : report.minimal_nonfaces)
                if (contains_sorted(s, known))
                    return;
            if (k.is_face(s))
                return;
            std::vector<int> sub(static_cast<size_t>(c) - 1);
            for (int omit = 0; omit < c; ++omit) {
                for (int i = 0, j = 0; i < c; ++i)
                    if (i != omit)
                        sub[static_cast<size_t>(j++)] = s[static_cast<size_t>(i)];
                if (!k.is_face(sub))
                    return;
            }
            report.minimal_nonfaces.push_back(s);
        });
    }
    std::sort(report.minimal_nonfaces.begin(), report.minimal_nonfaces.end());
    for (const auto& nf : report.minimal_nonfaces)
        report.cardinalities.push_back(static_cast<int>(nf.size()));
    std::sort(report.cardinalities.begin(), report.cardinalities.end());
    for (size_t i = 0; i < report.minimal_nonfaces.size() && report.pairwise_disjoint; ++i)
        for (size_t j = i + 1; j < report.minimal_nonfaces.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(report.minimal_nonfaces[i].begin(), report.minimal_nonfaces[i].end(),
                                  report.minimal_nonfaces[j].begin(), report.minimal_nonfaces[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) {
                report.pairwise_disjoint = false;
                break;
            }
        }
    return report;
}

SimplicialComplex build_dual_of_simplex_product(const std::vector<int>& factor_dims)
{
    if (factor_dims.empty())
        throw std::invalid_argument("build_dual_of_simplex_product: no factors");
    for (int d : factor_dims)
        if (d < 1)
            throw std::invalid_argument("build_dual_of_simplex_product: factor dimension must be >= 1");

    std::vector<int> offset(factor_dims.size() + 1, 0);
    for (size_t i = 0; i < factor_dims.size(); ++i)
        offset[i + 1] = offset[i] + factor_dims[i] + 1;
    const int m = offset.back();

    // One facet per choice of omitted vertex in each block.
    std::vector<std::vector<int>> facets;
    std::vector<int> omit(factor_dims.size(), 0);
    while (true) {
        std::vector<int> facet;
        for (size_t b = 0; b < factor_dims.size(); ++b)
            for (int v = offset[b] + 1; v <= offset[b + 1]; ++v)
                if (v != offset[b] + 1 + omit[b])
                    facet.push_back(v);
        facets.push_back(std::move(facet));
        size_t b = 0;
        while (b < factor_dims.size() && omit[b] == factor_dims[b]) {
            omit[b] = 0;
            ++b;
        }
        if (b == factor_dims.size())
            break;
        ++omit[b];
    }
    return SimplicialComplex(m, std::move(facets));
}

std::pair<SimplicialComplex, std::vector<int>> full_subcomplex(const SimplicialComplex& k,
                                                               const std::vector<int>& vertex_subset)
{
    if (vertex_subset.empty())
        throw std::invalid_argument("full_subcomplex: empty vertex subset");
    std::vector<int> labels = vertex_subset;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.front() < 1 || labels.back() > k.vertex_count())
        throw std::invalid_argument("full_subcomplex: vertex label out of range");

    std::vector<int> new_label(static_cast<size_t>(k.vertex_count()) + 1, 0);
    for (size_t i = 0; i < labels.size(); ++i)
        new_label[static_cast<size_t>(labels[i])] = static_cast<int>(i) + 1;

    // Facets of K_I are the maximal traces facet-intersect-I. Singletons are
    // always faces, so no vertex of I goes missing.
    std::set<std::vector<int>> traces;
    for (const auto& f : k.facets()) {
        std::vector<int> t;
        for (int v : f)
            if (new_label[static_cast<size_t>(v)] != 0)
                t.push_back(new_label[static_cast<size_t>(v)]);
        if (!t.empty())
            traces.insert(std::move(t));
    }
    std::vector<std::vector<int>> maximal;
    for (const auto& t : traces) {
        bool dominated = false;
        for (const auto& u : traces)
            if (&u != &t && contains_sorted(u, t) && u != t) {
                dominated = true;
                break;
            }
        if (!dominated)
            maximal.push_back(t);
    }
    return {SimplicialComplex(static_cast<int>(labels.size()), std::move(maximal)), labels};
}

TetraJoinCheck is_join_of_tetrahedron_boundaries(const SimplicialComplex& k)
{
    TetraJoinCheck result;
    const NonfaceReport nf = minimal_nonfaces(k);
    for (const auto& face : nf.minimal_nonfaces)
        if (face.size() != 4) {
            result.failure = "nonface cardinality " + std::to_string(face.size());
            return result;
        }
    if (!nf.pairwise_disjoint) {
        result.failure = "intersecting minimal nonfaces";
        return result;
    }
    size_t covered = 0;
    for (const auto& face : nf.minimal_nonfaces)
        covered += face.size();
    if (covered != static_cast<size_t>(k.vertex_count())) {
        result.failure = "blocks do not cover all vertices";
        return result;
    }

    std::vector<std::array<int, 4>> blocks;
    for (const auto& face : nf.minimal_nonfaces)
        blocks.push_back({face[0], face[1], face[2], face[3]});
    std::sort(blocks.begin(), blocks.end());

    // K is determined by its minimal nonfaces, so equality with the join
    // holds whenever the checks above pass; comparing facet sets guards the
    // implementation.
    std::vector<std::vector<int>> expected;
    std::vector<int> omit(blocks.size(), 0);
    while (true) {
        std::vector<int> facet;
        for (size_t b = 0; b < blocks.size(); ++b)
            for (int j = 0; j < 4; ++j)
                if (j != omit[b])
                    facet.push_back(blocks[b][static_cast<size_t>(j)]);
        std::sort(facet.begin(), facet.end());
        expected.push_back(std::move(facet));
        size_t b = 0;
        while (b < blocks.size() && omit[b] == 3) {
            omit[b] = 0;
            ++b;
        }
        if (b == blocks.size())
            break;
        ++omit[b];
    }
    std::sort(expected.begin(), expected.end());
    if (expected != k.facets()) {
        result.failure = "facets differ from the join of boundary tetrahedra";
        return result;
    }
    result.blocks = std::move(blocks);
    return result;
}

}  // namespace qtoric
