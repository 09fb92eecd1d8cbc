#pragma once

#include "gitstab/profile.hpp"

#include <string>
#include <vector>

namespace gitstab {

using RationalVector = std::vector<Rational>;

enum class FacetKind { F1A, F1B, F2A, F2B };
std::string to_string(FacetKind k);

// Halfspace {s_I >= c}; I is sorted, 1-based.
struct Facet {
    std::vector<int> I;
    Rational c;
    FacetKind kind = FacetKind::F1B;
    friend bool operator==(const Facet&, const Facet&) = default;
};

class CornerPolyhedron {
public:
    // Validates: each vertex satisfies every facet, each facet is tight somewhere.
    CornerPolyhedron(int N, std::vector<RationalVector> vertices, std::vector<Facet> facets);

    int dim() const { return N_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    // Membership through the facet system.
    bool satisfies(const RationalVector& x, bool strict = false) const;

    friend bool operator==(const CornerPolyhedron&, const CornerPolyhedron&) = default;

private:
    int N_;
    std::vector<RationalVector> vertices_;
    std::vector<Facet> facets_;
};

Rational s_I(const std::vector<int>& I, const RationalVector& x);
RationalVector to_rational(const WeightVector& w);

// Weights of all nonzero entries, deduplicated, lexicographic.
std::vector<WeightVector> raw_weights(const Support& s);

// Facets from the Hessenberg conditions on the standard flag.
CornerPolyhedron corner_facets(const Support& s);
inline CornerPolyhedron corner_facets(const Matrix& m) { return corner_facets(Support::of(m)); }

// Rows I of the control matrix, dominated columns removed.
ControlMatrix verts_projection(const Support& s, const std::vector<int>& I);
// Facets from the control-matrix projections (zero rows and +-identity projections).
std::vector<Facet> facets_from_control(const Support& s);

// query in Conv(points) + O+ (interior of it when strict). Exact LP; uses no facet data.
bool corner_membership(const std::vector<RationalVector>& points, const RationalVector& query, bool strict);
bool corner_membership(const std::vector<WeightVector>& points, const WeightVector& query, bool strict);

CornerPolyhedron minkowski_translate(const CornerPolyhedron& p, const RationalVector& shift, int q);

// All nonempty subsets of [N] in facet order: by size, then lexicographic.
std::vector<std::vector<int>> index_subsets(int N);

}  // namespace gitstab
