#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfk/error.hpp"
#include "sfk/linalg.hpp"

namespace sfk {

/// One facet of a moment polytope: primitive integer interior normal nu and
/// real offset lambda. The facet affine function is l(x) = x.nu - lambda and
/// the polytope is P = {x : l_i(x) > 0 for all i}.
struct Facet {
    std::int64_t nx = 0;
    std::int64_t ny = 0;
    double lambda = 0.0;

    Vec2 normal() const { return {double(nx), double(ny)}; }
};

struct Violation {
    ErrorKind kind;
    int index = -1;  // facet index when applicable, else -1
    std::string message;
};

/// A validated strictly unbounded Delzant polytope.
///
/// Facets are ordered so that consecutive normals satisfy
/// det(nu_i, nu_{i+1}) = -1 and consecutive facets meet in a vertex of the
/// boundary; facets 1 and d carry the two (non-parallel) unbounded edges.
/// Instances are immutable after construction.
class DelzantPolytope {
public:
    const std::string& name() const { return name_; }
    int facet_count() const { return int(facets_.size()); }
    const std::vector<Facet>& facets() const { return facets_; }
    Vec2 normal(int i) const { return facets_[i].normal(); }
    double lambda(int i) const { return facets_[i].lambda; }

    /// The d-1 vertices; vertex i is the intersection of facets i and i+1.
    const std::vector<Vec2>& vertices() const { return vertices_; }

    /// Facet affine values l_i(x) = x.nu_i - lambda_i.
    std::vector<double> facet_values(const Vec2& x) const;

    /// Smallest facet value; positive exactly on the interior.
    double min_facet_value(const Vec2& x) const;
    bool contains(const Vec2& x) const { return min_facet_value(x) > 0.0; }

    /// A point in the interior (used for probes and default bases).
    Vec2 interior_point() const { return interior_point_; }

    /// Rough coordinate scale of the bounded part (max 1, |vertices|).
    double scale() const { return scale_; }

private:
    friend struct PolytopeBuilder;
    std::string name_;
    std::vector<Facet> facets_;
    std::vector<Vec2> vertices_;
    Vec2 interior_point_;
    double scale_ = 1.0;
};

struct ValidationResult {
    std::optional<DelzantPolytope> polytope;
    std::vector<Violation> violations;
    bool ok() const { return polytope.has_value(); }
};

/// Check all Delzant/strict-unboundedness invariants on a raw facet list.
/// Returns either the validated polytope or the full list of violations.
ValidationResult validate(const std::vector<Facet>& raw_facets,
                          const std::string& name = "");

/// As validate(), but throws Error on the first violation.
DelzantPolytope validate_or_throw(const std::vector<Facet>& raw_facets,
                                  const std::string& name = "");

/// Anchor parameters a_1 < ... < a_{d-1} on the H-axis of the half-plane;
/// the boundary limit of the moment map at H = a_i is vertex i.
/// Gauge: a_1 = 0.
struct AnchorSequence {
    std::vector<double> a;

    int size() const { return int(a.size()); }
    double operator[](int i) const { return a[i]; }
};

/// Anchor spacings from the polytope geometry. The spacing between
/// consecutive anchors is the lattice length of the bounded edge between
/// the corresponding vertices,
///
///   a_{i+1} - a_i = |vertex_{i+1} - vertex_i| / |nu_{i+1}|,
///
/// i.e. the Euclidean edge length divided by the norm of the normal of the
/// facet carrying the edge. This constant is pinned by the vertex-anchor
/// oracle: the explicit construction maps (a_i, 0) to vertex i exactly with
/// this spacing (see verify::vertex_anchor_suite).
AnchorSequence anchor_spacings(const DelzantPolytope& P);

/// l_i(x) for all facets (no interiority requirement).
std::vector<double> guillemin_facet_values(const DelzantPolytope& P, const Vec2& x);

/// Optional normalization: an SL(2,Z) map plus translation taking the first
/// two normals to (0,1), (1,0) and vertex 1 to the origin ("standard at the
/// vertex 0"). Not applied anywhere automatically.
DelzantPolytope standardize(const DelzantPolytope& P);

/// JSON spec file: {"name": string, "normals": [[int,int],...],
/// "lambdas": [number,...]}. Unknown keys are rejected.
DelzantPolytope load_polytope_json(const std::string& path);
std::string polytope_to_json(const DelzantPolytope& P);

}  // namespace sfk
