// Exact rational convex polytopes in low dimension, carried in both vertex
// and halfspace form.
#ifndef INOB_POLYTOPE_HPP
#define INOB_POLYTOPE_HPP

#include "inob/rational.hpp"

#include <Eigen/Geometry>
#include <nlohmann/json.hpp>

#include <stdexcept>
#include <vector>

namespace inob {

/// The closed set { m : <normal, m> >= offset }.
struct Halfspace {
    QVector normal;
    Rat offset;

    Halfspace(QVector n, Rat b);

    bool contains(const QVector& point) const;
    /// <normal, point> - offset; zero exactly on the boundary hyperplane.
    Rat slack(const QVector& point) const;
};

/// Scales so the first nonzero normal entry is +-1.
Halfspace normalized(const Halfspace& h);
bool operator==(const Halfspace& a, const Halfspace& b);
bool operator<(const Halfspace& a, const Halfspace& b);

class UnboundedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Immutable bounded polytope. The empty polytope is a legitimate value with
/// no vertices. Lower-dimensional polytopes carry their affine hull as pairs
/// of opposite halfspaces.
class Polytope {
public:
    static Polytope empty(Eigen::Index dim);

    Eigen::Index dim() const { return dim_; }
    /// -1 for the empty polytope.
    Eigen::Index affine_dim() const { return affine_dim_; }
    bool is_empty() const { return vertices_.empty(); }
    /// Extreme points, sorted lexicographically.
    const std::vector<QVector>& vertices() const { return vertices_; }
    /// Facet inequalities followed by affine-hull equalities (as opposite pairs).
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    /// Facet inequalities only (empty unless affine_dim >= 1).
    const std::vector<Halfspace>& facets() const { return facets_; }

    bool contains(const QVector& point) const;

private:
    Polytope(Eigen::Index dim, Eigen::Index affine_dim, std::vector<QVector> vertices,
             std::vector<Halfspace> facets, std::vector<Halfspace> equalities);

    friend Polytope hull(const std::vector<QVector>& points);
    friend Polytope intersect_halfspaces(Eigen::Index dim, const std::vector<Halfspace>& halfspaces);

    Eigen::Index dim_;
    Eigen::Index affine_dim_;
    std::vector<QVector> vertices_;
    std::vector<Halfspace> facets_;
    std::vector<Halfspace> halfspaces_;
};

/// Convex hull of a nonempty point set of uniform dimension.
Polytope hull(const std::vector<QVector>& points);

/// Bounded intersection of halfspaces. Empty input systems give the empty
/// polytope; an unbounded feasible region throws UnboundedError.
Polytope intersect_halfspaces(Eigen::Index dim, const std::vector<Halfspace>& halfspaces);

/// Euclidean volume in the ambient dimension; 0 when affine_dim < dim.
/// A nonempty polytope in ambient dimension 0 has volume 1.
Rat volume(const Polytope& p);

/// P intersected with { m_axis = value }, with that coordinate deleted.
Polytope slice(const Polytope& p, Eigen::Index axis, const Rat& value);

/// [min, max] of a coordinate over the vertices; requires nonempty p.
std::pair<Rat, Rat> projection_interval(const Polytope& p, Eigen::Index axis);

/// Every simplex of a triangulation of a full-dimensional polytope, as
/// indices into p.vertices().
std::vector<std::vector<std::size_t>> triangulate(const Polytope& p);

/// Vertex indices of each facet in cyclic order with outward orientation
/// (right-hand rule). Only for 3-dimensional full polytopes.
std::vector<std::vector<std::size_t>> oriented_facets_3d(const Polytope& p);

/// Vertex indices in counterclockwise order (2-dimensional full polytopes).
std::vector<std::size_t> ccw_polygon(const Polytope& p);

/// Same set test (vertex sets compared exactly).
bool same_set(const Polytope& a, const Polytope& b);

nlohmann::json to_json(const Polytope& p);
/// Reads the V-rep when vertices are present, otherwise the H-rep.
Polytope polytope_from_json(const nlohmann::json& j);

}  // namespace inob

#endif  // INOB_POLYTOPE_HPP
