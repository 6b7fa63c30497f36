#include "inob/polytope.hpp"

#include "inob/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace inob {

Halfspace::Halfspace(QVector n, Rat b) : normal(std::move(n)), offset(std::move(b)) {
    bool nonzero = false;
    for (Eigen::Index i = 0; i < normal.size(); ++i) nonzero = nonzero || normal[i] != 0;
    if (!nonzero) throw std::invalid_argument("halfspace normal must be nonzero");
}

Rat Halfspace::slack(const QVector& point) const {
    if (point.size() != normal.size()) throw std::invalid_argument("halfspace: dimension mismatch");
    return normal.dot(point) - offset;
}

bool Halfspace::contains(const QVector& point) const { return slack(point) >= 0; }

Halfspace normalized(const Halfspace& h) {
    Rat lead = 0;
    for (Eigen::Index i = 0; i < h.normal.size() && lead == 0; ++i) lead = h.normal[i];
    if (lead < 0) lead = -lead;
    return Halfspace(h.normal / lead, h.offset / lead);
}

bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.offset == b.offset && equal(a.normal, b.normal);
}

bool operator<(const Halfspace& a, const Halfspace& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
}

namespace {

using Index = Eigen::Index;
using IndexSet = std::vector<std::size_t>;

// Calls f(subset) for every size-k subset of {0..n-1}, in lexicographic order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    IndexSet idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

QMatrix difference_rows(const std::vector<QVector>& pts, const IndexSet& subset, Index dim) {
    QMatrix d(subset.empty() ? 0 : static_cast<Index>(subset.size()) - 1, dim);
    for (std::size_t i = 1; i < subset.size(); ++i) {
        d.row(static_cast<Index>(i) - 1) = (pts[subset[i]] - pts[subset[0]]).transpose();
    }
    return d;
}

Index affine_rank(const std::vector<QVector>& pts, const IndexSet& subset, Index dim) {
    if (subset.empty()) return -1;
    return rank(difference_rows(pts, subset, dim));
}

std::vector<QVector> sorted_unique(const std::vector<QVector>& points) {
    std::set<QVector, LexLess> s(points.begin(), points.end());
    return {s.begin(), s.end()};
}

IndexSet all_indices(std::size_t n) {
    IndexSet out(n);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

// Equalities cutting out the affine hull of pts, as opposite halfspace pairs.
std::vector<Halfspace> affine_hull_equalities(const std::vector<QVector>& pts, Index dim) {
    std::vector<Halfspace> out;
    if (pts.empty()) return out;
    const QMatrix d = difference_rows(pts, all_indices(pts.size()), dim);
    const QMatrix ns = null_space(d);
    for (Index c = 0; c < ns.cols(); ++c) {
        const QVector n = ns.col(c);
        const Rat b = n.dot(pts[0]);
        out.push_back(normalized(Halfspace(n, b)));
        out.push_back(normalized(Halfspace(-n, -b)));
    }
    return out;
}

// Keeps candidates that define facets of conv(vertices); one per facet.
std::vector<Halfspace> select_facets(const std::vector<QVector>& vertices, Index dim, Index affine_dim,
                                     const std::vector<Halfspace>& candidates) {
    std::map<IndexSet, Halfspace> by_support;
    if (affine_dim < 1) return {};
    for (const Halfspace& h : candidates) {
        IndexSet tight;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (h.slack(vertices[i]) == 0) tight.push_back(i);
        }
        if (tight.size() == vertices.size()) continue;
        if (affine_rank(vertices, tight, dim) != affine_dim - 1) continue;
        const Halfspace hn = normalized(h);
        auto it = by_support.find(tight);
        if (it == by_support.end()) {
            by_support.emplace(tight, hn);
        } else if (hn < it->second) {
            it->second = hn;
        }
    }
    std::vector<Halfspace> out;
    for (auto& [support, h] : by_support) out.push_back(h);
    std::sort(out.begin(), out.end());
    return out;
}

// Facet inequalities of a full-dimensional point set in R^k.
std::vector<Halfspace> full_dimensional_facets(const std::vector<QVector>& pts, Index k) {
    std::set<Halfspace> found;
    for_each_combination(pts.size(), static_cast<std::size_t>(k), [&](const IndexSet& subset) {
        const QMatrix ns = null_space(difference_rows(pts, subset, k));
        if (ns.cols() != 1) return;
        QVector a = ns.col(0);
        Rat b = a.dot(pts[subset[0]]);
        bool pos = false;
        bool neg = false;
        for (const QVector& p : pts) {
            const Rat s = a.dot(p) - b;
            if (s > 0) pos = true;
            if (s < 0) neg = true;
            if (pos && neg) return;
        }
        if (neg) {
            a = -a;
            b = -b;
        }
        found.insert(normalized(Halfspace(a, b)));
    });
    return {found.begin(), found.end()};
}

// Vertex enumeration of { A x >= b }: every feasible point where dim
// linearly independent constraints are tight.
std::vector<QVector> enumerate_vertices(Index dim, const std::vector<Halfspace>& hs) {
    std::set<QVector, LexLess> out;
    for_each_combination(hs.size(), static_cast<std::size_t>(dim), [&](const IndexSet& subset) {
        QMatrix a(dim, dim);
        QVector b(dim);
        for (Index r = 0; r < dim; ++r) {
            a.row(r) = hs[subset[static_cast<std::size_t>(r)]].normal.transpose();
            b[r] = hs[subset[static_cast<std::size_t>(r)]].offset;
        }
        const auto sol = solve_linear(a, b);
        if (!sol.consistent || sol.rank < dim) return;
        for (const Halfspace& h : hs) {
            if (!h.contains(sol.solution)) return;
        }
        out.insert(sol.solution);
    });
    return {out.begin(), out.end()};
}

// True when { y : A y >= 0 } (A of full column rank) has a nonzero element.
bool has_recession_direction(Index dim, const std::vector<Halfspace>& hs) {
    bool found = false;
    for_each_combination(hs.size(), static_cast<std::size_t>(dim - 1), [&](const IndexSet& subset) {
        if (found) return;
        QMatrix a(dim - 1, dim);
        for (Index r = 0; r < dim - 1; ++r) a.row(r) = hs[subset[static_cast<std::size_t>(r)]].normal.transpose();
        const QMatrix ns = null_space(a);
        if (ns.cols() != 1) return;
        const QVector y = ns.col(0);
        bool pos_ok = true;
        bool neg_ok = true;
        for (const Halfspace& h : hs) {
            const Rat s = h.normal.dot(y);
            if (s < 0) pos_ok = false;
            if (s > 0) neg_ok = false;
        }
        found = pos_ok || neg_ok;
    });
    return found;
}

Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace

Polytope::Polytope(Index dim, Index affine_dim, std::vector<QVector> vertices,
                   std::vector<Halfspace> facets, std::vector<Halfspace> equalities)
    : dim_(dim), affine_dim_(affine_dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
    halfspaces_ = facets_;
    halfspaces_.insert(halfspaces_.end(), equalities.begin(), equalities.end());
}

Polytope Polytope::empty(Index dim) {
    std::vector<Halfspace> eq;
    if (dim >= 1) {
        QVector e = zero_vector(dim);
        e[0] = 1;
        eq.emplace_back(e, Rat(1));
        eq.emplace_back(-e, Rat(0));
    }
    return Polytope(dim, -1, {}, {}, std::move(eq));
}

bool Polytope::contains(const QVector& point) const {
    if (point.size() != dim_) throw std::invalid_argument("contains: dimension mismatch");
    if (is_empty()) return false;
    return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                       [&](const Halfspace& h) { return h.contains(point); });
}

Polytope hull(const std::vector<QVector>& points) {
    if (points.empty()) throw std::invalid_argument("hull: empty point list");
    const Index dim = points.front().size();
    for (const QVector& p : points) {
        if (p.size() != dim) throw std::invalid_argument("hull: points have mismatched dimensions");
    }
    const std::vector<QVector> pts = sorted_unique(points);
    const auto ech = reduced_row_echelon(difference_rows(pts, all_indices(pts.size()), dim));
    const Index k = ech.rank();
    std::vector<Halfspace> equalities = affine_hull_equalities(pts, dim);
    if (k == 0) return Polytope(dim, 0, pts, {}, std::move(equalities));

    // Coordinates at the pivot columns embed the affine hull injectively.
    std::vector<QVector> projected;
    for (const QVector& p : pts) {
        QVector q(k);
        for (Index i = 0; i < k; ++i) q[i] = p[ech.pivots[static_cast<std::size_t>(i)]];
        projected.push_back(q);
    }
    const std::vector<Halfspace> low = full_dimensional_facets(projected, k);

    std::vector<QVector> vertices;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<const Halfspace*> tight;
        for (const Halfspace& h : low) {
            if (h.slack(projected[i]) == 0) tight.push_back(&h);
        }
        QMatrix normals(static_cast<Index>(tight.size()), k);
        for (std::size_t r = 0; r < tight.size(); ++r) normals.row(static_cast<Index>(r)) = tight[r]->normal.transpose();
        if (rank(normals) == k) vertices.push_back(pts[i]);
    }

    std::vector<Halfspace> lifted;
    for (const Halfspace& h : low) {
        QVector n = zero_vector(dim);
        for (Index i = 0; i < k; ++i) n[ech.pivots[static_cast<std::size_t>(i)]] = h.normal[i];
        lifted.emplace_back(n, h.offset);
    }
    std::vector<Halfspace> facets = select_facets(vertices, dim, k, lifted);
    return Polytope(dim, k, std::move(vertices), std::move(facets), std::move(equalities));
}

Polytope intersect_halfspaces(Index dim, const std::vector<Halfspace>& halfspaces) {
    if (dim < 1) throw std::invalid_argument("intersect_halfspaces: dim must be >= 1");
    for (const Halfspace& h : halfspaces) {
        if (h.normal.size() != dim) throw std::invalid_argument("intersect_halfspaces: dimension mismatch");
    }
    if (halfspaces.empty()) throw UnboundedError("intersect_halfspaces: no constraints, region is unbounded");

    QMatrix normals(static_cast<Index>(halfspaces.size()), dim);
    for (std::size_t r = 0; r < halfspaces.size(); ++r) normals.row(static_cast<Index>(r)) = halfspaces[r].normal.transpose();
    const auto ech = reduced_row_echelon(normals);
    if (ech.rank() < dim) {
        // A lineality direction exists: the region is empty or unbounded.
        // Restricting to the pivot coordinates keeps a point iff one exists.
        const Index r = ech.rank();
        std::vector<Halfspace> restricted;
        std::vector<QVector> sub;
        bool infeasible_constant = false;
        for (const Halfspace& h : halfspaces) {
            QVector n(r);
            bool nonzero = false;
            for (Index i = 0; i < r; ++i) {
                n[i] = h.normal[ech.pivots[static_cast<std::size_t>(i)]];
                nonzero = nonzero || n[i] != 0;
            }
            if (nonzero) {
                restricted.emplace_back(n, h.offset);
            } else if (h.offset > 0) {
                infeasible_constant = true;
            }
        }
        const bool nonempty =
            !infeasible_constant && (r == 0 || !enumerate_vertices(r, restricted).empty());
        if (nonempty) throw UnboundedError("intersect_halfspaces: region is unbounded");
        return Polytope::empty(dim);
    }

    std::vector<QVector> vertices = enumerate_vertices(dim, halfspaces);
    if (vertices.empty()) return Polytope::empty(dim);
    if (has_recession_direction(dim, halfspaces)) {
        throw UnboundedError("intersect_halfspaces: region is unbounded");
    }
    const Index k = affine_rank(vertices, all_indices(vertices.size()), dim);
    std::vector<Halfspace> facets = select_facets(vertices, dim, k, halfspaces);
    return Polytope(dim, k, std::move(vertices), std::move(facets), affine_hull_equalities(vertices, dim));
}

std::vector<std::vector<std::size_t>> triangulate(const Polytope& p) {
    if (p.is_empty() || p.affine_dim() != p.dim()) {
        throw std::invalid_argument("triangulate: polytope is not full-dimensional");
    }
    const auto& verts = p.vertices();
    const Index dim = p.dim();
    std::vector<IndexSet> supports;
    for (const Halfspace& h : p.facets()) {
        IndexSet tight;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (h.slack(verts[i]) == 0) tight.push_back(i);
        }
        supports.push_back(std::move(tight));
    }

    std::vector<IndexSet> simplices;
    // Pulling triangulation: cone from the first vertex of each face over
    // the subfaces that miss it.
    auto recurse = [&](auto&& self, const IndexSet& face, Index face_dim, IndexSet& apexes) -> void {
        if (face_dim == 0) {
            IndexSet s = apexes;
            s.push_back(face.front());
            simplices.push_back(std::move(s));
            return;
        }
        const std::size_t apex = face.front();
        std::set<IndexSet> subfaces;
        for (const IndexSet& sup : supports) {
            IndexSet g;
            std::set_intersection(face.begin(), face.end(), sup.begin(), sup.end(), std::back_inserter(g));
            if (g.size() == face.size() || g.empty()) continue;
            if (std::binary_search(g.begin(), g.end(), apex)) continue;
            if (affine_rank(verts, g, dim) != face_dim - 1) continue;
            subfaces.insert(std::move(g));
        }
        apexes.push_back(apex);
        for (const IndexSet& g : subfaces) self(self, g, face_dim - 1, apexes);
        apexes.pop_back();
    };
    IndexSet apexes;
    recurse(recurse, all_indices(verts.size()), dim, apexes);
    return simplices;
}

Rat volume(const Polytope& p) {
    if (p.is_empty()) return 0;
    if (p.dim() == 0) return 1;
    if (p.affine_dim() < p.dim()) return 0;
    const auto& verts = p.vertices();
    const Index dim = p.dim();
    Rat total = 0;
    for (const auto& simplex : triangulate(p)) {
        QMatrix m(dim, dim);
        for (Index i = 0; i < dim; ++i) {
            m.row(i) = (verts[simplex[static_cast<std::size_t>(i) + 1]] - verts[simplex[0]]).transpose();
        }
        total += abs(determinant(m));
    }
    return total / factorial(static_cast<int>(dim));
}

Polytope slice(const Polytope& p, Index axis, const Rat& value) {
    if (axis < 0 || axis >= p.dim()) throw std::invalid_argument("slice: axis out of range");
    const Index out_dim = p.dim() - 1;
    if (p.is_empty()) return Polytope::empty(out_dim);
    auto drop = [&](const QVector& v) {
        QVector out(out_dim);
        for (Index i = 0, j = 0; i < v.size(); ++i) {
            if (i != axis) out[j++] = v[i];
        }
        return out;
    };
    if (out_dim == 0) {
        QVector point = make_vector({value});
        if (!p.contains(point)) return Polytope::empty(0);
        return hull({QVector(0)});
    }
    std::vector<Halfspace> reduced;
    for (const Halfspace& h : p.halfspaces()) {
        QVector n = drop(h.normal);
        const Rat b = h.offset - h.normal[axis] * value;
        bool nonzero = false;
        for (Index i = 0; i < n.size(); ++i) nonzero = nonzero || n[i] != 0;
        if (nonzero) {
            reduced.emplace_back(std::move(n), b);
        } else if (b > 0) {
            return Polytope::empty(out_dim);
        }
    }
    return intersect_halfspaces(out_dim, reduced);
}

std::pair<Rat, Rat> projection_interval(const Polytope& p, Index axis) {
    if (p.is_empty()) throw std::invalid_argument("projection_interval: empty polytope");
    Rat lo = p.vertices().front()[axis];
    Rat hi = lo;
    for (const QVector& v : p.vertices()) {
        lo = std::min(lo, v[axis]);
        hi = std::max(hi, v[axis]);
    }
    return {lo, hi};
}

namespace {

// Exact angular order of 2-D vectors starting at the positive x axis.
bool angle_less(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
    auto half = [](const Rat& x, const Rat& y) { return (y < 0 || (y == 0 && x < 0)) ? 1 : 0; };
    const int ha = half(ax, ay);
    const int hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
}

QVector centroid(const std::vector<QVector>& verts, const IndexSet& idx) {
    QVector c = zero_vector(verts[idx.front()].size());
    for (std::size_t i : idx) c += verts[i];
    return c / Rat(static_cast<long>(idx.size()));
}

}  // namespace

std::vector<std::vector<std::size_t>> oriented_facets_3d(const Polytope& p) {
    if (p.dim() != 3 || p.affine_dim() != 3) {
        throw std::invalid_argument("oriented_facets_3d: needs a full 3-dimensional polytope");
    }
    const auto& verts = p.vertices();
    std::vector<IndexSet> out;
    for (const Halfspace& h : p.facets()) {
        IndexSet tight;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (h.slack(verts[i]) == 0) tight.push_back(i);
        }
        const QVector c = centroid(verts, tight);
        const Eigen::Matrix<Rat, 3, 1> a = h.normal;
        const Eigen::Matrix<Rat, 3, 1> u = verts[tight.front()] - c;
        const Eigen::Matrix<Rat, 3, 1> w = a.cross(u);
        // (u, w, a) is right-handed; increasing angle is counterclockwise seen
        // from the inward side, so reverse for outward orientation.
        std::sort(tight.begin(), tight.end(), [&](std::size_t i, std::size_t j) {
            const QVector di = verts[i] - c;
            const QVector dj = verts[j] - c;
            return angle_less(di.dot(u), di.dot(w), dj.dot(u), dj.dot(w));
        });
        std::reverse(tight.begin(), tight.end());
        out.push_back(std::move(tight));
    }
    return out;
}

std::vector<std::size_t> ccw_polygon(const Polytope& p) {
    if (p.dim() != 2 || p.affine_dim() != 2) {
        throw std::invalid_argument("ccw_polygon: needs a full 2-dimensional polytope");
    }
    const auto& verts = p.vertices();
    IndexSet idx = all_indices(verts.size());
    const QVector c = centroid(verts, idx);
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return angle_less(verts[i][0] - c[0], verts[i][1] - c[1], verts[j][0] - c[0], verts[j][1] - c[1]);
    });
    return idx;
}

bool same_set(const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim() || a.vertices().size() != b.vertices().size()) return false;
    for (std::size_t i = 0; i < a.vertices().size(); ++i) {
        if (!equal(a.vertices()[i], b.vertices()[i])) return false;
    }
    return true;
}

namespace {

nlohmann::json vector_json(const QVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
    return out;
}

QVector vector_from_json(const nlohmann::json& j) {
    std::vector<Rat> coords;
    for (const auto& c : j) coords.push_back(parse_rational(c.get<std::string>()));
    return make_vector(coords);
}

}  // namespace

nlohmann::json to_json(const Polytope& p) {
    nlohmann::json out;
    out["dim"] = p.dim();
    out["vertices"] = nlohmann::json::array();
    for (const QVector& v : p.vertices()) out["vertices"].push_back(vector_json(v));
    out["halfspaces"] = nlohmann::json::array();
    for (const Halfspace& h : p.halfspaces()) {
        out["halfspaces"].push_back({{"normal", vector_json(h.normal)}, {"offset", to_string(h.offset)}});
    }
    return out;
}

Polytope polytope_from_json(const nlohmann::json& j) {
    const Index dim = j.at("dim").get<Index>();
    std::vector<QVector> vertices;
    for (const auto& v : j.value("vertices", nlohmann::json::array())) vertices.push_back(vector_from_json(v));
    if (!vertices.empty()) return hull(vertices);
    std::vector<Halfspace> hs;
    for (const auto& h : j.value("halfspaces", nlohmann::json::array())) {
        hs.emplace_back(vector_from_json(h.at("normal")), parse_rational(h.at("offset").get<std::string>()));
    }
    if (hs.empty()) return Polytope::empty(dim);
    return intersect_halfspaces(dim, hs);
}

}  // namespace inob
