#include "sfk/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace sfk {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Intersection of the facet lines x.nu_i = lambda_i and x.nu_j = lambda_j.
Vec2 line_intersection(const Facet& fi, const Facet& fj) {
    const Mat2 m = Mat2::from_rows(fi.normal(), fj.normal());
    return solve2x2(m, {fi.lambda, fj.lambda});
}

}  // namespace

struct PolytopeBuilder {
    static DelzantPolytope build(std::string name, std::vector<Facet> facets,
                                 std::vector<Vec2> verts, Vec2 interior,
                                 double scale) {
        DelzantPolytope p;
        p.name_ = std::move(name);
        p.facets_ = std::move(facets);
        p.vertices_ = std::move(verts);
        p.interior_point_ = interior;
        p.scale_ = scale;
        return p;
    }
};

std::vector<double> DelzantPolytope::facet_values(const Vec2& x) const {
    std::vector<double> l(facets_.size());
    for (std::size_t i = 0; i < facets_.size(); ++i)
        l[i] = x.dot(facets_[i].normal()) - facets_[i].lambda;
    return l;
}

double DelzantPolytope::min_facet_value(const Vec2& x) const {
    double m = std::numeric_limits<double>::infinity();
    for (const Facet& f : facets_) m = std::min(m, x.dot(f.normal()) - f.lambda);
    return m;
}

ValidationResult validate(const std::vector<Facet>& raw, const std::string& name) {
    ValidationResult res;
    auto fail = [&](ErrorKind kind, int index, std::string msg) {
        res.violations.push_back({kind, index, std::move(msg)});
    };

    const int d = int(raw.size());
    if (d < 2) {
        fail(ErrorKind::BadInput, -1, "at least two facets required, got " + std::to_string(d));
        return res;
    }

    for (int i = 0; i < d; ++i) {
        const std::int64_t g = gcd64(raw[i].nx, raw[i].ny);
        if (g != 1) {
            std::ostringstream os;
            os << "normal " << (i + 1) << " = (" << raw[i].nx << "," << raw[i].ny
               << ") is not primitive";
            fail(ErrorKind::NonPrimitiveNormal, i, os.str());
        }
    }

    for (int i = 0; i + 1 < d; ++i) {
        const double dd = det(raw[i].normal(), raw[i + 1].normal());
        if (dd != -1.0) {
            std::ostringstream os;
            os << "det(nu_" << (i + 1) << ", nu_" << (i + 2) << ") = " << dd << ", expected -1";
            fail(ErrorKind::DelzantViolation, i, os.str());
        }
    }

    if (det(raw.front().normal(), raw.back().normal()) == 0.0)
        fail(ErrorKind::ParallelUnboundedEdges, -1,
             "normals of the two unbounded facets are parallel");

    if (!res.violations.empty()) return res;

    // Consecutive facet lines meet in vertices; every vertex must lie on the
    // boundary of the region, i.e. satisfy all other facet inequalities
    // strictly. This also rules out redundant facets and empty regions.
    std::vector<Vec2> verts(d - 1);
    double scale = 1.0;
    for (int i = 0; i + 1 < d; ++i) {
        verts[i] = line_intersection(raw[i], raw[i + 1]);
        scale = std::max({scale, std::abs(verts[i].x), std::abs(verts[i].y)});
    }
    const double tol = 1e-9 * scale;
    for (int i = 0; i + 1 < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (j == i || j == i + 1) continue;
            const double lj = verts[i].dot(raw[j].normal()) - raw[j].lambda;
            if (lj <= tol) {
                std::ostringstream os;
                os << "vertex " << (i + 1) << " at (" << verts[i].x << "," << verts[i].y
                   << ") violates facet " << (j + 1) << " (l = " << lj
                   << "); consecutive facets must meet on the boundary";
                fail(lj <= -tol ? ErrorKind::EmptyInterior : ErrorKind::FacetsNotAdjacent,
                     i, os.str());
            }
        }
    }
    if (!res.violations.empty()) return res;

    // Interior point: step inward from vertex 1 along the mean of the unit
    // normals of its two facets.
    const Vec2 n1 = raw[0].normal() / raw[0].normal().norm();
    const Vec2 n2 = raw[1].normal() / raw[1].normal().norm();
    Vec2 w = n1 + n2;
    w = w / w.norm();
    Vec2 interior;
    bool found = false;
    for (double t : {0.5 * scale, 0.1 * scale, 0.01 * scale, scale, 5.0 * scale}) {
        const Vec2 cand = verts[0] + t * w;
        double m = std::numeric_limits<double>::infinity();
        for (const Facet& f : raw) m = std::min(m, cand.dot(f.normal()) - f.lambda);
        if (m > tol) {
            interior = cand;
            found = true;
            break;
        }
    }
    if (!found) {
        fail(ErrorKind::EmptyInterior, -1, "could not locate an interior point");
        return res;
    }

    res.polytope = PolytopeBuilder::build(name, raw, std::move(verts), interior, scale);
    return res;
}

DelzantPolytope validate_or_throw(const std::vector<Facet>& raw, const std::string& name) {
    ValidationResult r = validate(raw, name);
    if (!r.ok()) throw Error(r.violations.front().kind, r.violations.front().message);
    return *std::move(r.polytope);
}

AnchorSequence anchor_spacings(const DelzantPolytope& P) {
    AnchorSequence s;
    const auto& v = P.vertices();
    s.a.resize(v.size());
    if (v.empty()) return s;
    s.a[0] = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const double edge_len = (v[i + 1] - v[i]).norm();
        // Facet i+2 (1-based) carries the bounded edge between vertices i+1
        // and i+2; the anchor gap is the lattice length of that edge.
        const double nn = P.normal(int(i) + 1).norm();
        s.a[i + 1] = s.a[i] + edge_len / nn;
    }
    return s;
}

std::vector<double> guillemin_facet_values(const DelzantPolytope& P, const Vec2& x) {
    return P.facet_values(x);
}

DelzantPolytope standardize(const DelzantPolytope& P) {
    // Integer matrix S with S nu_1 = (0,1), S nu_2 = (1,0): columns of
    // [nu_1 nu_2] have determinant -1, so S = [[0,1],[1,0]] [nu_1 nu_2]^{-1}
    // is integral with det 1. Normals map by S, points by A = S^{-t},
    // offsets by lambda' = lambda + b.nu' with b = -A v_1.
    const Vec2 n1 = P.normal(0), n2 = P.normal(1);
    const Mat2 cols(n1.x, n2.x, n1.y, n2.y);  // columns nu_1, nu_2
    const Mat2 swap(0, 1, 1, 0);
    const Mat2 S = swap * cols.inverse();
    const Mat2 A = S.transpose().inverse();
    const Vec2 b = -(A * P.vertices()[0]);

    std::vector<Facet> facets(P.facets().size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const Vec2 np = S * P.normal(int(i));
        facets[i].nx = std::llround(np.x);
        facets[i].ny = std::llround(np.y);
        facets[i].lambda = P.lambda(int(i)) + b.dot(np);
    }
    return validate_or_throw(facets, P.name() + "_std");
}

DelzantPolytope load_polytope_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open polytope file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::BadInput, "malformed JSON in " + path + ": " + e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::BadInput, "polytope file must hold a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k != "name" && k != "normals" && k != "lambdas")
            throw Error(ErrorKind::BadInput, "unknown key \"" + k + "\" in polytope file");
    }
    if (!j.contains("normals") || !j.contains("lambdas"))
        throw Error(ErrorKind::BadInput, "polytope file requires \"normals\" and \"lambdas\"");

    const auto& normals = j["normals"];
    const auto& lambdas = j["lambdas"];
    if (!normals.is_array() || !lambdas.is_array() || normals.size() != lambdas.size())
        throw Error(ErrorKind::BadInput, "\"normals\" and \"lambdas\" must be arrays of equal length");

    std::vector<Facet> facets(normals.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const auto& n = normals[i];
        if (!n.is_array() || n.size() != 2 || !n[0].is_number_integer() || !n[1].is_number_integer())
            throw Error(ErrorKind::BadInput, "normals must be integer pairs");
        facets[i].nx = n[0].get<std::int64_t>();
        facets[i].ny = n[1].get<std::int64_t>();
        if (!lambdas[i].is_number())
            throw Error(ErrorKind::BadInput, "lambdas must be numbers");
        facets[i].lambda = lambdas[i].get<double>();
    }
    const std::string name = j.value("name", std::string{});
    return validate_or_throw(facets, name);
}

std::string polytope_to_json(const DelzantPolytope& P) {
    nlohmann::json j;
    j["name"] = P.name();
    auto& normals = j["normals"];
    auto& lambdas = j["lambdas"];
    for (const Facet& f : P.facets()) {
        normals.push_back({f.nx, f.ny});
        lambdas.push_back(f.lambda);
    }
    return j.dump(2);
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonPrimitiveNormal: return "NonPrimitiveNormal";
        case ErrorKind::DelzantViolation: return "DelzantViolation";
        case ErrorKind::ParallelUnboundedEdges: return "ParallelUnboundedEdges";
        case ErrorKind::EmptyInterior: return "EmptyInterior";
        case ErrorKind::FacetsNotAdjacent: return "FacetsNotAdjacent";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::InadmissibleParameter: return "InadmissibleParameter";
        case ErrorKind::BoundaryEvaluation: return "BoundaryEvaluation";
        case ErrorKind::DegenerateIntersection: return "DegenerateIntersection";
        case ErrorKind::DegenerateJacobian: return "DegenerateJacobian";
        case ErrorKind::QuadratureFailure: return "QuadratureFailure";
        case ErrorKind::PathLeavesHalfPlane: return "PathLeavesHalfPlane";
        case ErrorKind::StencilLeavesDomain: return "StencilLeavesDomain";
        case ErrorKind::NewtonDivergence: return "NewtonDivergence";
        case ErrorKind::NumericalUnderflow: return "NumericalUnderflow";
        case ErrorKind::SingularHessian: return "SingularHessian";
        case ErrorKind::AmbiguousClassification: return "AmbiguousClassification";
    }
    return "UnknownError";
}

bool is_input_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonPrimitiveNormal:
        case ErrorKind::DelzantViolation:
        case ErrorKind::ParallelUnboundedEdges:
        case ErrorKind::EmptyInterior:
        case ErrorKind::FacetsNotAdjacent:
        case ErrorKind::BadInput:
        case ErrorKind::InadmissibleParameter:
        case ErrorKind::BoundaryEvaluation:
            return true;
        default:
            return false;
    }
}

}  // namespace sfk
