#include "trinion/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

namespace trinion {

namespace {

constexpr double kPi = std::numbers::pi;

void require_domain(const AngleTriple& t, const char* who) {
    if (!t.in_domain()) {
        throw std::invalid_argument(std::string(who) + ": components must lie in [0, pi]");
    }
}

// hyperplane-equals-zero forms of the same four facets; checked against the
// inequality forms once at construction
constexpr std::array<std::array<double, 4>, 4> kPlaneForms = {{
    {{-1.0, 1.0, 1.0, 0.0}},   // t3 - t1 + t2 = 0
    {{1.0, -1.0, 1.0, 0.0}},   // t3 + t1 - t2 = 0
    {{-1.0, -1.0, 1.0, 0.0}},  // t3 - t1 - t2 = 0
    {{1.0, 1.0, 1.0, 2.0}},    // t1 + t2 + t3 = 2 pi  (constant in units of pi)
}};

// vertex triangles per facet, indices into {S, R, Q, P}
constexpr std::array<std::array<int, 3>, 4> kFacetTriangles = {{
    {{0, 1, 3}},  // S, R, P
    {{0, 1, 2}},  // S, R, Q
    {{0, 2, 3}},  // S, Q, P
    {{1, 2, 3}},  // R, Q, P
}};

}  // namespace

std::string to_string(RegionTag::Kind k) {
    switch (k) {
        case RegionTag::Kind::Exterior: return "exterior";
        case RegionTag::Kind::Interior: return "interior";
        case RegionTag::Kind::Facet: return "facet";
        case RegionTag::Kind::Edge: return "edge";
        case RegionTag::Kind::Vertex: return "vertex";
    }
    return "unknown";
}

Tetrahedron::Tetrahedron() {
    facets_ = {{
        {{1.0, -1.0, -1.0}, 0.0},      // t1 - t2 <= t3
        {{-1.0, 1.0, -1.0}, 0.0},      // t2 - t1 <= t3
        {{-1.0, -1.0, 1.0}, 0.0},      // t3 <= t1 + t2
        {{1.0, 1.0, 1.0}, 2.0 * kPi},  // t1 + t2 + t3 <= 2 pi
    }};
    vertices_ = {{
        {0.0, 0.0, 0.0},  // S
        {kPi, kPi, 0.0},  // R
        {0.0, kPi, kPi},  // Q
        {kPi, 0.0, kPi},  // P
    }};

    // the inequality list must agree with the hyperplane list: same plane,
    // interior on the <= side
    for (int k = 0; k < kFacets; ++k) {
        const auto& p = kPlaneForms[k];
        Vec3 plane_normal = {p[0], p[1], p[2]};
        double plane_offset = p[3] * kPi;
        // proportional with a positive factor, or exactly opposite one
        double scale = 0.0;
        for (int i = 0; i < 3; ++i) {
            if (facets_[k].normal[i] != 0.0) scale = plane_normal[i] / facets_[k].normal[i];
        }
        bool same = true;
        for (int i = 0; i < 3; ++i) {
            if (plane_normal[i] != scale * facets_[k].normal[i]) same = false;
        }
        if (plane_offset != scale * facets_[k].offset) same = false;
        if (!same || scale == 0.0) {
            throw std::logic_error("Tetrahedron: facet lists disagree");
        }
    }
    // every vertex satisfies all facets, with equality on exactly three
    for (const auto& v : vertices_) {
        int active = 0;
        for (const auto& f : facets_) {
            double r = f.residual(v);
            if (r > 1e-12) throw std::logic_error("Tetrahedron: vertex outside facet");
            if (std::abs(r) <= 1e-12) ++active;
        }
        if (active != 3) throw std::logic_error("Tetrahedron: vertex not on three facets");
    }
}

const char* Tetrahedron::vertex_name(int i) {
    static const char* names[4] = {"S", "R", "Q", "P"};
    return names[i];
}

std::string Tetrahedron::facet_name(int k) {
    static const char* names[4] = {
        "theta1 - theta2 <= theta3",
        "theta2 - theta1 <= theta3",
        "theta3 <= theta1 + theta2",
        "theta1 + theta2 + theta3 <= 2*pi",
    };
    if (k < 0 || k >= 4) throw std::out_of_range("facet_name: index");
    return names[k];
}

std::array<double, Tetrahedron::kFacets> Tetrahedron::facet_slacks(const AngleTriple& t) const {
    Vec3 x = {t.t1, t.t2, t.t3};
    std::array<double, kFacets> s{};
    for (int k = 0; k < kFacets; ++k) s[k] = -facets_[k].residual(x);
    return s;
}

double Tetrahedron::min_facet_distance(const AngleTriple& t) const {
    Vec3 x = {t.t1, t.t2, t.t3};
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : facets_) {
        double n = std::sqrt(f.normal[0] * f.normal[0] + f.normal[1] * f.normal[1] +
                             f.normal[2] * f.normal[2]);
        best = std::min(best, std::abs(f.residual(x)) / n);
    }
    return best;
}

bool Tetrahedron::contains(const AngleTriple& t, double tol) const {
    require_domain(t, "contains");
    Vec3 x = {t.t1, t.t2, t.t3};
    for (const auto& f : facets_) {
        if (f.residual(x) > tol) return false;
    }
    return true;
}

RegionTag Tetrahedron::classify(const AngleTriple& t, double tol) const {
    require_domain(t, "classify");
    Vec3 x = {t.t1, t.t2, t.t3};
    RegionTag tag;
    for (int k = 0; k < kFacets; ++k) {
        double r = facets_[k].residual(x);
        if (r > tol) {
            tag.kind = RegionTag::Kind::Exterior;
            tag.active.clear();
            return tag;
        }
        if (std::abs(r) <= tol) tag.active.push_back(k);
    }
    switch (tag.active.size()) {
        case 0: tag.kind = RegionTag::Kind::Interior; break;
        case 1: tag.kind = RegionTag::Kind::Facet; break;
        case 2: tag.kind = RegionTag::Kind::Edge; break;
        default: {
            tag.kind = RegionTag::Kind::Vertex;
            for (int v = 0; v < kVertices; ++v) {
                int on = 0;
                for (int k : tag.active) {
                    if (std::abs(facets_[k].residual(vertices_[v])) <= 1e-12) ++on;
                }
                if (on == static_cast<int>(tag.active.size())) {
                    tag.vertex_name = vertex_name(v);
                    break;
                }
            }
            break;
        }
    }
    return tag;
}

AngleTriple Tetrahedron::facet_point(int k, double w0, double w1, double w2) const {
    if (k < 0 || k >= kFacets) throw std::out_of_range("facet_point: facet index");
    double wsum = w0 + w1 + w2;
    if (!(wsum > 0.0)) throw std::invalid_argument("facet_point: weights must have positive sum");
    const auto& tri = kFacetTriangles[k];
    double w[3] = {w0 / wsum, w1 / wsum, w2 / wsum};
    double t1 = 0.0, t2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        t1 += w[i] * vertices_[tri[i]][0];
        t2 += w[i] * vertices_[tri[i]][1];
    }
    // t3 from the facet equation, evaluated on the rounded (t1, t2), so the
    // equality is exact in double arithmetic
    double t3 = 0.0;
    switch (k) {
        case 0: t3 = t1 - t2; break;
        case 1: t3 = t2 - t1; break;
        case 2: t3 = t1 + t2; break;
        case 3: t3 = 2.0 * kPi - (t1 + t2); break;
    }
    t3 = std::clamp(t3, 0.0, kPi);
    return {t1, t2, t3};
}

const Tetrahedron& tetrahedron() {
    static const Tetrahedron t;
    return t;
}

Vec3 normalized(const AngleTriple& t) {
    require_domain(t, "normalized");
    return {t.t1 / kPi, t.t2 / kPi, t.t3 / kPi};
}

double character_coordinate(double h) {
    if (!(h >= 0.0 && h <= 1.0)) {
        throw std::invalid_argument("character_coordinate: h must lie in [0, 1]");
    }
    return 2.0 * std::cos(kPi * h);
}

Lattice::Lattice() {
    basis_ = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.5, 0.5, 0.5}}};
    generators_ = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.5, 0.5, 0.5}}};
}

double Lattice::covolume() const {
    const auto& b = basis_;
    double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                 b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                 b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    return std::abs(det);
}

namespace {

bool near_integer(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

}  // namespace

bool Lattice::contains(const Vec3& v, double tol) const {
    for (double x : v) {
        if (!std::isfinite(x)) throw std::invalid_argument("Lattice::contains: non-finite input");
    }
    bool integral = true, shifted = true;
    for (int i = 0; i < 3; ++i) {
        if (!near_integer(v[i], tol)) integral = false;
        if (!near_integer(v[i] - 0.5, tol)) shifted = false;
    }
    return integral || shifted;
}

Vec3 Lattice::reduce(const Vec3& v) const {
    auto frac = [](double x) {
        double f = x - std::floor(x);
        return f >= 1.0 ? 0.0 : f;  // floor rounding can leave f == 1 for tiny negatives
    };
    Vec3 r = {frac(v[0]), frac(v[1]), frac(v[2])};
    if (r[0] >= 0.5) {
        r = {frac(r[0] - 0.5), frac(r[1] - 0.5), frac(r[2] - 0.5)};
    }
    return r;
}

double mc_volume_fraction(std::uint64_t samples, std::uint64_t seed,
                          const std::function<AngleTriple(std::mt19937_64&)>& provider,
                          std::uint64_t chunk) {
    if (samples == 0) throw std::invalid_argument("mc_volume_fraction: need at least one sample");
    if (chunk == 0) throw std::invalid_argument("mc_volume_fraction: chunk must be positive");
    const Tetrahedron& tet = tetrahedron();

    auto draw = provider ? provider : [](std::mt19937_64& rng) {
        return AngleTriple{kPi * detail::uniform_unit(rng), kPi * detail::uniform_unit(rng),
                           kPi * detail::uniform_unit(rng)};
    };

    auto run_chunk = [&](std::uint64_t index, std::uint64_t count) {
        std::mt19937_64 rng(detail::derive_seed(seed, index));
        std::uint64_t inside = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
            if (tet.contains(draw(rng), 0.0)) ++inside;
        }
        return inside;
    };

    std::uint64_t nchunks = (samples + chunk - 1) / chunk;
    std::vector<std::future<std::uint64_t>> futures;
    futures.reserve(nchunks);
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t count = std::min(chunk, samples - c * chunk);
        futures.push_back(std::async(std::launch::async, run_chunk, c, count));
    }
    std::uint64_t inside = 0;
    for (auto& f : futures) inside += f.get();
    return static_cast<double>(inside) / static_cast<double>(samples);
}

}  // namespace trinion
