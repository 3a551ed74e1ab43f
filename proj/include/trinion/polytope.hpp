#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trinion/su2.hpp"

namespace trinion {

inline constexpr double kDefaultClassifyTol = 1e-9;

using Vec3 = std::array<double, 3>;

/// Closed half-space {x : normal . x <= offset}.
struct HalfSpace {
    Vec3 normal;
    double offset;

    double residual(const Vec3& x) const {
        return normal[0] * x[0] + normal[1] * x[1] + normal[2] * x[2] - offset;
    }
};

struct RegionTag {
    enum class Kind { Exterior, Interior, Facet, Edge, Vertex };
    Kind kind;
    std::vector<int> active;  // facet indices with residual within tol of 0
    std::string vertex_name;  // set for Kind::Vertex

    bool is_boundary() const {
        return kind == Kind::Facet || kind == Kind::Edge || kind == Kind::Vertex;
    }
};

std::string to_string(RegionTag::Kind k);

/// Moment tetrahedron of the three-holed sphere:
///   t1 - t2 <= t3,  t2 - t1 <= t3,  t3 <= t1 + t2,  t1 + t2 + t3 <= 2 pi,
/// inscribed in [0, pi]^3 with vertices S, R, Q, P.
class Tetrahedron {
  public:
    Tetrahedron();

    static constexpr int kFacets = 4;
    static constexpr int kVertices = 4;

    const std::array<HalfSpace, kFacets>& facets() const { return facets_; }
    const std::array<Vec3, kVertices>& vertices() const { return vertices_; }
    static const char* vertex_name(int i);
    static std::string facet_name(int k);

    /// Signed slacks offset - normal.t, one per facet; all >= 0 inside.
    std::array<double, kFacets> facet_slacks(const AngleTriple& t) const;

    /// Euclidean distance to the nearest facet plane (equals the distance
    /// to the boundary for interior points).
    double min_facet_distance(const AngleTriple& t) const;

    bool contains(const AngleTriple& t, double tol = kDefaultClassifyTol) const;
    RegionTag classify(const AngleTriple& t, double tol = kDefaultClassifyTol) const;

    /// Point on facet k from barycentric weights over its vertex triangle,
    /// with the dependent coordinate recomputed from the facet equation so
    /// the equality holds exactly in floating point.
    AngleTriple facet_point(int k, double w0, double w1, double w2) const;

  private:
    std::array<HalfSpace, kFacets> facets_;
    std::array<Vec3, kVertices> vertices_;
};

const Tetrahedron& tetrahedron();

/// Componentwise t / pi, mapping the tetrahedron onto the normalized model
/// {|h1 - h2| <= h3 <= h1 + h2, h1 + h2 + h3 <= 2} in [0,1]^3.
Vec3 normalized(const AngleTriple& t);

/// 2 cos(pi h): trace coordinate of the normalized angle.
double character_coordinate(double h);

/// Kernel lattice Z^3 + Z*(1/2,1/2,1/2) of the angle flows.
class Lattice {
  public:
    Lattice();

    const std::array<Vec3, 3>& basis() const { return basis_; }
    const std::array<Vec3, 4>& generators() const { return generators_; }
    double covolume() const;

    bool contains(const Vec3& v, double tol = 1e-9) const;

    /// Representative in the fundamental domain [0, 1/2) x [0,1)^2:
    /// reduce mod Z^3, subtract (1/2,1/2,1/2) when the first coordinate
    /// is >= 1/2, reduce again. Depends only on v mod the lattice.
    Vec3 reduce(const Vec3& v) const;

  private:
    std::array<Vec3, 3> basis_;
    std::array<Vec3, 4> generators_;
};

/// Fraction of `samples` cube points lying in the tetrahedron. Sampling is
/// split into fixed-size chunks with per-chunk derived seeds, so the result
/// depends only on (seed, samples, chunk) no matter how chunks are
/// scheduled. The provider hook substitutes the point source (tests force
/// specific points); the default is uniform on [0, pi]^3.
double mc_volume_fraction(std::uint64_t samples, std::uint64_t seed,
                          const std::function<AngleTriple(std::mt19937_64&)>& provider = {},
                          std::uint64_t chunk = 1 << 16);

}  // namespace trinion
