#include "trinion/su2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trinion {

namespace {
constexpr double kPi = std::numbers::pi;
}

double frobenius_distance(const Matrix2c& x, const Matrix2c& y) {
    double s = std::norm(x.m00 - y.m00) + std::norm(x.m01 - y.m01) + std::norm(x.m10 - y.m10) +
               std::norm(x.m11 - y.m11);
    return std::sqrt(s);
}

Matrix2c identity_matrix() { return {1.0, 0.0, 0.0, 1.0}; }

Su2Element::Su2Element(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    double n2 = a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_;
    if (!std::isfinite(n2) || n2 <= 0.0) {
        throw std::invalid_argument("Su2Element: coordinates must be finite and not all zero");
    }
    double n = std::sqrt(n2);
    a_ /= n;
    b_ /= n;
    c_ /= n;
    d_ /= n;
}

const Su2Element& Su2Element::identity() {
    static const Su2Element id(1.0, 0.0, 0.0, 0.0);
    return id;
}

double Su2Element::axis_norm() const { return std::sqrt(b_ * b_ + c_ * c_ + d_ * d_); }

Matrix2c Su2Element::matrix() const {
    return {{a_, b_}, {c_, d_}, {-c_, d_}, {a_, -b_}};
}

ClassAngle::ClassAngle(double theta) : theta_(theta) {
    if (!std::isfinite(theta_)) throw std::invalid_argument("ClassAngle: non-finite angle");
    // absorb rounding at the endpoints, reject anything further out
    constexpr double slop = 1e-12;
    if (theta_ < 0.0) {
        if (theta_ < -slop) throw std::invalid_argument("ClassAngle: angle below 0");
        theta_ = 0.0;
    } else if (theta_ > kPi) {
        if (theta_ > kPi + slop) throw std::invalid_argument("ClassAngle: angle above pi");
        theta_ = kPi;
    }
}

bool AngleTriple::in_domain() const {
    return t1 >= 0.0 && t1 <= kPi && t2 >= 0.0 && t2 <= kPi && t3 >= 0.0 && t3 <= kPi;
}

Su2Element multiply(const Su2Element& x, const Su2Element& y) {
    return Su2Element(x.a() * y.a() - x.b() * y.b() - x.c() * y.c() - x.d() * y.d(),
                      x.a() * y.b() + x.b() * y.a() + x.c() * y.d() - x.d() * y.c(),
                      x.a() * y.c() - x.b() * y.d() + x.c() * y.a() + x.d() * y.b(),
                      x.a() * y.d() + x.b() * y.c() - x.c() * y.b() + x.d() * y.a());
}

Su2Element inverse(const Su2Element& x) { return Su2Element(x.a(), -x.b(), -x.c(), -x.d()); }

Su2Element conjugate_by(const Su2Element& u, const Su2Element& x) {
    return multiply(multiply(u, x), inverse(u));
}

ClassAngle class_angle(const Su2Element& x) { return ClassAngle(std::atan2(x.axis_norm(), x.a())); }

Su2Element canonical_rep(const ClassAngle& c) {
    return Su2Element(std::cos(c.theta()), std::sin(c.theta()), 0.0, 0.0);
}

double frobenius_distance(const Su2Element& x, const Su2Element& y) {
    double da = x.a() - y.a();
    double db = x.b() - y.b();
    double dc = x.c() - y.c();
    double dd = x.d() - y.d();
    return std::sqrt(2.0 * (da * da + db * db + dc * dc + dd * dd));
}

double distance_to_identity(const Su2Element& x) {
    return frobenius_distance(x, Su2Element::identity());
}

double commutator_defect(const Su2Element& x, const Su2Element& y) {
    Su2Element comm = multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
    return distance_to_identity(comm);
}

namespace detail {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

Su2Element haar_sample(std::mt19937_64& rng) {
    // two Box-Muller pairs -> 4 iid normals -> normalize (renormalized by
    // the constructor); u1 is kept away from 0 so log stays finite
    double coords[4];
    for (int i = 0; i < 4; i += 2) {
        double u1;
        do {
            u1 = detail::uniform_unit(rng);
        } while (u1 <= 0.0);
        double u2 = detail::uniform_unit(rng);
        double r = std::sqrt(-2.0 * std::log(u1));
        coords[i] = r * std::cos(2.0 * kPi * u2);
        coords[i + 1] = r * std::sin(2.0 * kPi * u2);
    }
    return Su2Element(coords[0], coords[1], coords[2], coords[3]);
}

double product_defect(const Representation& r) {
    return distance_to_identity(multiply(multiply(r.a1, r.a2), r.a3));
}

AngleTriple moment_map(const Representation& r, double tol) {
    double defect = product_defect(r);
    if (defect > tol) {
        throw std::invalid_argument("moment_map: a1*a2*a3 is not the identity (defect " +
                                    std::to_string(defect) + ")");
    }
    return {class_angle(r.a1).theta(), class_angle(r.a2).theta(), class_angle(r.a3).theta()};
}

Representation conjugate_componentwise(const Su2Element& u, const Representation& r) {
    return {conjugate_by(u, r.a1), conjugate_by(u, r.a2), conjugate_by(u, r.a3)};
}

namespace detail {

Su2Element diagonalizer(const Su2Element& x, double axis_tol) {
    double r = x.axis_norm();
    if (r <= axis_tol) return Su2Element::identity();
    double nx = x.b() / r, ny = x.c() / r, nz = x.d() / r;

    // rotate by pi about the j-axis first when the axis points near -i,
    // where the half-way construction below degenerates
    if (nx < -0.5) {
        Su2Element flip(0.0, 0.0, 1.0, 0.0);
        Su2Element y = conjugate_by(flip, x);
        return multiply(diagonalizer(y, axis_tol), flip);
    }
    // half-way rotation taking the axis (nx,ny,nz) to (1,0,0):
    // scalar 1 + n.e1, vector n x e1 = (0, nz, -ny)
    return Su2Element(1.0 + nx, 0.0, nz, -ny);
}

namespace {

// conjugation by (cos phi, sin phi, 0, 0) rotates the (c,d) pair by 2 phi
Su2Element torus_element(double phi) {
    return Su2Element(std::cos(phi), std::sin(phi), 0.0, 0.0);
}

double offdiag_norm(const Su2Element& x) { return std::hypot(x.c(), x.d()); }

}  // namespace

}  // namespace detail

std::optional<Su2Element> conjugator_between(const Representation& r, const Representation& s,
                                             double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("conjugator_between: tolerance must be positive");

    auto verify = [&](const Su2Element& u) -> std::optional<Su2Element> {
        double err = std::max({frobenius_distance(conjugate_by(u, r.a1), s.a1),
                               frobenius_distance(conjugate_by(u, r.a2), s.a2),
                               frobenius_distance(conjugate_by(u, r.a3), s.a3)});
        if (err <= tol) return u;
        return std::nullopt;
    };

    // scalar parts are conjugation invariants; Frobenius distance is at
    // least sqrt(2)|da|, so mismatched traces can be rejected up front
    for (int i = 0; i < 3; ++i) {
        const Su2Element* ri = i == 0 ? &r.a1 : (i == 1 ? &r.a2 : &r.a3);
        const Su2Element* si = i == 0 ? &s.a1 : (i == 1 ? &s.a2 : &s.a3);
        if (std::sqrt(2.0) * std::abs(ri->a() - si->a()) > tol) return std::nullopt;
    }

    const double axis_tol = tol * 0.25;
    bool a1_central = r.a1.is_central(axis_tol) || s.a1.is_central(axis_tol);

    if (a1_central) {
        // a1 contributes no axis; anchor on a2 instead
        bool a2_central = r.a2.is_central(axis_tol) || s.a2.is_central(axis_tol);
        if (a2_central) return verify(Su2Element::identity());
        Su2Element u2 = detail::diagonalizer(r.a2, axis_tol);
        Su2Element v2 = detail::diagonalizer(s.a2, axis_tol);
        return verify(multiply(inverse(v2), u2));
    }

    Su2Element u1 = detail::diagonalizer(r.a1, axis_tol);
    Su2Element v1 = detail::diagonalizer(s.a1, axis_tol);
    Su2Element x2 = conjugate_by(u1, r.a2);
    Su2Element y2 = conjugate_by(v1, s.a2);

    // residual freedom is the diagonal torus; fix it by aligning the
    // off-diagonal phase of the second component
    double phi = 0.0;
    if (detail::offdiag_norm(x2) > axis_tol && detail::offdiag_norm(y2) > axis_tol) {
        double psi_r = std::atan2(x2.d(), x2.c());
        double psi_s = std::atan2(y2.d(), y2.c());
        phi = 0.5 * (psi_s - psi_r);
    }
    return verify(multiply(inverse(v1), multiply(detail::torus_element(phi), u1)));
}

}  // namespace trinion
