#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>

namespace trinion {

inline constexpr double kDefaultProductTol = 1e-9;
inline constexpr double kDefaultConjugacyTol = 1e-8;

/// 2x2 complex matrix, row major. Used as the matrix view of group
/// elements and as the independent arithmetic path in the oracles.
struct Matrix2c {
    std::complex<double> m00, m01, m10, m11;

    Matrix2c operator*(const Matrix2c& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    std::complex<double> trace() const { return m00 + m11; }
};

double frobenius_distance(const Matrix2c& x, const Matrix2c& y);
Matrix2c identity_matrix();

class ClassAngle;

/// Element of SU(2) stored as a unit quaternion (a,b,c,d) with matrix view
///   [[a+bi, c+di], [-c+di, a-bi]].
/// The constructor renormalizes, so products stay on the group to machine
/// precision; trace of the matrix view is 2a.
class Su2Element {
  public:
    Su2Element(double a, double b, double c, double d);

    static const Su2Element& identity();

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    double trace() const { return 2.0 * a_; }
    /// Norm of the imaginary part (equals sin of the class angle).
    double axis_norm() const;

    Matrix2c matrix() const;

    bool is_central(double tol) const { return axis_norm() <= tol; }

  private:
    double a_, b_, c_, d_;
};

/// Conjugacy class label: theta in [0, pi], the class of
/// diag(e^{i theta}, e^{-i theta}) with trace 2 cos(theta).
class ClassAngle {
  public:
    explicit ClassAngle(double theta);
    double theta() const { return theta_; }

  private:
    double theta_;
};

/// Candidate holonomy angles, one per boundary class. Plain value type;
/// operations that require components in [0, pi] check at the call site.
struct AngleTriple {
    double t1, t2, t3;

    double operator[](int i) const { return i == 0 ? t1 : (i == 1 ? t2 : t3); }
    bool in_domain() const;
};

/// Triple (a1, a2, a3) expected to satisfy a1*a2*a3 = identity.
/// Kept as a plain aggregate so the invariant can be probed by tests;
/// moment_map enforces it.
struct Representation {
    Su2Element a1, a2, a3;
};

Su2Element multiply(const Su2Element& x, const Su2Element& y);
inline Su2Element operator*(const Su2Element& x, const Su2Element& y) { return multiply(x, y); }

Su2Element inverse(const Su2Element& x);

/// u x u^{-1}; preserves the class angle.
Su2Element conjugate_by(const Su2Element& u, const Su2Element& x);

/// arccos(trace/2), evaluated as atan2(|imag part|, a) which is the same
/// value for unit quaternions but stays fully accurate at the +-identity
/// poles where arccos loses half the digits.
ClassAngle class_angle(const Su2Element& x);

/// Diagonal representative diag(e^{i theta}, e^{-i theta}) of the class.
Su2Element canonical_rep(const ClassAngle& c);

/// Frobenius distance of the matrix views; sqrt(2) times the quaternion
/// Euclidean distance.
double frobenius_distance(const Su2Element& x, const Su2Element& y);
double distance_to_identity(const Su2Element& x);

/// Frobenius distance of x y x^{-1} y^{-1} from the identity; zero exactly
/// when x and y commute.
double commutator_defect(const Su2Element& x, const Su2Element& y);

/// Haar-uniform sample (uniform on the unit 3-sphere). The mapping from
/// generator output to sample is pinned here, not delegated to
/// std::normal_distribution, so a seed reproduces the same stream across
/// standard-library implementations.
Su2Element haar_sample(std::mt19937_64& rng);

/// Frobenius distance of a1*a2*a3 from the identity.
double product_defect(const Representation& r);

/// Class angles of the three components. Throws std::invalid_argument if
/// the product invariant is violated beyond tol.
AngleTriple moment_map(const Representation& r, double tol = kDefaultProductTol);

Representation conjugate_componentwise(const Su2Element& u, const Representation& r);

/// Searches for u with u r u^{-1} = s componentwise within tol.
/// Returns std::nullopt when the triples are not conjugate. tol <= 0 is an
/// error. The conjugator is found by rotating r.a1 and s.a1 to the diagonal
/// normal form and fixing the residual torus freedom against the
/// off-diagonal phase of the second component; central components fall back
/// to diagonalizing the next non-central one.
std::optional<Su2Element> conjugator_between(const Representation& r, const Representation& s,
                                             double tol = kDefaultConjugacyTol);

namespace detail {
/// Deterministic per-chunk seed derivation (splitmix64 over seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);
/// Uniform double in [0, 1) from the top 53 bits of the generator.
double uniform_unit(std::mt19937_64& rng);
/// Unit quaternion u with conjugate_by(u, x) diagonal of the form
/// (a, r, 0, 0), r >= 0. Identity when x is central within axis_tol.
Su2Element diagonalizer(const Su2Element& x, double axis_tol);
}  // namespace detail

}  // namespace trinion
