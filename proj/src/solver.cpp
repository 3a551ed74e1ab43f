#include "trinion/solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trinion {

namespace {

constexpr double kPi = std::numbers::pi;

Infeasible infeasible_report(const AngleTriple& t) {
    Infeasible rep;
    rep.slacks = tetrahedron().facet_slacks(t);
    for (int k = 0; k < 4; ++k) {
        if (rep.slacks[k] < 0.0) rep.violated.push_back(k);
    }
    return rep;
}

// (cos t1 cos t2 - cos t3) / (sin t1 sin t2) through the product-to-sum
// identities: with m = cos(t1 - t2), p = cos(t1 + t2),
//   raw = ((m - c3) + (p - c3)) / (m - p).
// The differenced form keeps raw exact at +-1 when t3 equals the facet
// value as a double, which the plain quotient loses to cancellation.
double cos_beta_raw_of(const AngleTriple& t) {
    double m = std::cos(t.t1 - t.t2);
    double p = std::cos(t.t1 + t.t2);
    double c3 = std::cos(t.t3);
    return ((m - c3) + (p - c3)) / (m - p);
}

// cos/sin pair for the principal branch; snaps to (+-1, 0) inside the snap
// band so facet inputs yield an exactly diagonal g2
struct BetaPair {
    double cosb, sinb;
};

BetaPair beta_pair(double raw) {
    if (raw >= 1.0 - kCosSnapBand) return {1.0, 0.0};
    if (raw <= -1.0 + kCosSnapBand) return {-1.0, 0.0};
    return {raw, std::sqrt((1.0 - raw) * (1.0 + raw))};
}

// the rotated class representative: diagonal entries cos t +- i sin t cos b,
// off-diagonal +- sin t sin b; as a quaternion (cos t, sin t cos b, sin t sin b, 0)
Su2Element rotated_rep(double theta, const BetaPair& b) {
    double s = std::sin(theta);
    return Su2Element(std::cos(theta), s * b.cosb, s * b.sinb, 0.0);
}

Witness make_witness(const AngleTriple& t, const Su2Element& a1, const Su2Element& a2,
                     const BetaSolution& beta, double tol) {
    Su2Element a3 = inverse(multiply(a1, a2));
    return Witness{Representation{a1, a2, a3}, beta, tetrahedron().classify(t, tol)};
}

}  // namespace

std::variant<BetaSolution, Infeasible> beta_from_angles(const AngleTriple& t, double tol,
                                                        double clamp_tol) {
    if (!t.in_domain()) throw std::invalid_argument("beta_from_angles: angles outside [0, pi]");
    if (std::sin(t.t1) * std::sin(t.t2) <= tol) {
        throw std::invalid_argument(
            "beta_from_angles: degenerate class (sin t1 sin t2 ~ 0); use solve_witness");
    }
    double raw = cos_beta_raw_of(t);
    if (std::abs(raw) > 1.0 + clamp_tol) return infeasible_report(t);
    bool clamped = std::abs(raw) > 1.0;
    return BetaSolution{std::acos(std::clamp(raw, -1.0, 1.0)), raw, clamped};
}

SolveOutcome solve_witness(const AngleTriple& t, double tol) {
    if (!t.in_domain()) throw std::invalid_argument("solve_witness: angles outside [0, pi]");
    const Tetrahedron& tet = tetrahedron();

    if (!tet.contains(t, tol)) return SolveOutcome{infeasible_report(t)};

    double s1 = std::sin(t.t1);
    double s2 = std::sin(t.t2);

    if (s1 <= kDegenerateSinTol || s2 <= kDegenerateSinTol) {
        // a central class forces the whole triple diagonal; membership has
        // already pinned t3 to the compatible value, so the diagonal triple
        // is the witness (beta = 0: the second factor is the diagonal rep)
        Su2Element a1 = canonical_rep(ClassAngle(t.t1));
        Su2Element a2 = canonical_rep(ClassAngle(t.t2));
        return SolveOutcome{
            make_witness(t, a1, a2, BetaSolution{0.0, cos_beta_raw_of(t), false}, tol)};
    }

    double raw = cos_beta_raw_of(t);
    // membership is the feasibility decision; raw beyond the clamp band can
    // only be rounding amplified by 1/(sin t1 sin t2) on boundary points
    BetaPair bp = beta_pair(raw);
    BetaSolution beta{std::acos(std::clamp(raw, -1.0, 1.0)), raw, std::abs(raw) > 1.0};
    Su2Element a1 = canonical_rep(ClassAngle(t.t1));
    Su2Element a2 = rotated_rep(t.t2, bp);
    return SolveOutcome{make_witness(t, a1, a2, beta, tol)};
}

bool holonomy_condition(const AngleTriple& t) {
    if (!t.in_domain()) return false;
    double lower = std::abs(t.t1 - t.t2);
    double upper = std::min(t.t1 + t.t2, 2.0 * kPi - (t.t1 + t.t2));
    return lower <= t.t3 && t.t3 <= upper;
}

}  // namespace trinion
