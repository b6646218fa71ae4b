#pragma once

// Orbit geometry of SU(1,1) and K = C^* on the flag variety CP^1 of SL(2, C).
//
// A point [z : w] has affine coordinate z/w. K acts by a . [z : w] = [a^2 z : w],
// with orbits {0}, {inf} and C^*. SU(1,1) has the three orbits |z| < |w| (the
// disc), |z| = |w| (the circle) and |z| > |w| (the exterior). K_R = U(1) is
// K intersected with SU(1,1).

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace flagrep::sl2 {

using Complex = std::complex<double>;

inline constexpr double kBoundaryTolerance = 1e-9;

/// A point of CP^1, scaled so that its larger coordinate is exactly 1.
class ProjPoint {
public:
    // Throws Error(InvalidArgument) for (0, 0) or non-finite input.
    static ProjPoint make(Complex z, Complex w);
    static ProjPoint from_affine(Complex a) { return make(a, 1.0); }
    static ProjPoint infinity() { return make(1.0, 0.0); }

    Complex z() const noexcept { return z_; }
    Complex w() const noexcept { return w_; }

private:
    ProjPoint(Complex z, Complex w) : z_(z), w_(w) {}
    Complex z_;
    Complex w_;
};

// Fubini-Study chordal distance, in [0, 1].
double chordal_distance(const ProjPoint& a, const ProjPoint& b);

enum class Side { K, GR };
enum class OrbitName { Zero, Infinity, CStar, Disc, Circle, Exterior };

struct OrbitLabel {
    Side side;
    OrbitName name;

    // Throws Error(InvalidArgument) when name does not belong to side.
    static OrbitLabel make(Side side, OrbitName name);

    friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

std::string_view to_string(Side side);
std::string_view to_string(OrbitName name);

std::array<OrbitLabel, 3> k_orbits();
std::array<OrbitLabel, 3> gr_orbits();

// K-side uses exact zero tests; GR-side treats |log(|z|/|w|)| < eps as the circle.
OrbitLabel classify(const ProjPoint& p, Side side, double eps = kBoundaryTolerance);

// Zero <-> Disc, Infinity <-> Exterior, CStar <-> Circle.
OrbitLabel matsuki_dual(OrbitLabel q);

enum class IntersectionShape { Empty, SingleOrbit, SeveralOrbits };
std::string_view to_string(IntersectionShape shape);

struct IntersectionCheck {
    OrbitLabel k_orbit;
    OrbitLabel gr_orbit;
    bool dual;                    // gr_orbit == matsuki_dual(k_orbit)
    IntersectionShape observed;   // K_R-orbit structure seen in the samples
    std::size_t samples;
};

struct SampleFailure {
    std::string reason;
    ProjPoint point;
};

struct DualityReport {
    std::vector<IntersectionCheck> pairs;  // all nine (K-orbit, GR-orbit) pairs
    std::vector<SampleFailure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

// Samples every intersection Q ∩ S. Dual pairs must be a single K_R-orbit;
// every other pair must be empty or split into several K_R-orbits.
DualityReport verify_duality(std::size_t samples, std::mt19937_64& gen, double eps = kBoundaryTolerance);
DualityReport verify_duality(std::size_t samples, std::uint64_t seed, double eps = kBoundaryTolerance);

// Throws Error(SampleFailure) describing the first failure, if any.
void require_passed(const DualityReport& report);

/// Closure order on the orbits of one side: leq(a, b) iff a lies in the closure of b.
class OrbitPoset {
public:
    OrbitPoset(std::array<OrbitLabel, 3> elements, std::array<std::array<bool, 3>, 3> leq)
        : elements_(elements), leq_(leq) {}

    const std::array<OrbitLabel, 3>& elements() const noexcept { return elements_; }
    bool leq(const OrbitLabel& a, const OrbitLabel& b) const;
    bool is_partial_order() const;

private:
    std::size_t index(const OrbitLabel& q) const;

    std::array<OrbitLabel, 3> elements_;
    std::array<std::array<bool, 3>, 3> leq_;
};

struct ClosurePosets {
    OrbitPoset k_side;
    OrbitPoset gr_side;
    // q <= q' on the K side iff dual(q') <= dual(q) on the GR side, for all pairs.
    bool reversal_certificate;
};

// Closure relations found by sampling sequences inside each orbit and
// classifying their limits.
ClosurePosets closure_posets();

}  // namespace flagrep::sl2
