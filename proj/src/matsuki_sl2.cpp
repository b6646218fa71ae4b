#include "flagrep/matsuki_sl2.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "flagrep/error.hpp"

namespace flagrep::sl2 {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Radii used for the disc and exterior cells, as log-uniform draws in [kMinRadius, kMaxRadius].
constexpr double kMinRadius = 1e-6;
constexpr double kMaxRadius = 0.999;

// Limit-sampling schedule for the closure posets.
constexpr int kAngles = 16;
constexpr int kSteps = 20;
constexpr double kConvergenceTolerance = 1e-5;

Complex affine(const ProjPoint& p) { return p.z() / p.w(); }

std::string describe(const ProjPoint& p) {
    std::ostringstream os;
    os.precision(17);
    os << "[" << p.z().real() << (p.z().imag() < 0 ? "-" : "+") << std::abs(p.z().imag()) << "i : " << p.w().real()
       << (p.w().imag() < 0 ? "-" : "+") << std::abs(p.w().imag()) << "i]";
    return os.str();
}

bool is_point_orbit(OrbitName name) { return name == OrbitName::Zero || name == OrbitName::Infinity; }

// Whether q = a^2 . p for some |a| = 1.
bool same_kr_orbit(const ProjPoint& p, const ProjPoint& q, double eps) {
    const OrbitName kp = classify(p, Side::K).name;
    const OrbitName kq = classify(q, Side::K).name;
    if (is_point_orbit(kp) || is_point_orbit(kq)) return kp == kq;
    const Complex pa = affine(p);
    const Complex qa = affine(q);
    const Complex a = std::sqrt(qa / pa);
    return std::abs(std::abs(a) - 1.0) < eps && std::abs(a * a * pa - qa) <= eps * std::abs(qa);
}

// Points intended to lie in k ∩ s. Single-point K-orbits yield their point.
std::vector<ProjPoint> draw_cell(OrbitName k, OrbitName s, std::size_t n, std::mt19937_64& gen) {
    if (k == OrbitName::Zero) return {ProjPoint::from_affine(0.0)};
    if (k == OrbitName::Infinity) return {ProjPoint::infinity()};

    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> log_radius(std::log(kMinRadius), std::log(kMaxRadius));
    std::vector<ProjPoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = angle(gen);
        switch (s) {
            case OrbitName::Circle:
                out.push_back(ProjPoint::from_affine(std::polar(1.0, theta)));
                break;
            case OrbitName::Disc:
                out.push_back(ProjPoint::from_affine(std::polar(std::exp(log_radius(gen)), theta)));
                break;
            default:  // exterior: [1 : r e^{-i theta}] with r < 1
                out.push_back(ProjPoint::make(1.0, std::polar(std::exp(log_radius(gen)), -theta)));
                break;
        }
    }
    return out;
}

}  // namespace

ProjPoint ProjPoint::make(Complex z, Complex w) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw Error(ErrorCode::InvalidArgument, "projective point coordinates must be finite");
    if (z == 0.0 && w == 0.0) throw Error(ErrorCode::InvalidArgument, "[0 : 0] is not a point of CP^1");
    if (std::abs(z) >= std::abs(w)) return ProjPoint(1.0, w / z);
    return ProjPoint(z / w, 1.0);
}

double chordal_distance(const ProjPoint& a, const ProjPoint& b) {
    const double na = std::sqrt(std::norm(a.z()) + std::norm(a.w()));
    const double nb = std::sqrt(std::norm(b.z()) + std::norm(b.w()));
    return std::abs(a.z() * b.w() - b.z() * a.w()) / (na * nb);
}

OrbitLabel OrbitLabel::make(Side side, OrbitName name) {
    const bool k_name = name == OrbitName::Zero || name == OrbitName::Infinity || name == OrbitName::CStar;
    if (k_name != (side == Side::K))
        throw Error(ErrorCode::InvalidArgument,
                    std::string(to_string(name)) + " is not a " + std::string(to_string(side)) + "-orbit");
    return {side, name};
}

std::string_view to_string(Side side) { return side == Side::K ? "K" : "GR"; }

std::string_view to_string(OrbitName name) {
    switch (name) {
        case OrbitName::Zero: return "Zero";
        case OrbitName::Infinity: return "Infinity";
        case OrbitName::CStar: return "CStar";
        case OrbitName::Disc: return "Disc";
        case OrbitName::Circle: return "Circle";
        case OrbitName::Exterior: return "Exterior";
    }
    return "?";
}

std::string_view to_string(IntersectionShape shape) {
    switch (shape) {
        case IntersectionShape::Empty: return "empty";
        case IntersectionShape::SingleOrbit: return "single-orbit";
        case IntersectionShape::SeveralOrbits: return "several-orbits";
    }
    return "?";
}

std::array<OrbitLabel, 3> k_orbits() {
    return {OrbitLabel{Side::K, OrbitName::Zero}, OrbitLabel{Side::K, OrbitName::Infinity},
            OrbitLabel{Side::K, OrbitName::CStar}};
}

std::array<OrbitLabel, 3> gr_orbits() {
    return {OrbitLabel{Side::GR, OrbitName::Disc}, OrbitLabel{Side::GR, OrbitName::Circle},
            OrbitLabel{Side::GR, OrbitName::Exterior}};
}

OrbitLabel classify(const ProjPoint& p, Side side, double eps) {
    if (side == Side::K) {
        if (p.z() == 0.0) return {Side::K, OrbitName::Zero};
        if (p.w() == 0.0) return {Side::K, OrbitName::Infinity};
        return {Side::K, OrbitName::CStar};
    }
    // One coordinate is exactly 1 after normalization, so the ratio never overflows.
    const double zr = std::abs(p.z());
    const double wr = std::abs(p.w());
    if (zr == 0.0) return {Side::GR, OrbitName::Disc};
    if (wr == 0.0) return {Side::GR, OrbitName::Exterior};
    const double log_ratio = std::log(zr / wr);
    if (std::abs(log_ratio) < eps) return {Side::GR, OrbitName::Circle};
    return {Side::GR, log_ratio < 0 ? OrbitName::Disc : OrbitName::Exterior};
}

OrbitLabel matsuki_dual(OrbitLabel q) {
    switch (q.name) {
        case OrbitName::Zero: return {Side::GR, OrbitName::Disc};
        case OrbitName::Infinity: return {Side::GR, OrbitName::Exterior};
        case OrbitName::CStar: return {Side::GR, OrbitName::Circle};
        case OrbitName::Disc: return {Side::K, OrbitName::Zero};
        case OrbitName::Exterior: return {Side::K, OrbitName::Infinity};
        case OrbitName::Circle: return {Side::K, OrbitName::CStar};
    }
    throw Error(ErrorCode::InternalError, "unknown orbit");
}

DualityReport verify_duality(std::size_t samples, std::mt19937_64& gen, double eps) {
    if (samples == 0) throw Error(ErrorCode::InvalidArgument, "verify_duality needs at least one sample");
    DualityReport report;
    for (const auto& k : k_orbits()) {
        for (const auto& s : gr_orbits()) {
            const bool dual = matsuki_dual(k) == s;
            // Non-dual cells need two points to exhibit a second K_R-orbit.
            const std::size_t n = dual ? samples : std::max<std::size_t>(samples, 2);
            std::vector<ProjPoint> members;
            for (const auto& p : draw_cell(k.name, s.name, n, gen)) {
                const OrbitLabel pk = classify(p, Side::K, eps);
                const OrbitLabel ps = classify(p, Side::GR, eps);
                if (pk != k) {
                    report.failures.push_back({"sample drawn for " + std::string(to_string(k.name)) + " classified as " +
                                                   std::string(to_string(pk.name)),
                                               p});
                    continue;
                }
                if (ps == s) {
                    members.push_back(p);
                } else if (!is_point_orbit(k.name)) {
                    report.failures.push_back({"sample drawn for " + std::string(to_string(s.name)) + " classified as " +
                                                   std::string(to_string(ps.name)),
                                               p});
                }
            }

            IntersectionShape shape = IntersectionShape::Empty;
            if (!members.empty()) {
                shape = IntersectionShape::SingleOrbit;
                for (std::size_t i = 1; i < members.size(); ++i) {
                    if (same_kr_orbit(members.front(), members[i], eps)) continue;
                    shape = IntersectionShape::SeveralOrbits;
                    if (dual)
                        report.failures.push_back({std::string(to_string(k.name)) + " ∩ " +
                                                       std::string(to_string(s.name)) +
                                                       ": point not related to the first sample by U(1)",
                                                   members[i]});
                    break;
                }
            }
            if (dual && shape == IntersectionShape::Empty)
                report.failures.push_back({std::string(to_string(k.name)) + " ∩ " + std::string(to_string(s.name)) +
                                               " is empty but the orbits are dual",
                                           ProjPoint::from_affine(0.0)});
            if (!dual && shape == IntersectionShape::SingleOrbit)
                report.failures.push_back({std::string(to_string(k.name)) + " ∩ " + std::string(to_string(s.name)) +
                                               " is a single K_R-orbit but the orbits are not dual",
                                           members.front()});
            report.pairs.push_back({k, s, dual, shape, members.size()});
        }
    }
    return report;
}

DualityReport verify_duality(std::size_t samples, std::uint64_t seed, double eps) {
    std::mt19937_64 gen(seed);
    return verify_duality(samples, gen, eps);
}

void require_passed(const DualityReport& report) {
    if (report.passed()) return;
    const auto& f = report.failures.front();
    throw Error(ErrorCode::SampleFailure, f.reason + " at " + describe(f.point));
}

std::size_t OrbitPoset::index(const OrbitLabel& q) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == q) return i;
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(q.name)) + " is not in this poset");
}

bool OrbitPoset::leq(const OrbitLabel& a, const OrbitLabel& b) const { return leq_[index(a)][index(b)]; }

bool OrbitPoset::is_partial_order() const {
    constexpr std::size_t n = 3;
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i][i]) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq_[i][j] && leq_[j][i]) return false;
            for (std::size_t k = 0; k < n; ++k)
                if (leq_[i][j] && leq_[j][k] && !leq_[i][k]) return false;
        }
    }
    return true;
}

ClosurePosets closure_posets() {
    struct Sequence {
        std::vector<ProjPoint> terms;
        ProjPoint limit;
    };

    // Sequences r_m e^{i theta} with r_m -> 0, -> 1 from either side, -> infinity,
    // plus constant sequences at sample points of every orbit.
    std::vector<Sequence> sequences;
    for (int a = 0; a < kAngles; ++a) {
        const double theta = kTwoPi * a / kAngles;
        const Complex unit = std::polar(1.0, theta);
        Sequence to_zero{{}, ProjPoint::from_affine(0.0)};
        Sequence to_infinity{{}, ProjPoint::infinity()};
        Sequence to_circle_inside{{}, ProjPoint::from_affine(unit)};
        Sequence to_circle_outside{{}, ProjPoint::from_affine(unit)};
        for (int m = 1; m <= kSteps; ++m) {
            const double h = std::ldexp(1.0, -m);
            to_zero.terms.push_back(ProjPoint::from_affine(h * unit));
            to_infinity.terms.push_back(ProjPoint::make(1.0, h * std::conj(unit)));
            to_circle_inside.terms.push_back(ProjPoint::from_affine((1.0 - h) * unit));
            to_circle_outside.terms.push_back(ProjPoint::from_affine((1.0 + h) * unit));
        }
        sequences.push_back(std::move(to_zero));
        sequences.push_back(std::move(to_infinity));
        sequences.push_back(std::move(to_circle_inside));
        sequences.push_back(std::move(to_circle_outside));
        for (double r : {0.5, 1.0, 2.0}) {
            const ProjPoint p = ProjPoint::from_affine(r * unit);
            sequences.push_back({{p}, p});
        }
    }
    for (const ProjPoint& p : {ProjPoint::from_affine(0.0), ProjPoint::infinity()}) sequences.push_back({{p}, p});

    auto relation = [&](Side side, const std::array<OrbitLabel, 3>& elements) {
        auto position = [&](const OrbitLabel& q) {
            for (std::size_t i = 0; i < elements.size(); ++i)
                if (elements[i] == q) return i;
            throw Error(ErrorCode::InternalError, "orbit missing from its side");
        };
        std::array<std::array<bool, 3>, 3> leq{};
        for (const auto& seq : sequences) {
            const OrbitLabel host = classify(seq.terms.front(), side);
            bool inside = true;
            for (const auto& t : seq.terms) inside = inside && classify(t, side) == host;
            if (!inside) continue;
            double previous = 2.0;
            bool converges = true;
            for (const auto& t : seq.terms) {
                const double d = chordal_distance(t, seq.limit);
                converges = converges && d <= previous;
                previous = d;
            }
            if (!converges || previous > kConvergenceTolerance) continue;
            leq[position(classify(seq.limit, side))][position(host)] = true;
        }
        return OrbitPoset(elements, leq);
    };

    OrbitPoset k_side = relation(Side::K, k_orbits());
    OrbitPoset gr_side = relation(Side::GR, gr_orbits());

    bool reversal = true;
    for (const auto& q : k_orbits())
        for (const auto& q2 : k_orbits())
            reversal = reversal && k_side.leq(q, q2) == gr_side.leq(matsuki_dual(q2), matsuki_dual(q));
    return {std::move(k_side), std::move(gr_side), reversal};
}

}  // namespace flagrep::sl2
