#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace conifold {

// Numerical verification of the explicit local formulas around a node
// {sum z_j^2 = 0} in C^4: the cotangent-bundle chart, its symplectic-form
// pullback identity, the collar normal form, moment maps, and the quaternion
// description of the resolution 2-spheres. Everything here is double
// precision with pinned tolerances.
inline constexpr double kAlgebraicTol = 1e-12;   // exact algebraic identities
inline constexpr double kAnalyticTol = 1e-9;     // analytic Jacobian / form checks
inline constexpr double kFiniteDiffTol = 1e-5;   // central finite differences
inline constexpr double kFiniteDiffStep = 1e-6;

template <std::size_t N>
struct QuadricPoint {
    std::array<std::complex<double>, N> z{};
    double residual = 0.0;  // |sum z_j^2|
};

template <std::size_t N>
struct CotangentPoint {
    std::array<double, N> u{};  // |u| = 1
    std::array<double, N> v{};  // <u, v> = 0
};

// (x/|x|, -|x| y) with x = Re z, y = Im z. Throws DataError when x = 0 (on
// the quadric that forces z = 0, which has no chart image).
CotangentPoint<4> phi(const QuadricPoint<4>& p);
CotangentPoint<3> phi3(const QuadricPoint<3>& p);

// sqrt(|v|) u - i v / sqrt(|v|). Throws DataError when v = 0 (zero section).
QuadricPoint<4> phi_inverse(const CotangentPoint<4>& p);
QuadricPoint<3> phi3_inverse(const CotangentPoint<3>& p);

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ResidualReport {
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<CheckResult> checks;
    bool pass = false;  // all checks pass

    const CheckResult* find(const std::string& name) const;
};

// Pullback of sum dv_j ^ du_j under phi equals the standard Kahler form
// (i/2) sum dz_j ^ dzbar_j restricted to the quadric, evaluated on explicit
// tangent bases with analytic Jacobians, cross-checked by central finite
// differences; plus the phi_inverse round trip.
ResidualReport verify_symplectomorphism(int samples, std::uint64_t seed);

struct CollarCheck {
    double lambda = 0.0;         // t^2 = sum Re(z_j)^2
    double model_residual = 0.0; // |v - lambda * I u|
    bool on_positive_branch = false;
    bool pass = false;
};

// The surface z = (it, t, 0, 0) maps into the collar {v = lambda I u,
// lambda >= 0} with lambda = t^2; the conjugate surface {z1 = -i z2} lands on
// the lambda <= 0 branch. I is the left quaternion i-multiplication on R^4.
CollarCheck verify_collar(double t);
CollarCheck verify_collar_opposite(double t);

// (i)  sum (a_j + i b_j)^2 = |a|^2 - |b|^2 + 2 i <b, a> exactly;
// (ii) contracting the standard form with (a, -b) gives d<b,a> and with
//      (b, a) gives d(|b|^2 - |a|^2)/2 (analytic gradients + finite diff);
// (iii) membership of level sets {h = eps}.
ResidualReport moment_checks(int samples, std::uint64_t seed);

using Quaternion = std::array<double, 4>;  // 1, i, j, k components

Quaternion qmul(const Quaternion& a, const Quaternion& b);
Quaternion qconj(const Quaternion& a);
Quaternion qinv(const Quaternion& a);
double qnorm(const Quaternion& a);

// Validated conjugation J' = a^{-1} J a; requires |a| = 1 and J unit
// imaginary. The right-multiplication convention is fixed here once.
Quaternion conjugated_structure(const Quaternion& a, const Quaternion& j);

// Validated left/right structures (b a^{-1}, a^{-1} b) of an orthonormal
// pair of unit quaternions.
std::pair<Quaternion, Quaternion> induced_structures(const Quaternion& a, const Quaternion& b);

// For unit a and unit imaginary J: J' = a^{-1} J a satisfies J a = a J';
// J_left = b a^{-1} is unit imaginary with J_left a = b for any orthonormal
// pair; swapping (a,b) -> (b,a) negates both induced structures and exchanges
// their roles; (a,b) -> (b,-a) has order 4 with square -id.
ResidualReport quaternion_maps(int samples, std::uint64_t seed);

// The complex line C (a + i b) of an orthonormal pair lies on the projective
// quadric; J = b a^{-1} and J' = a^{-1} b act by left/right multiplication;
// swapped pairs produce the negated pair of structures.
ResidualReport grassmannian_maps(int samples, std::uint64_t seed);

// Same pullback verification with three coordinates (target T*S^2).
ResidualReport local_model_dim2(int samples, std::uint64_t seed);

// Action of the generator exchange on H3(S^3 x S^2) (matrix squared = id).
std::array<long long, 4> pi3_action_matrix();

// All of the above bundled; `pass` aggregates every tolerance.
ResidualReport verify_all(int samples, std::uint64_t seed);

}  // namespace conifold
