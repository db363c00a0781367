#include "conifold/localmodel.hpp"

#include "conifold/integer.hpp"
#include "conifold/rng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace conifold {
namespace {

template <std::size_t N>
using RVec = std::array<double, N>;
template <std::size_t N>
using CVec = std::array<std::complex<double>, N>;

template <std::size_t N>
double rdot(const RVec<N>& a, const RVec<N>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s += a[j] * b[j];
    return s;
}

template <std::size_t N>
double quadric_residual(const CVec<N>& z) {
    std::complex<double> s = 0.0;
    for (const std::complex<double>& c : z) s += c * c;
    return std::abs(s);
}

void chmax(double& acc, double value) { acc = std::max(acc, value); }

CheckResult make_check(const std::string& name, double residual, double tolerance) {
    return CheckResult{name, residual, tolerance, residual <= tolerance};
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& check : checks)
        if (!check.pass) return false;
    return true;
}

void require_samples(int samples) {
    if (samples <= 0) throw DataError("samples must be positive");
}

template <std::size_t N>
CotangentPoint<N> chart(const QuadricPoint<N>& p) {
    RVec<N> x{}, y{};
    for (std::size_t j = 0; j < N; ++j) {
        x[j] = p.z[j].real();
        y[j] = p.z[j].imag();
    }
    const double r2 = rdot(x, x);
    if (r2 == 0.0) throw DataError("no cotangent chart: Re z = 0");
    const double r = std::sqrt(r2);
    CotangentPoint<N> out;
    for (std::size_t j = 0; j < N; ++j) {
        out.u[j] = x[j] / r;
        out.v[j] = -r * y[j];
    }
    return out;
}

template <std::size_t N>
QuadricPoint<N> chart_inverse(const CotangentPoint<N>& p) {
    const double n2 = rdot(p.v, p.v);
    if (n2 == 0.0) throw DataError("zero section has no preimage");
    const double s = std::sqrt(std::sqrt(n2));  // sqrt(|v|)
    QuadricPoint<N> out;
    for (std::size_t j = 0; j < N; ++j)
        out.z[j] = std::complex<double>(s * p.u[j], -p.v[j] / s);
    out.residual = quadric_residual(out.z);
    return out;
}

template <std::size_t N>
struct ChartDifferential {
    RVec<N> du{};
    RVec<N> dv{};
};

// Directional derivative of the chart along the ambient vector zeta:
// d(x/|x|) = (xi - u <u, xi>) / |x| and d(-|x| y) = -<u, xi> y - |x| eta.
template <std::size_t N>
ChartDifferential<N> chart_differential(const QuadricPoint<N>& p, const CVec<N>& zeta) {
    RVec<N> x{}, y{}, xi{}, eta{};
    for (std::size_t j = 0; j < N; ++j) {
        x[j] = p.z[j].real();
        y[j] = p.z[j].imag();
        xi[j] = zeta[j].real();
        eta[j] = zeta[j].imag();
    }
    const double r2 = rdot(x, x);
    if (r2 == 0.0) throw DataError("no cotangent chart: Re z = 0");
    const double r = std::sqrt(r2);
    RVec<N> u{};
    for (std::size_t j = 0; j < N; ++j) u[j] = x[j] / r;
    const double uxi = rdot(u, xi);
    ChartDifferential<N> d;
    for (std::size_t j = 0; j < N; ++j) {
        d.du[j] = (xi[j] - u[j] * uxi) / r;
        d.dv[j] = -uxi * y[j] - r * eta[j];
    }
    return d;
}

template <std::size_t N>
ChartDifferential<N> finite_difference(const QuadricPoint<N>& p, const CVec<N>& zeta) {
    QuadricPoint<N> fwd = p, bwd = p;
    for (std::size_t j = 0; j < N; ++j) {
        fwd.z[j] += kFiniteDiffStep * zeta[j];
        bwd.z[j] -= kFiniteDiffStep * zeta[j];
    }
    const CotangentPoint<N> qf = chart(fwd);
    const CotangentPoint<N> qb = chart(bwd);
    ChartDifferential<N> d;
    for (std::size_t j = 0; j < N; ++j) {
        d.du[j] = (qf.u[j] - qb.u[j]) / (2.0 * kFiniteDiffStep);
        d.dv[j] = (qf.v[j] - qb.v[j]) / (2.0 * kFiniteDiffStep);
    }
    return d;
}

// (i/2) sum dz_j ^ dzbar_j = sum dx_j ^ dy_j on a pair of ambient vectors.
template <std::size_t N>
double kaehler_form(const CVec<N>& a, const CVec<N>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j)
        s += a[j].real() * b[j].imag() - b[j].real() * a[j].imag();
    return s;
}

// Pullback of sum dv_j ^ du_j through the chart.
template <std::size_t N>
double pulled_back_form(const QuadricPoint<N>& p, const CVec<N>& a, const CVec<N>& b) {
    const ChartDifferential<N> da = chart_differential(p, a);
    const ChartDifferential<N> db = chart_differential(p, b);
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j)
        s += da.dv[j] * db.du[j] - db.dv[j] * da.du[j];
    return s;
}

template <std::size_t N>
RVec<N> unit_vector(Rng& rng) {
    RVec<N> x{};
    double n2;
    do {
        for (double& c : x) c = rng.normal();
        n2 = rdot(x, x);
    } while (n2 < 1e-2);
    const double n = std::sqrt(n2);
    for (double& c : x) c /= n;
    return x;
}

template <std::size_t N>
RVec<N> unit_orthogonal(Rng& rng, const RVec<N>& x) {
    RVec<N> y{};
    double n2;
    do {
        for (double& c : y) c = rng.normal();
        const double d = rdot(x, y);
        for (std::size_t j = 0; j < N; ++j) y[j] -= d * x[j];
        n2 = rdot(y, y);
    } while (n2 < 1e-2);
    const double n = std::sqrt(n2);
    for (double& c : y) c /= n;
    return y;
}

// Exact sample z = s (e + i f) with e, f orthonormal, so sum z_j^2 =
// s^2 (|e|^2 - |f|^2 + 2 i <e, f>) vanishes to rounding.
template <std::size_t N>
QuadricPoint<N> sample_quadric(Rng& rng) {
    const RVec<N> e = unit_vector<N>(rng);
    const RVec<N> f = unit_orthogonal<N>(rng, e);
    const double s = 0.5 + 1.5 * rng.unit();
    QuadricPoint<N> p;
    for (std::size_t j = 0; j < N; ++j) p.z[j] = std::complex<double>(s * e[j], s * f[j]);
    p.residual = quadric_residual(p.z);
    return p;
}

// Real basis of the tangent space of {sum z_j^2 = 0} at p: the complex
// kernel vectors e_j - (z_j / z_m) e_m for the largest slot m, and their
// i-rotations.
template <std::size_t N>
std::vector<CVec<N>> tangent_basis(const QuadricPoint<N>& p) {
    std::size_t m = 0;
    for (std::size_t j = 1; j < N; ++j)
        if (std::abs(p.z[j]) > std::abs(p.z[m])) m = j;
    std::vector<CVec<N>> basis;
    for (std::size_t j = 0; j < N; ++j) {
        if (j == m) continue;
        CVec<N> w{};
        w[j] = 1.0;
        w[m] = -p.z[j] / p.z[m];
        basis.push_back(w);
        CVec<N> iw{};
        for (std::size_t t = 0; t < N; ++t) iw[t] = std::complex<double>(0.0, 1.0) * w[t];
        basis.push_back(iw);
    }
    return basis;
}

struct ChartResiduals {
    double invariants = 0.0;
    double norm = 0.0;
    double roundtrip = 0.0;
    double pullback = 0.0;
    double jacobian = 0.0;
    double real_slice = 0.0;
};

template <std::size_t N>
ChartResiduals chart_residuals(int samples, Rng& rng) {
    ChartResiduals r;
    for (int s = 0; s < samples; ++s) {
        const QuadricPoint<N> p = sample_quadric<N>(rng);
        const CotangentPoint<N> q = chart(p);

        double xnorm2 = 0.0;
        for (std::size_t j = 0; j < N; ++j) xnorm2 += p.z[j].real() * p.z[j].real();
        chmax(r.invariants, std::abs(std::sqrt(rdot(q.u, q.u)) - 1.0));
        chmax(r.invariants, std::abs(rdot(q.u, q.v)));
        chmax(r.norm, std::abs(std::sqrt(rdot(q.v, q.v)) - xnorm2));

        const QuadricPoint<N> back = chart_inverse(q);
        for (std::size_t j = 0; j < N; ++j) chmax(r.roundtrip, std::abs(back.z[j] - p.z[j]));

        const std::vector<CVec<N>> basis = tangent_basis(p);
        for (std::size_t m1 = 0; m1 < basis.size(); ++m1)
            for (std::size_t m2 = m1 + 1; m2 < basis.size(); ++m2)
                chmax(r.pullback, std::abs(pulled_back_form(p, basis[m1], basis[m2]) -
                                           kaehler_form(basis[m1], basis[m2])));

        for (const CVec<N>& w : basis) {
            const ChartDifferential<N> an = chart_differential(p, w);
            const ChartDifferential<N> fd = finite_difference(p, w);
            for (std::size_t j = 0; j < N; ++j) {
                chmax(r.jacobian, std::abs(an.du[j] - fd.du[j]));
                chmax(r.jacobian, std::abs(an.dv[j] - fd.dv[j]));
            }
        }
    }
    // Real points (Im z = 0) land on the zero section, where the pulled back
    // form vanishes on real directions.
    for (int s = 0; s < samples; ++s) {
        const RVec<N> x = unit_vector<N>(rng);
        const double scale = 0.5 + 1.5 * rng.unit();
        QuadricPoint<N> p;
        for (std::size_t j = 0; j < N; ++j) p.z[j] = scale * x[j];
        const CotangentPoint<N> q = chart(p);
        chmax(r.real_slice, std::sqrt(rdot(q.v, q.v)));
        CVec<N> w1{}, w2{};
        const RVec<N> t1 = unit_vector<N>(rng);
        const RVec<N> t2 = unit_vector<N>(rng);
        for (std::size_t j = 0; j < N; ++j) {
            w1[j] = t1[j];
            w2[j] = t2[j];
        }
        chmax(r.real_slice, std::abs(pulled_back_form(p, w1, w2)));
    }
    return r;
}

RVec<4> left_i(const RVec<4>& u) { return {-u[1], u[0], -u[3], u[2]}; }

CollarCheck collar_at(double t, bool opposite) {
    if (t == 0.0) throw DataError("the node t = 0 has no chart image");
    QuadricPoint<4> p;
    p.z[0] = std::complex<double>(0.0, opposite ? -t : t);
    p.z[1] = t;
    p.residual = quadric_residual(p.z);
    const CotangentPoint<4> q = chart(p);
    const RVec<4> iu = left_i(q.u);
    const double lambda = rdot(q.v, iu);
    RVec<4> diff{};
    for (std::size_t j = 0; j < 4; ++j) diff[j] = q.v[j] - lambda * iu[j];
    const double expected = opposite ? -t * t : t * t;
    const double tol = kAlgebraicTol * (1.0 + t * t);
    CollarCheck out;
    out.lambda = lambda;
    out.model_residual = std::sqrt(rdot(diff, diff));
    out.on_positive_branch = lambda > 0.0;
    out.pass = out.model_residual <= tol && std::abs(lambda - expected) <= tol &&
               p.residual <= tol;
    return out;
}

Quaternion qneg(const Quaternion& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

double qdist(const Quaternion& a, const Quaternion& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < 4; ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

Quaternion random_unit_imaginary(Rng& rng) {
    const RVec<3> w = unit_vector<3>(rng);
    return {0.0, w[0], w[1], w[2]};
}

}  // namespace

const CheckResult* ResidualReport::find(const std::string& name) const {
    for (const CheckResult& check : checks)
        if (check.name == name) return &check;
    return nullptr;
}

CotangentPoint<4> phi(const QuadricPoint<4>& p) { return chart(p); }
CotangentPoint<3> phi3(const QuadricPoint<3>& p) { return chart(p); }
QuadricPoint<4> phi_inverse(const CotangentPoint<4>& p) { return chart_inverse(p); }
QuadricPoint<3> phi3_inverse(const CotangentPoint<3>& p) { return chart_inverse(p); }

ResidualReport verify_symplectomorphism(int samples, std::uint64_t seed) {
    require_samples(samples);
    Rng rng(seed);
    const ChartResiduals r = chart_residuals<4>(samples, rng);
    ResidualReport report;
    report.seed = seed;
    report.samples = samples;
    report.checks = {
        make_check("phi-chart-invariants", r.invariants, kAlgebraicTol),
        make_check("phi-norm-compatibility", r.norm, kAlgebraicTol),
        make_check("phi-roundtrip", r.roundtrip, kAnalyticTol),
        make_check("pullback-identity", r.pullback, kAnalyticTol),
        make_check("jacobian-finite-difference", r.jacobian, kFiniteDiffTol),
        make_check("zero-section-lagrangian", r.real_slice, kAlgebraicTol),
    };
    report.pass = all_pass(report.checks);
    return report;
}

CollarCheck verify_collar(double t) { return collar_at(t, false); }
CollarCheck verify_collar_opposite(double t) { return collar_at(t, true); }

ResidualReport moment_checks(int samples, std::uint64_t seed) {
    require_samples(samples);
    Rng rng(seed);
    double alg = 0.0, h1r = 0.0, h2r = 0.0, fdr = 0.0, level = 0.0;
    for (int s = 0; s < samples; ++s) {
        RVec<4> a{}, b{}, al{}, be{};
        for (double& c : a) c = rng.normal();
        for (double& c : b) c = rng.normal();
        for (double& c : al) c = rng.normal();
        for (double& c : be) c = rng.normal();

        std::complex<double> zsum = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            const std::complex<double> z(a[j], b[j]);
            zsum += z * z;
        }
        const std::complex<double> closed(rdot(a, a) - rdot(b, b), 2.0 * rdot(b, a));
        chmax(alg, std::abs(zsum - closed));

        // omega = sum da_j ^ db_j contracted with the two rotation fields,
        // against the analytic gradients of <b, a> and (|b|^2 - |a|^2) / 2
        const double dh1 = rdot(b, al) + rdot(a, be);
        const double dh2 = rdot(b, be) - rdot(a, al);
        chmax(h1r, std::abs((rdot(a, be) + rdot(al, b)) - dh1));
        chmax(h2r, std::abs((rdot(b, be) - rdot(al, a)) - dh2));

        const double h = kFiniteDiffStep;
        RVec<4> af{}, ab{}, bf{}, bb{};
        for (std::size_t j = 0; j < 4; ++j) {
            af[j] = a[j] + h * al[j];
            ab[j] = a[j] - h * al[j];
            bf[j] = b[j] + h * be[j];
            bb[j] = b[j] - h * be[j];
        }
        chmax(fdr, std::abs((rdot(bf, af) - rdot(bb, ab)) / (2.0 * h) - dh1));
        chmax(fdr, std::abs(0.5 * ((rdot(bf, bf) - rdot(af, af)) -
                                   (rdot(bb, bb) - rdot(ab, ab))) / (2.0 * h) - dh2));

        // a point of {sum z_j^2 = eps} built from an orthonormal pair,
        // doubling alpha until the radicand is nonnegative
        const std::complex<double> eps(3.0 * (rng.unit() - 0.5), 3.0 * (rng.unit() - 0.5));
        const RVec<4> e = unit_vector<4>(rng);
        const RVec<4> f = unit_orthogonal<4>(rng, e);
        double alpha = 0.7 + 1.3 * rng.unit();
        double gamma = eps.imag() / (2.0 * alpha);
        while (alpha * alpha - gamma * gamma - eps.real() < 0.0) {
            alpha *= 2.0;
            gamma = eps.imag() / (2.0 * alpha);
        }
        const double beta = std::sqrt(alpha * alpha - gamma * gamma - eps.real());
        std::complex<double> on_level = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            const std::complex<double> z(alpha * e[j], beta * f[j] + gamma * e[j]);
            on_level += z * z;
        }
        chmax(level, std::abs(on_level - eps));
    }
    ResidualReport report;
    report.seed = seed;
    report.samples = samples;
    report.checks = {
        make_check("moment-algebraic-identity", alg, kAlgebraicTol),
        make_check("hamiltonian-h1", h1r, kAlgebraicTol),
        make_check("hamiltonian-h2", h2r, kAlgebraicTol),
        make_check("hamiltonian-finite-difference", fdr, kFiniteDiffTol),
        make_check("level-set-membership", level, kAlgebraicTol),
    };
    report.pass = all_pass(report.checks);
    return report;
}

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion qconj(const Quaternion& a) { return {a[0], -a[1], -a[2], -a[3]}; }

double qnorm(const Quaternion& a) { return rdot(a, a); }

Quaternion qinv(const Quaternion& a) {
    const double n = qnorm(a);
    if (n == 0.0) throw DataError("zero quaternion has no inverse");
    return {a[0] / n, -a[1] / n, -a[2] / n, -a[3] / n};
}

Quaternion conjugated_structure(const Quaternion& a, const Quaternion& j) {
    if (std::abs(qnorm(a) - 1.0) > kAlgebraicTol)
        throw DataError("conjugation needs a unit quaternion");
    if (std::abs(qnorm(j) - 1.0) > kAlgebraicTol || std::abs(j[0]) > kAlgebraicTol)
        throw DataError("structure must be a unit imaginary quaternion");
    return qmul(qmul(qinv(a), j), a);
}

std::pair<Quaternion, Quaternion> induced_structures(const Quaternion& a, const Quaternion& b) {
    if (std::abs(qnorm(a) - 1.0) > kAlgebraicTol || std::abs(qnorm(b) - 1.0) > kAlgebraicTol)
        throw DataError("pair must consist of unit quaternions");
    if (std::abs(rdot(a, b)) > kAlgebraicTol) throw DataError("pair must be orthogonal");
    return {qmul(b, qconj(a)), qmul(qconj(a), b)};
}

ResidualReport quaternion_maps(int samples, std::uint64_t seed) {
    require_samples(samples);
    Rng rng(seed);
    double intertwine = 0.0, unit_imag = 0.0, maps = 0.0, swapn = 0.0, order4 = 0.0,
           frame = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Quaternion a = unit_vector<4>(rng);
        const Quaternion j = random_unit_imaginary(rng);
        const Quaternion jp = conjugated_structure(a, j);
        chmax(intertwine, qdist(qmul(j, a), qmul(a, jp)));
        chmax(unit_imag, std::abs(qnorm(jp) - 1.0));
        chmax(unit_imag, std::abs(jp[0]));

        const Quaternion p = unit_vector<4>(rng);
        const Quaternion q = unit_orthogonal<4>(rng, p);
        const auto [jl, jr] = induced_structures(p, q);
        chmax(maps, qdist(qmul(jl, p), q));
        chmax(maps, qdist(qmul(p, jr), q));
        const auto [sl, sr] = induced_structures(q, p);
        chmax(swapn, qdist(sl, qneg(jl)));
        chmax(swapn, qdist(sr, qneg(jr)));

        Quaternion ca = p, cb = q;
        for (int turn = 0; turn < 4; ++turn) {
            const Quaternion na = cb;
            const Quaternion nb = qneg(ca);
            ca = na;
            cb = nb;
            chmax(frame, std::abs(qnorm(ca) - 1.0));
            chmax(frame, std::abs(qnorm(cb) - 1.0));
            chmax(frame, std::abs(rdot(ca, cb)));
            if (turn == 1) {
                chmax(order4, qdist(ca, qneg(p)));
                chmax(order4, qdist(cb, qneg(q)));
            }
        }
        chmax(order4, qdist(ca, p));
        chmax(order4, qdist(cb, q));
    }
    ResidualReport report;
    report.seed = seed;
    report.samples = samples;
    report.checks = {
        make_check("conjugation-intertwines", intertwine, kAlgebraicTol),
        make_check("conjugated-structure-unit-imaginary", unit_imag, kAlgebraicTol),
        make_check("left-structure-maps-a-to-b", maps, kAlgebraicTol),
        make_check("swap-negates-structures", swapn, kAlgebraicTol),
        make_check("quarter-turn-order-four", order4, kAlgebraicTol),
        make_check("quarter-turn-preserves-frame", frame, kAlgebraicTol),
    };
    report.pass = all_pass(report.checks);
    return report;
}

ResidualReport grassmannian_maps(int samples, std::uint64_t seed) {
    require_samples(samples);
    Rng rng(seed);
    double line = 0.0, transport = 0.0, unit_imag = 0.0, swapn = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Quaternion a = unit_vector<4>(rng);
        const Quaternion b = unit_orthogonal<4>(rng, a);
        CVec<4> z{};
        for (std::size_t j = 0; j < 4; ++j) z[j] = std::complex<double>(a[j], b[j]);
        chmax(line, quadric_residual(z));
        const std::complex<double> scale(rng.normal(), rng.normal());
        CVec<4> scaled{};
        for (std::size_t j = 0; j < 4; ++j) scaled[j] = scale * z[j];
        chmax(line, quadric_residual(scaled));

        const auto [jl, jr] = induced_structures(a, b);
        chmax(transport, qdist(qmul(jl, a), b));
        chmax(transport, qdist(qmul(jl, b), qneg(a)));
        chmax(transport, qdist(qmul(a, jr), b));
        chmax(transport, qdist(qmul(b, jr), qneg(a)));
        chmax(unit_imag, std::abs(qnorm(jl) - 1.0));
        chmax(unit_imag, std::abs(jl[0]));
        chmax(unit_imag, std::abs(qnorm(jr) - 1.0));
        chmax(unit_imag, std::abs(jr[0]));

        const auto [sl, sr] = induced_structures(b, a);
        chmax(swapn, qdist(sl, qneg(jl)));
        chmax(swapn, qdist(sr, qneg(jr)));
    }
    ResidualReport report;
    report.seed = seed;
    report.samples = samples;
    report.checks = {
        make_check("line-on-quadric", line, kAlgebraicTol),
        make_check("structures-transport-frame", transport, kAlgebraicTol),
        make_check("structures-unit-imaginary", unit_imag, kAlgebraicTol),
        make_check("swapped-pair-negates", swapn, kAlgebraicTol),
    };
    report.pass = all_pass(report.checks);
    return report;
}

ResidualReport local_model_dim2(int samples, std::uint64_t seed) {
    require_samples(samples);
    Rng rng(seed);
    const ChartResiduals r = chart_residuals<3>(samples, rng);
    ResidualReport report;
    report.seed = seed;
    report.samples = samples;
    report.checks = {
        make_check("dim2-roundtrip", r.roundtrip, kAnalyticTol),
        make_check("dim2-pullback-identity", r.pullback, kAnalyticTol),
        make_check("dim2-jacobian-finite-difference", r.jacobian, kFiniteDiffTol),
        make_check("dim2-real-slice-zero-section", r.real_slice, kAlgebraicTol),
    };
    report.pass = all_pass(report.checks);
    return report;
}

std::array<long long, 4> pi3_action_matrix() { return {-1, 0, 1, 1}; }

ResidualReport verify_all(int samples, std::uint64_t seed) {
    require_samples(samples);
    ResidualReport all;
    all.seed = seed;
    all.samples = samples;
    const ResidualReport parts[] = {
        verify_symplectomorphism(samples, seed),
        moment_checks(samples, seed + 1),
        quaternion_maps(samples, seed + 2),
        grassmannian_maps(samples, seed + 3),
        local_model_dim2(samples, seed + 4),
    };
    for (const ResidualReport& part : parts)
        all.checks.insert(all.checks.end(), part.checks.begin(), part.checks.end());

    double positive = 0.0, negative = 0.0;
    for (double t : {0.25, 0.5, 1.0, 1.5, 2.0}) {
        for (double sign : {1.0, -1.0}) {
            const CollarCheck c = verify_collar(sign * t);
            chmax(positive, c.model_residual);
            chmax(positive, std::abs(c.lambda - t * t));
            const CollarCheck o = verify_collar_opposite(sign * t);
            chmax(negative, o.model_residual);
            chmax(negative, std::abs(o.lambda + t * t));
        }
    }
    all.checks.push_back(make_check("collar-positive-branch", positive, kAlgebraicTol));
    all.checks.push_back(make_check("collar-negative-branch", negative, kAlgebraicTol));
    all.pass = all_pass(all.checks);
    return all;
}

}  // namespace conifold
