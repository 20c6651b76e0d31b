#include "ellwall/nslattice.hpp"

#include "ellwall/errors.hpp"

namespace ellwall {

SurfaceConfig SurfaceConfig::make(std::int64_t e, std::int64_t genus_base, const Rational& m,
                                  std::optional<Rational> euler_char, std::vector<ExtraSection> sections) {
    if (e < 0) throw DomainError("e must be nonnegative");
    if (genus_base < 0) throw DomainError("genus_base must be nonnegative");
    if (m <= 0) throw DomainError("m must be positive");
    if (sections.empty() && m <= e) throw DomainError("rank 2 requires m > e (Theta+mf ample)");

    SurfaceConfig cfg;
    cfg.e_ = e;
    cfg.genus_base_ = genus_base;
    cfg.m_ = m;
    cfg.euler_char_ = euler_char ? *euler_char : Rational(e);
    const std::size_t r = sections.size();
    bool any_cross = false;
    for (std::size_t i = 0; i < r; ++i) {
        const auto& s = sections[i];
        if (s.theta < 0) throw DomainError("section theta must be nonnegative");
        if (!s.cross.empty() && s.cross.size() != r)
            throw DimensionError("section cross list must have one entry per extra section");
        if (!s.cross.empty()) any_cross = true;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            std::int64_t a = sections[i].cross.empty() ? 0 : sections[i].cross[j];
            std::int64_t b = sections[j].cross.empty() ? 0 : sections[j].cross[i];
            if (a != b) throw DomainError("section cross intersections are not symmetric");
        }
    if (r >= 2 && !any_cross)
        cfg.warnings_.push_back("Theta_i.Theta_j not supplied; assuming 0 for i != j");
    cfg.sections_ = std::move(sections);

    const std::size_t n = cfg.rank();
    cfg.gram_.assign(n * n, Rational(0));
    auto set = [&](std::size_t i, std::size_t j, const Rational& v) {
        cfg.gram_[i * n + j] = v;
        cfg.gram_[j * n + i] = v;
    };
    set(0, 0, Rational(-e));
    set(0, 1, Rational(1));
    set(1, 1, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
        set(0, 2 + i, Rational(cfg.sections_[i].theta));
        set(1, 2 + i, Rational(1));
        set(2 + i, 2 + i, Rational(-e));
        for (std::size_t j = i + 1; j < r; ++j)
            set(2 + i, 2 + j, Rational(cfg.sections_[i].cross.empty() ? 0 : cfg.sections_[i].cross[j]));
    }
    return cfg;
}

DivisorClass DivisorClass::zero(const SurfaceConfig& cfg) {
    return DivisorClass(std::vector<Rational>(cfg.rank(), Rational(0)));
}

DivisorClass DivisorClass::theta(const SurfaceConfig& cfg) {
    auto d = zero(cfg);
    d[0] = 1;
    return d;
}

DivisorClass DivisorClass::fiber(const SurfaceConfig& cfg) {
    auto d = zero(cfg);
    d[1] = 1;
    return d;
}

DivisorClass DivisorClass::section(std::size_t i, const SurfaceConfig& cfg) {
    if (i >= cfg.sections().size()) throw DimensionError("no such extra section");
    auto d = zero(cfg);
    d[2 + i] = 1;
    return d;
}

DivisorClass DivisorClass::theta_f(const Rational& a, const Rational& b, const SurfaceConfig& cfg) {
    auto d = zero(cfg);
    d[0] = a;
    d[1] = b;
    return d;
}

bool DivisorClass::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool DivisorClass::in_theta_f_span() const {
    for (std::size_t i = 2; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (o.size() != size()) throw DimensionError("divisor classes over different bases");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (o.size() != size()) throw DimensionError("divisor classes over different bases");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

void check_dimension(const DivisorClass& d, const SurfaceConfig& cfg) {
    if (d.size() != cfg.rank())
        throw DimensionError("divisor has " + std::to_string(d.size()) + " coefficients, surface rank is " +
                             std::to_string(cfg.rank()));
}

Rational intersect(const DivisorClass& a, const DivisorClass& b, const SurfaceConfig& cfg) {
    check_dimension(a, cfg);
    check_dimension(b, cfg);
    const std::size_t n = cfg.rank();
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (b[j] != 0) row += cfg.pairing(i, j) * b[j];
        total += a[i] * row;
    }
    return total;
}

ConeMembership cone_membership(const DivisorClass& d, const SurfaceConfig& cfg) {
    check_dimension(d, cfg);
    if (cfg.rank() != 2) throw UnsupportedError("cone membership is only available for rank 2");
    const Rational& a = d[0];
    Rational rest = d[1] - cfg.e() * a;  // coefficient of f against the nef generator Θ+ef
    ConeMembership c;
    c.nef = a >= 0 && rest >= 0;
    c.ample = a > 0 && rest > 0;
    c.effective_curve_cone = a >= 0 && d[1] >= 0;
    return c;
}

Frame Frame::make(DivisorClass H, DivisorClass Hperp, const Rational& w, const SurfaceConfig& cfg) {
    Frame fr;
    fr.g = intersect(H, H, cfg);
    fr.delta = -intersect(Hperp, Hperp, cfg);
    if (intersect(H, Hperp, cfg) != 0) throw DomainError("frame requires H.Hperp = 0");
    if (fr.g <= 0) throw DomainError("frame requires H.H > 0");
    if (fr.delta < 0) throw DomainError("frame requires Hperp.Hperp <= 0");
    if (fr.delta == 0 && !Hperp.is_zero()) throw DomainError("frame requires Hperp = 0 when Hperp.Hperp = 0");
    fr.H = std::move(H);
    fr.Hperp = std::move(Hperp);
    fr.w = w;
    return fr;
}

Rational elliptic_frame_g(const Rational& lambda, const SurfaceConfig& cfg) {
    Rational c = cfg.m() - cfg.half_e() - 1;
    return 2 * lambda * (1 + c * lambda);
}

Frame elliptic_frame(const Rational& lambda, const SurfaceConfig& cfg) {
    if (lambda <= 0 || lambda >= 1) throw DomainError("lambda must lie in (0,1)");
    const Rational& m = cfg.m();
    auto H = DivisorClass::theta_f(lambda, lambda * m + 1 - lambda, cfg);
    auto Hp = DivisorClass::theta_f(-lambda, -lambda * m + 1 + (2 * m - cfg.e() - 1) * lambda, cfg);
    Frame fr = Frame::make(std::move(H), std::move(Hp), Rational(0), cfg);
    Rational expect = elliptic_frame_g(lambda, cfg);
    if (fr.g != expect || fr.delta != expect) throw InvariantError("elliptic frame g/delta mismatch");
    return fr;
}

FrameDecomposition decompose(const DivisorClass& d, const Frame& fr, const SurfaceConfig& cfg) {
    FrameDecomposition out;
    out.l1 = intersect(d, fr.H, cfg) / fr.g;
    out.l2 = fr.delta == 0 ? Rational(0) : Rational(-intersect(d, fr.Hperp, cfg) / fr.delta);
    out.residual = d - out.l1 * fr.H - out.l2 * fr.Hperp;
    return out;
}

PointUV make_uv(const Rational& u, const Rational& v) {
    if (u <= 0 || v <= 0) throw DomainError("UV point requires u > 0 and v > 0");
    return {u, v};
}

PointLambdaT make_lambda_t(const Rational& lambda, const Rational& t) {
    if (lambda <= 0 || lambda >= 1) throw DomainError("lambda must lie in (0,1)");
    if (t <= 0) throw DomainError("t must be positive");
    return {lambda, t};
}

PointSQ make_sq(const Rational& s, const Rational& q) {
    if (q <= s * s / 2) throw DomainError("SQ point requires q > s^2/2");
    return {s, q};
}

PointLambdaT to_lambda_t(const PointUV& p) {
    Rational t = p.u + p.v;
    return {p.u / t, t};
}

PointUV to_uv(const PointLambdaT& p) { return {p.lambda * p.t, (1 - p.lambda) * p.t}; }

PointLambdaQ to_lambda_q(const PointUV& p) {
    PointLambdaT lt = to_lambda_t(p);
    return {lt.lambda, Rational(0), lt.t * lt.t / 2};
}

ShearPoint shear(const PointUV& p, const SurfaceConfig& cfg) {
    Rational a = cfg.m() - cfg.half_e();
    return {p.u, p.v + a * p.u};
}

PointUV unshear(const ShearPoint& p, const SurfaceConfig& cfg) {
    Rational a = cfg.m() - cfg.half_e();
    return {p.u_prime, p.v_prime - a * p.u_prime};
}

DivisorClass polarisation(const Rational& u, const Rational& v, const SurfaceConfig& cfg) {
    return DivisorClass::theta_f(u, u * cfg.m() + v, cfg);
}

VolumeSectionParams VolumeSectionParams::make(const Rational& alpha, const Rational& beta, const SurfaceConfig& cfg) {
    if (alpha <= 0) throw DomainError("alpha must be positive");
    if (beta <= 0) throw DomainError("beta must be positive");
    return {alpha, beta, alpha + cfg.m() - cfg.e()};
}

void require_nonempty_section(const VolumeSectionParams& vp) {
    if (vp.K <= 0) throw DomainError("volume section is empty: K = alpha+m-e <= 0");
}

bool on_volume_section(const PointUV& p, const VolumeSectionParams& vp, const SurfaceConfig& cfg) {
    Rational a = cfg.m() - cfg.half_e();
    return a * p.u * p.u + p.u * p.v == vp.K;
}

bool on_volume_section(const PointLambdaQ& p, const VolumeSectionParams& vp, const SurfaceConfig& cfg) {
    Rational c = cfg.m() - cfg.half_e() - 1;
    return 2 * p.q * (p.lambda + c * p.lambda * p.lambda) == vp.K;
}

Rational section_q(const Rational& lambda, const VolumeSectionParams& vp, const SurfaceConfig& cfg) {
    Rational c = cfg.m() - cfg.half_e() - 1;
    Rational den = 2 * (lambda + c * lambda * lambda);
    if (den <= 0) throw DomainError("volume section has no point at this lambda");
    return vp.K / den;
}

SectionRoot volume_section_u(const Rational& v, const VolumeSectionParams& vp, const SurfaceConfig& cfg,
                             const Rational& width) {
    require_nonempty_section(vp);
    if (v <= 0) throw DomainError("v must be positive");
    if (width <= 0) throw DomainError("enclosure width must be positive");
    Rational a = cfg.m() - cfg.half_e();
    if (a < 0) throw DomainError("m < e/2: the section constraint has no monotone positive branch");

    // Clear denominators of a·u² + v·u − K.
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), v.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), vp.K.get_den().get_mpz_t());
    Rational ra = a * l, rb = v * l, rc = -vp.K * l;
    SectionRoot root;
    root.a = ra.get_num();
    root.b = rb.get_num();
    root.c = rc.get_num();
    root.larger_root = true;

    if (a == 0) {
        root.exact = vp.K / v;
    } else {
        Rational disc = v * v + 4 * a * vp.K;
        if (auto s = exact_sqrt(disc)) root.exact = (*s - v) / (2 * a);
    }
    if (root.exact) {
        root.lo = root.hi = *root.exact;
        return root;
    }
    Rational lo = 0, hi = vp.K / v;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        Rational f = a * mid * mid + v * mid - vp.K;
        if (f == 0) {
            root.exact = mid;
            root.lo = root.hi = mid;
            return root;
        }
        (f < 0 ? lo : hi) = mid;
    }
    root.lo = lo;
    root.hi = hi;
    return root;
}

}  // namespace ellwall
