#include "ellwall/chern.hpp"

#include "ellwall/errors.hpp"

namespace ellwall {

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& o) {
    ch0 += o.ch0;
    ch1 += o.ch1;
    ch2 += o.ch2;
    return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& o) {
    ch0 -= o.ch0;
    ch1 -= o.ch1;
    ch2 -= o.ch2;
    return *this;
}

ChernCharacter& ChernCharacter::operator*=(const Rational& k) {
    ch0 *= k;
    ch1 *= k;
    ch2 *= k;
    return *this;
}

ChernCharacter twist(const ChernCharacter& ch, const DivisorClass& B, const SurfaceConfig& cfg) {
    check_dimension(ch.ch1, cfg);
    ChernCharacter out;
    out.ch0 = ch.ch0;
    out.ch1 = ch.ch1 - ch.ch0 * B;
    out.ch2 = ch.ch2 - intersect(B, ch.ch1, cfg) + intersect(B, B, cfg) / 2 * ch.ch0;
    return out;
}

ChernCharacter line_bundle_twist(const ChernCharacter& ch, const DivisorClass& L, const SurfaceConfig& cfg) {
    return twist(ch, -L, cfg);
}

void require_ample(const DivisorClass& omega, const SurfaceConfig& cfg) {
    check_dimension(omega, cfg);
    if (cfg.rank() == 2 && !cone_membership(omega, cfg).ample) throw DomainError("omega is not ample");
}

Slope slope(const ChernCharacter& ch, const DivisorClass& omega, const DivisorClass& B, const SurfaceConfig& cfg) {
    require_ample(omega, cfg);
    if (ch.ch0 == 0) return {true, Rational(0)};
    ChernCharacter t = twist(ch, B, cfg);
    return {false, intersect(omega, t.ch1, cfg) / t.ch0};
}

Rational discriminant(const ChernCharacter& ch, const SurfaceConfig& cfg) {
    return intersect(ch.ch1, ch.ch1, cfg) - 2 * ch.ch0 * ch.ch2;
}

bool is_bogomolov_type(const ChernCharacter& ch, const SurfaceConfig& cfg) { return discriminant(ch, cfg) >= 0; }

DiscriminantReport discriminants(const ChernCharacter& ch, const DivisorClass& omega, const DivisorClass& B,
                                 const Rational& C, const SurfaceConfig& cfg) {
    ChernCharacter t = twist(ch, B, cfg);
    Rational deg = intersect(t.ch1, omega, cfg);
    DiscriminantReport r;
    r.delta = discriminant(ch, cfg);
    r.delta_bar = deg * deg - 2 * t.ch0 * t.ch2 * intersect(omega, omega, cfg);
    r.delta_C = r.delta + C * deg * deg;
    r.constant_used = C;
    return r;
}

Rational bogomolov_constant(const Rational& u0, const SurfaceConfig& cfg) {
    if (cfg.rank() != 2) throw UnsupportedError("Bogomolov constant is only available for rank 2");
    if (cfg.m() <= cfg.e()) throw DomainError("Bogomolov constant requires m > e");
    if (u0 <= 0) throw DomainError("u0 must be positive");
    if (cfg.e() == 0) return 0;
    Rational gap = cfg.m() - cfg.e();
    return Rational(cfg.e()) / (u0 * u0 * gap * gap);
}

Rational twisted_euler(const ChernCharacter& ch, const SurfaceConfig& cfg) {
    return ch.ch2 - cfg.half_e() * ch.d(cfg) + ch.ch0 * cfg.euler_char();
}

GiesekerSlope gieseker_slope_1dim(const ChernCharacter& ch, const VolumeSectionParams& vp, const SurfaceConfig& cfg) {
    if (ch.ch0 != 0) throw DomainError("Gieseker slope requires ch0 = 0");
    auto theta_m = DivisorClass::theta_f(1, cfg.m(), cfg);
    Rational a = intersect(ch.ch1, theta_m, cfg);
    Rational b = ch.d(cfg);
    Rational deg = vp.beta / vp.alpha * a + vp.beta * b;
    if (deg <= 0) throw DomainError("Gieseker slope requires ch1.omega_bar > 0");
    Rational chi = twisted_euler(ch, cfg);
    return {chi / deg, vp.alpha * chi / (a + vp.alpha * b)};
}

Rational torsion_free_threshold(const ChernCharacter& ch, const Rational& m0, const SurfaceConfig& cfg) {
    if (ch.ch0 != 0) throw DomainError("torsion-free threshold requires ch0 = 0");
    Rational d = ch.d(cfg);
    if (d <= 0) throw DomainError("torsion-free threshold requires ch1.f > 0");
    Rational chi = twisted_euler(ch, cfg);
    return ch.c(cfg) / d * (chi - 1) + m0 * chi;
}

}  // namespace ellwall
