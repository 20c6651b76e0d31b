#include "ellwall/charge.hpp"

#include "ellwall/errors.hpp"
#include "ellwall/fmtransform.hpp"

namespace ellwall {

ChargeValue central_charge(const ChernCharacter& ch, const DivisorClass& omega, const DivisorClass& B,
                           const SurfaceConfig& cfg) {
    require_ample(omega, cfg);
    ChernCharacter t = twist(ch, B, cfg);
    Rational half_sq = intersect(omega, omega, cfg) / 2;
    return {-t.ch2 + half_sq * t.ch0, intersect(omega, t.ch1, cfg)};
}

ChargeValue charge_sq(const ChernCharacter& ch, const PointSQ& pt, const Frame& fr, const SurfaceConfig& cfg) {
    if (pt.q <= pt.s * pt.s / 2) throw DomainError("charge_sq requires q > s^2/2");
    const Rational& x = ch.ch0;
    Rational re = -ch.ch2 + x * fr.g * pt.q + x * fr.delta * fr.w * fr.w / 2 + fr.w * intersect(ch.ch1, fr.Hperp, cfg);
    Rational im = intersect(ch.ch1, fr.H, cfg) - x * fr.g * pt.s;
    return {re, im};
}

ChargeValue LimitCharge::evaluate(const Rational& v_prime) const {
    if (v_prime == 0) throw DomainError("v' must be nonzero");
    return {re_const, im_hi * v_prime + im_lo / v_prime};
}

LimitCharge limit_charge(const ChernCharacter& ch, const VolumeSectionParams& vp, const SurfaceConfig& cfg) {
    require_nonempty_section(vp);
    check_dimension(ch.ch1, cfg);
    auto ell = DivisorClass::theta_f(1, cfg.half_e(), cfg);
    LimitCharge lc;
    lc.K = vp.K;
    lc.ch0 = ch.ch0;
    lc.re_const = -ch.ch2 + vp.K * ch.ch0;
    lc.im_hi = ch.d(cfg);
    lc.im_lo = vp.K * intersect(ell, ch.ch1, cfg);
    return lc;
}

std::string to_string(LimitPhase p) {
    switch (p) {
        case LimitPhase::Zero: return "0";
        case LimitPhase::Half: return "1/2";
        case LimitPhase::One: return "1";
    }
    return "?";
}

std::string to_string(Order o) {
    switch (o) {
        case Order::Precedes: return "precedes";
        case Order::Equal: return "equal";
        case Order::Succeeds: return "succeeds";
    }
    return "?";
}

PhaseLimit phase_limit(const LimitCharge& lc) {
    const int r = sgn(lc.re_const);
    const int rank = sgn(lc.ch0);
    if (lc.im_hi > 0) {
        std::string tag = rank == 0 ? "2.1" : rank > 0 ? "3" : "6";
        return {LimitPhase::Half, r == 0, tag};
    }
    if (lc.im_hi == 0 && lc.im_lo > 0) {
        if (rank != 0) {
            if (r > 0) return {LimitPhase::Zero, false, "sign case"};
            if (r < 0) return {LimitPhase::One, false, "sign case"};
            return {LimitPhase::Half, true, "sign case"};
        }
        if (r < 0) return {LimitPhase::One, false, "2.2.1"};
        if (r == 0) return {LimitPhase::Half, true, "2.2.2"};
        return {LimitPhase::Zero, false, "2.2.3"};
    }
    if (lc.im_hi == 0 && lc.im_lo == 0 && r < 0) return {LimitPhase::One, true, rank == 0 ? "1" : "sign case"};
    throw NotInHeartError("limit charge leaves the closed upper half-plane for large v'");
}

LimitComparison limit_compare(const LimitCharge& m, const LimitCharge& n) {
    phase_limit(m);
    phase_limit(n);
    LimitComparison out;
    out.cross_coeffs[0] = m.re_const * n.im_hi - n.re_const * m.im_hi;
    out.cross_coeffs[1] = m.re_const * n.im_lo - n.re_const * m.im_lo;
    out.order = Order::Equal;
    for (const auto& c : out.cross_coeffs) {
        if (c > 0) {
            out.order = Order::Precedes;
            break;
        }
        if (c < 0) {
            out.order = Order::Succeeds;
            break;
        }
    }
    return out;
}

bool re_z_identity_check(const ChernCharacter& ch, const VolumeSectionParams& vp, const SurfaceConfig& cfg) {
    auto B = DivisorClass::theta_f(0, cfg.half_e(), cfg);
    Rational ratio = vp.beta / vp.alpha;
    auto omega_bar = DivisorClass::theta_f(ratio, ratio * cfg.m() + vp.beta, cfg);
    Rational lhs = intersect(omega_bar, twist(ch, B, cfg).ch1, cfg);
    Rational rhs = -ratio * limit_charge(-phi(ch, cfg), vp, cfg).re_const;
    return lhs == rhs;
}

}  // namespace ellwall
