#include "ellwall/fmtransform.hpp"

#include "ellwall/errors.hpp"

namespace ellwall {

namespace {

void require_span(const ChernCharacter& ch, const SurfaceConfig& cfg) {
    check_dimension(ch.ch1, cfg);
    if (!ch.ch1.in_theta_f_span())
        throw UnsupportedError("Fourier-Mukai transform needs ch1 in span{Theta, f}");
}

}  // namespace

ChernCharacter phi(const ChernCharacter& ch, const SurfaceConfig& cfg) {
    require_span(ch, cfg);
    const Rational e = cfg.e();
    const Rational& n = ch.n();
    const Rational d = ch.d(cfg);
    const Rational c = ch.c(cfg);
    const Rational& s = ch.s();
    ChernCharacter out;
    out.ch0 = d;
    out.ch1 = -ch.ch1 + DivisorClass::theta_f(d - n, d * e + c - e * d / 2 + s, cfg);
    out.ch2 = -c - d * e + n * e / 2;
    return out;
}

ChernCharacter phi_hat(const ChernCharacter& ch, const SurfaceConfig& cfg) {
    require_span(ch, cfg);
    const Rational e = cfg.e();
    const Rational& n = ch.n();
    const Rational d = ch.d(cfg);
    const Rational c = ch.c(cfg);
    const Rational& s = ch.s();
    ChernCharacter out;
    out.ch0 = d;
    out.ch1 = ch.ch1 + DivisorClass::theta_f(-(d + n), -n * e + s + e * n - c - e * d / 2, cfg);
    out.ch2 = -(c + d * e + e * n / 2);
    return out;
}

ChernCharacter apply(Functor which, const ChernCharacter& ch, const SurfaceConfig& cfg) {
    return which == Functor::Phi ? phi(ch, cfg) : phi_hat(ch, cfg);
}

bool composition_check(const ChernCharacter& ch, const SurfaceConfig& cfg) {
    ChernCharacter neg = -ch;
    return phi_hat(phi(ch, cfg), cfg) == neg && phi(phi_hat(ch, cfg), cfg) == neg;
}

bool wit_sign(const ChernCharacter& ch, WitIndex which, Functor, const SurfaceConfig& cfg) {
    Rational d = ch.d(cfg);
    return which == WitIndex::W0 ? d >= 0 : d <= 0;
}

}  // namespace ellwall
