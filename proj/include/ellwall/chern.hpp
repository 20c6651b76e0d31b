#pragma once

#include "ellwall/nslattice.hpp"

namespace ellwall {

struct ChernCharacter {
    Rational ch0;
    DivisorClass ch1;
    Rational ch2;

    static ChernCharacter make(const Rational& ch0, DivisorClass ch1, const Rational& ch2) {
        return {ch0, std::move(ch1), ch2};
    }
    static ChernCharacter zero(const SurfaceConfig& cfg) { return {0, DivisorClass::zero(cfg), 0}; }

    // Fourier–Mukai shorthand.
    const Rational& n() const { return ch0; }
    Rational d(const SurfaceConfig& cfg) const { return intersect(DivisorClass::fiber(cfg), ch1, cfg); }
    Rational c(const SurfaceConfig& cfg) const { return intersect(DivisorClass::theta(cfg), ch1, cfg); }
    const Rational& s() const { return ch2; }

    ChernCharacter& operator+=(const ChernCharacter& o);
    ChernCharacter& operator-=(const ChernCharacter& o);
    ChernCharacter& operator*=(const Rational& k);
    friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
    friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
    friend ChernCharacter operator*(const Rational& k, ChernCharacter a) { return a *= k; }
    friend ChernCharacter operator-(ChernCharacter a) { return a *= Rational(-1); }
    friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
        return a.ch0 == b.ch0 && a.ch1 == b.ch1 && a.ch2 == b.ch2;
    }
};

/// e^{−B}·ch
ChernCharacter twist(const ChernCharacter& ch, const DivisorClass& B, const SurfaceConfig& cfg);
/// e^{L}·ch
ChernCharacter line_bundle_twist(const ChernCharacter& ch, const DivisorClass& L, const SurfaceConfig& cfg);

/// Rational slope or the +∞ sentinel (rank zero), ordered above every rational.
struct Slope {
    bool infinite = false;
    Rational value;

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
};

/// Throws DomainError if omega fails the rank-2 ampleness test; no check for rank > 2.
void require_ample(const DivisorClass& omega, const SurfaceConfig& cfg);

Slope slope(const ChernCharacter& ch, const DivisorClass& omega, const DivisorClass& B, const SurfaceConfig& cfg);

struct DiscriminantReport {
    Rational delta;
    Rational delta_bar;
    Rational delta_C;
    Rational constant_used;
};

DiscriminantReport discriminants(const ChernCharacter& ch, const DivisorClass& omega, const DivisorClass& B,
                                 const Rational& C, const SurfaceConfig& cfg);

/// ch1² − 2 ch0 ch2
Rational discriminant(const ChernCharacter& ch, const SurfaceConfig& cfg);

bool is_bogomolov_type(const ChernCharacter& ch, const SurfaceConfig& cfg);

/// e / (u0² (m−e)²), valid for ω0 = u0(Θ+mf) + v0 f with any v0 >= 0.
Rational bogomolov_constant(const Rational& u0, const SurfaceConfig& cfg);

/// ch2 − (e/2) ch1·f + ch0 χ(O_X)
Rational twisted_euler(const ChernCharacter& ch, const SurfaceConfig& cfg);

struct GiesekerSlope {
    Rational slope;       ///< χ_L / (ch1·ω̄)
    Rational normalized;  ///< α χ_L / (ch1·(Θ+mf) + α ch1·f), independent of β
};

GiesekerSlope gieseker_slope_1dim(const ChernCharacter& ch, const VolumeSectionParams& vp, const SurfaceConfig& cfg);

/// (ch1·Θ / ch1·f)(χ_L − 1) + m0 χ_L
Rational torsion_free_threshold(const ChernCharacter& ch, const Rational& m0, const SurfaceConfig& cfg);

}  // namespace ellwall
