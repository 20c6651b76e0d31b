#pragma once

#include "ellwall/chern.hpp"

#include <array>
#include <string>

namespace ellwall {

struct ChargeValue {
    Rational re;
    Rational im;

    friend bool operator==(const ChargeValue& a, const ChargeValue& b) { return a.re == b.re && a.im == b.im; }
};

/// −ch2^B + (ω²/2) ch0 + i ω·ch1^B. Rank-2 surfaces require ω ample.
ChargeValue central_charge(const ChernCharacter& ch, const DivisorClass& omega, const DivisorClass& B,
                           const SurfaceConfig& cfg);

/// Z_{s,q} in a frame; requires q > s²/2.
ChargeValue charge_sq(const ChernCharacter& ch, const PointSQ& pt, const Frame& fr, const SurfaceConfig& cfg);

/// Z(v′) = re_const + i(im_hi·v′ + im_lo/v′) along the volume section in shear coordinates.
struct LimitCharge {
    Rational re_const;
    Rational im_hi;
    Rational im_lo;
    Rational K;
    Rational ch0;  ///< rank, kept for case labelling

    ChargeValue evaluate(const Rational& v_prime) const;
    bool is_zero() const { return re_const == 0 && im_hi == 0 && im_lo == 0; }
};

LimitCharge limit_charge(const ChernCharacter& ch, const VolumeSectionParams& vp, const SurfaceConfig& cfg);

enum class LimitPhase { Zero, Half, One };

std::string to_string(LimitPhase p);

struct PhaseLimit {
    LimitPhase value;
    bool attained;         ///< phase equals the limit identically in v′
    std::string case_tag;  ///< "1", "2.1", "2.2.1", "2.2.2", "2.2.3", "3", "6" or "sign case"
};

/// Throws NotInHeartError unless the charge stays in the closed upper half-plane for v′ ≫ 0.
PhaseLimit phase_limit(const LimitCharge& lc);

enum class Order { Precedes, Equal, Succeeds };

std::string to_string(Order o);

struct LimitComparison {
    Order order;
    std::array<Rational, 2> cross_coeffs;  ///< coefficients of v′ and 1/v′
};

LimitComparison limit_compare(const LimitCharge& m, const LimitCharge& n);

/// ω̄·ch1^B(ch) = −(β/α) Re Z(Φ(ch)[1]) with B = (e/2)f along the volume section.
bool re_z_identity_check(const ChernCharacter& ch, const VolumeSectionParams& vp, const SurfaceConfig& cfg);

}  // namespace ellwall
