#pragma once

#include "ellwall/chern.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ellwall {

struct WallLine {
    Rational s, q;  ///< a point on the line
    Rational slope;
};
struct WallVertical {
    Rational s;
};
struct WallEverywhere {};
struct WallNowhere {};

struct WallSQ {
    std::variant<WallLine, WallVertical, WallEverywhere, WallNowhere> kind;

    /// q-value over s for Line walls.
    std::optional<Rational> q_at(const Rational& s) const;
    /// Same geometric locus (lines compared as sets, not by base point).
    friend bool operator==(const WallSQ& a, const WallSQ& b);
};

std::string describe(const WallSQ& w);

/// ch = (x, y1 H + y2 H^⊥ + Δ, z) in a frame.
struct FrameCoords {
    Rational x, y1, y2, z;
    DivisorClass delta;
};

FrameCoords frame_coords(const ChernCharacter& ch, const Frame& fr, const SurfaceConfig& cfg);

/// F(ch) for x ≠ 0.
Rational nested_F(const ChernCharacter& ch, const Frame& fr, const SurfaceConfig& cfg);
/// P(ch) = (y1/x, (y1²/x² − F)/2) for x ≠ 0.
PointSQ nested_point(const ChernCharacter& ch, const Frame& fr, const SurfaceConfig& cfg);

/// Potential wall W(ch, ch′) in the (s,q)-plane of the frame.
WallSQ bertram_wall(const ChernCharacter& ch, const ChernCharacter& ch_prime, const Frame& fr,
                    const SurfaceConfig& cfg);

/// W(e^L ch, e^L ch′), from the untwisted frame data.
WallSQ shift_wall(const ChernCharacter& ch, const ChernCharacter& ch_prime, const DivisorClass& L, const Frame& fr,
                  const SurfaceConfig& cfg);

/// ch = e^L (x, 0, z) for two-dimensional walls.
struct FactoredCharacter {
    Rational x, z;
    DivisorClass L;
};

/// (r, kΘ + pf + Σ ξ_i Θ_i, χ)
struct PrimeCharacter {
    Rational r, k, p;
    std::vector<Rational> xi;
    Rational chi;
};

/// (0, kΘ + pf + Σ ξ_i Θ_i, z)
struct OneDimCharacter {
    Rational k, p;
    std::vector<Rational> xi;
    Rational z;
};

/// (r, 0, χ) twisted by L.
struct OneDimPrime {
    Rational r, chi;
    DivisorClass L;
};

ChernCharacter to_character(const PrimeCharacter& c, const SurfaceConfig& cfg);
ChernCharacter to_character(const OneDimCharacter& c, const SurfaceConfig& cfg);

struct LambdaQWall {
    enum class Kind { Value, NoWall, Everywhere, Pole };
    Kind kind = Kind::NoWall;
    Rational q;
};

std::string describe(const LambdaQWall& w);

/// Wall W(e^L ch, e^L ch′) on the line s = 0, w = 0 of the elliptic frame at λ.
LambdaQWall wall_lambda_q(const FactoredCharacter& ch, const PrimeCharacter& ch_prime, const Rational& lambda,
                          const SurfaceConfig& cfg);

/// One-dimensional analogue: W(e^L ch, e^L (r,0,χ)) at s = 0, w = 0.
LambdaQWall wall_lambda_q_dim1(const OneDimCharacter& ch, const OneDimPrime& ch_prime, const Rational& lambda,
                               const SurfaceConfig& cfg);

enum class WallFamily { Dim2, Dim1 };
enum class Leading { InverseSquare, Inverse, Bounded, Nowhere, Everywhere };

struct AsymptoteClass {
    WallFamily family;
    std::string case_tag;
    std::map<std::string, Rational> constants;
    Leading leading;
    Rational coefficient;  ///< A, B or D for the unbounded cases

    std::string leading_term() const;
};

AsymptoteClass classify_asymptote_dim2(const FactoredCharacter& ch, const PrimeCharacter& ch_prime,
                                       const SurfaceConfig& cfg);
AsymptoteClass classify_asymptote_dim1(const OneDimCharacter& ch, const OneDimPrime& ch_prime,
                                       const SurfaceConfig& cfg);

}  // namespace ellwall
