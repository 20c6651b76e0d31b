#pragma once

#include "ellwall/chern.hpp"

namespace ellwall {

enum class Functor { Phi, PhiHat };
enum class WitIndex { W0, W1 };

/// Cohomological Φ. ch1 must lie in span{Θ, f}.
ChernCharacter phi(const ChernCharacter& ch, const SurfaceConfig& cfg);
/// Cohomological Φ̂. ch1 must lie in span{Θ, f}.
ChernCharacter phi_hat(const ChernCharacter& ch, const SurfaceConfig& cfg);

ChernCharacter apply(Functor which, const ChernCharacter& ch, const SurfaceConfig& cfg);

/// Φ̂Φ = −id and ΦΦ̂ = −id on ch.
bool composition_check(const ChernCharacter& ch, const SurfaceConfig& cfg);

/// Necessary fiber-degree sign for WIT_i: W0 needs f·ch1 >= 0, W1 needs f·ch1 <= 0.
bool wit_sign(const ChernCharacter& ch, WitIndex which, Functor functor, const SurfaceConfig& cfg);

}  // namespace ellwall
