#pragma once

#include "ellwall/chern.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using ellwall::ChernCharacter;
using ellwall::DivisorClass;
using ellwall::Rational;
using ellwall::SurfaceConfig;

inline SurfaceConfig surface(std::int64_t e = 2, Rational m = 3) { return SurfaceConfig::make(e, 0, m); }

inline DivisorClass dc(const SurfaceConfig& cfg, std::vector<Rational> c) {
    c.resize(cfg.rank(), Rational(0));
    return DivisorClass(std::move(c));
}

inline ChernCharacter chern(const SurfaceConfig& cfg, Rational ch0, std::vector<Rational> ch1, Rational ch2) {
    return {ch0, dc(cfg, std::move(ch1)), ch2};
}

/// Small random rationals with a fixed seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Rational rational(int num_bound = 9, int den_bound = 5) {
        std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
        Rational r(num(rng_), den(rng_));
        r.canonicalize();
        return r;
    }
    Rational positive(int num_bound = 9, int den_bound = 5) {
        std::uniform_int_distribution<int> num(1, num_bound), den(1, den_bound);
        Rational r(num(rng_), den(rng_));
        r.canonicalize();
        return r;
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    DivisorClass divisor(const SurfaceConfig& cfg) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < cfg.rank(); ++i) c.push_back(rational());
        return DivisorClass(c);
    }
    DivisorClass span_divisor(const SurfaceConfig& cfg) { return dc(cfg, {rational(), rational()}); }
    ChernCharacter character(const SurfaceConfig& cfg) { return {rational(), divisor(cfg), rational()}; }
    ChernCharacter span_character(const SurfaceConfig& cfg) { return {rational(), span_divisor(cfg), rational()}; }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testsupport
