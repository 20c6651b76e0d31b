#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellwall/errors.hpp"
#include "ellwall/fmtransform.hpp"
#include "support.hpp"

using namespace ellwall;
using testsupport::chern;
using testsupport::Sampler;
using testsupport::surface;

TEST_CASE("phi examples") {
    auto cfg = surface();
    CHECK(phi(chern(cfg, 1, {}, 0), cfg) == chern(cfg, 0, {-1, 0}, 1));
    auto t = phi(chern(cfg, 1, {1, 0}, -1), cfg);
    CHECK(t == chern(cfg, 1, {-1, -2}, 1));
    CHECK(t.d(cfg) == -1);
    CHECK(intersect(t.ch1, DivisorClass::theta_f(1, 3, cfg), cfg) == -3);
    CHECK(phi(chern(cfg, 0, {}, 1), cfg) == chern(cfg, 0, {0, 1}, 0));
}

TEST_CASE("phi_hat examples") {
    auto cfg = surface();
    CHECK(phi_hat(chern(cfg, 0, {-1, 0}, 1), cfg) == chern(cfg, -1, {}, 0));
    auto t = phi_hat(chern(cfg, 1, {}, 0), cfg);
    CHECK(t.d(cfg) == -1);
    CHECK(t == chern(cfg, 0, {-1, 0}, -1));
}

TEST_CASE("composition and transform identities on random characters") {
    for (auto [e, m] : {std::pair<int, int>{2, 3}, {0, 1}, {3, 7}, {1, 2}}) {
        auto cfg = surface(e, m);
        Sampler rng(100 + e);
        for (int i = 0; i < 300; ++i) {
            auto ch = rng.span_character(cfg);
            CHECK(composition_check(ch, cfg));
            const Rational& n = ch.n();
            Rational d = ch.d(cfg), s = ch.s();
            auto tm = DivisorClass::theta_f(1, cfg.m(), cfg);
            auto p = phi(ch, cfg);
            CHECK(p.d(cfg) == -n);
            CHECK(intersect(p.ch1, tm, cfg) == s - cfg.half_e() * d + (cfg.e() - cfg.m()) * n);
            auto ph = phi_hat(ch, cfg);
            CHECK(ph.d(cfg) == -n);
            CHECK(intersect(ph.ch1, tm, cfg) == s + cfg.half_e() * d + (cfg.e() - cfg.m()) * n);

            auto other = rng.span_character(cfg);
            Rational a = rng.rational(), b = rng.rational();
            CHECK(phi(a * ch + b * other, cfg) == a * phi(ch, cfg) + b * phi(other, cfg));
            CHECK(phi_hat(a * ch + b * other, cfg) == a * phi_hat(ch, cfg) + b * phi_hat(other, cfg));
        }
    }
}

TEST_CASE("extra-section components are rejected") {
    auto cfg = SurfaceConfig::make(2, 0, 3, std::nullopt, {{1, {}}});
    auto ok = ChernCharacter{1, DivisorClass({1, 2, 0}), 0};
    CHECK(composition_check(ok, cfg));
    auto bad = ChernCharacter{1, DivisorClass({1, 2, 1}), 0};
    CHECK_THROWS_AS(phi(bad, cfg), UnsupportedError);
    CHECK_THROWS_AS(phi_hat(bad, cfg), UnsupportedError);
}

TEST_CASE("fiber-degree sign predicates") {
    auto cfg = surface();
    CHECK(wit_sign(chern(cfg, 1, {1, 0}, -1), WitIndex::W0, Functor::Phi, cfg));
    CHECK_FALSE(wit_sign(chern(cfg, 1, {-1, 0}, 0), WitIndex::W0, Functor::Phi, cfg));
    CHECK(wit_sign(chern(cfg, 1, {-1, 0}, 0), WitIndex::W1, Functor::PhiHat, cfg));
    auto flat = chern(cfg, 1, {0, 5}, 0);
    CHECK(wit_sign(flat, WitIndex::W0, Functor::Phi, cfg));
    CHECK(wit_sign(flat, WitIndex::W1, Functor::Phi, cfg));
}
