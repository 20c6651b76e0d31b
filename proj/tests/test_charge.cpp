#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellwall/charge.hpp"
#include "ellwall/errors.hpp"
#include "ellwall/fmtransform.hpp"
#include "support.hpp"

using namespace ellwall;
using testsupport::chern;
using testsupport::dc;
using testsupport::Sampler;
using testsupport::surface;

namespace {

int phase_rank(LimitPhase p) { return p == LimitPhase::Zero ? 0 : p == LimitPhase::Half ? 1 : 2; }

/// Random character whose limit charge stays in the closed upper half-plane.
ChernCharacter heart_character(Sampler& rng, const SurfaceConfig& cfg, const VolumeSectionParams& vp) {
    for (;;) {
        auto ch = rng.span_character(cfg);
        switch (rng.integer(0, 3)) {
            case 0: ch.ch1 = dc(cfg, {0, rng.rational()}); break;                    // im_hi = 0
            case 1: ch.ch1 = dc(cfg, {0, 0}); ch.ch0 = 0; break;                    // points and zero
            case 2: ch.ch1 = dc(cfg, {0, 0}); break;                                // real charges
            default: break;
        }
        LimitCharge lc = limit_charge(ch, vp, cfg);
        if (lc.is_zero()) continue;
        try {
            phase_limit(lc);
            return ch;
        } catch (const NotInHeartError&) {
        }
    }
}

}  // namespace

TEST_CASE("central charge examples") {
    auto cfg = surface();
    auto omega = dc(cfg, {1, 4});
    auto zero = DivisorClass::zero(cfg);
    CHECK(central_charge(chern(cfg, 1, {}, 0), omega, zero, cfg) == ChargeValue{3, 0});
    CHECK(central_charge(chern(cfg, 0, {1, 0}, 0), omega, zero, cfg) == ChargeValue{0, 2});
    CHECK(central_charge(chern(cfg, 0, {}, 1), omega, zero, cfg) == ChargeValue{-1, 0});
    CHECK_THROWS_AS(central_charge(chern(cfg, 1, {}, 0), dc(cfg, {1, 2}), zero, cfg), DomainError);
}

TEST_CASE("charge in (s,q) coordinates") {
    auto cfg = surface();
    auto fr = elliptic_frame(Rational(1, 3), cfg);
    CHECK(charge_sq(chern(cfg, 1, {}, 0), {0, 5}, fr, cfg) == ChargeValue{fr.g * 5, 0});
    CHECK(charge_sq(chern(cfg, 0, {}, 1), {0, 5}, fr, cfg) == ChargeValue{-1, 0});
    CHECK_THROWS_AS(charge_sq(chern(cfg, 1, {}, 0), {2, 2}, fr, cfg), DomainError);
}

TEST_CASE("charge_sq is the right action of Z_{tH, sH + wH^perp}") {
    Sampler rng(77);
    for (auto cfg : {surface(), SurfaceConfig::make(2, 0, 3, std::nullopt, {{1, {}}, {2, {0, 1}}})}) {
        for (int i = 0; i < 300; ++i) {
            auto fr = elliptic_frame(rat(rng.integer(1, 19), 20), cfg);
            fr.w = rng.rational();
            Rational s = rng.rational(), t = rng.positive();
            Rational q = (s * s + t * t) / 2;
            auto ch = rng.character(cfg);
            auto B = s * fr.H + fr.w * fr.Hperp;
            auto omega = t * fr.H;
            // direct evaluation of −ch2^B + (ω²/2)ch0 + iω·ch1^B
            auto tw = twist(ch, B, cfg);
            Rational re = -tw.ch2 + intersect(omega, omega, cfg) / 2 * tw.ch0;
            Rational im = intersect(omega, tw.ch1, cfg);
            ChargeValue z = charge_sq(ch, {s, q}, fr, cfg);
            CHECK(z.im == im / t);
            CHECK(z.re == re - s / t * im);
        }
    }
}

TEST_CASE("limit charge examples") {
    auto cfg = surface();
    auto vp = VolumeSectionParams::make(2, 2, cfg);
    auto a = limit_charge(chern(cfg, 0, {1, 0}, 0), vp, cfg);
    CHECK(a.re_const == 0);
    CHECK(a.im_hi == 1);
    CHECK(a.im_lo == -3);
    auto b = limit_charge(chern(cfg, 0, {}, 1), vp, cfg);
    CHECK(b.re_const == -1);
    CHECK(b.im_hi == 0);
    CHECK(b.im_lo == 0);
    auto c = limit_charge(chern(cfg, 0, {0, 1}, -1), vp, cfg);
    CHECK(c.re_const == 1);
    CHECK(c.im_hi == 0);
    CHECK(c.im_lo == 3);
    CHECK_THROWS_AS(limit_charge(chern(cfg, 0, {}, 1), VolumeSectionParams{1, 1, 0}, cfg), DomainError);
}

TEST_CASE("limit charge is exact along the volume section") {
    Sampler rng(31);
    for (auto [e, m, alpha] : {std::tuple<int, int, int>{2, 3, 2}, {4, 7, 1}, {0, 2, 3}}) {
        auto cfg = surface(e, m);
        auto vp = VolumeSectionParams::make(alpha, 1, cfg);
        auto zero = DivisorClass::zero(cfg);
        for (int i = 0; i < 200; ++i) {
            Rational u = rng.positive(4, 9);
            Rational v = (vp.K - (cfg.m() - cfg.half_e()) * u * u) / u;
            if (v <= 0) continue;
            auto ch = rng.span_character(cfg);
            ChargeValue z = central_charge(ch, polarisation(u, v, cfg), zero, cfg);
            ChargeValue zl = limit_charge(ch, vp, cfg).evaluate(shear(PointUV{u, v}, cfg).v_prime);
            CHECK(z == zl);
        }
    }
}

TEST_CASE("phase table") {
    auto cfg = surface();
    auto vp = VolumeSectionParams::make(2, 2, cfg);
    auto pl = [&](const ChernCharacter& ch) { return phase_limit(limit_charge(ch, vp, cfg)); };

    auto point = pl(chern(cfg, 0, {}, 1));
    CHECK(point.value == LimitPhase::One);
    CHECK(point.attained);
    CHECK(point.case_tag == "1");
    auto section = pl(chern(cfg, 0, {1, 0}, 0));
    CHECK(section.value == LimitPhase::Half);
    CHECK(section.case_tag == "2.1");
    auto f1 = pl(chern(cfg, 0, {0, 1}, 1));
    CHECK(f1.value == LimitPhase::One);
    CHECK_FALSE(f1.attained);
    CHECK(f1.case_tag == "2.2.1");
    auto f0 = pl(chern(cfg, 0, {0, 1}, 0));
    CHECK(f0.value == LimitPhase::Half);
    CHECK(f0.attained);
    CHECK(f0.case_tag == "2.2.2");
    auto fm = pl(chern(cfg, 0, {0, 1}, -1));
    CHECK(fm.value == LimitPhase::Zero);
    CHECK(fm.case_tag == "2.2.3");

    CHECK(pl(chern(cfg, 1, {1, 0}, 0)).case_tag == "3");
    CHECK(pl(chern(cfg, -1, {1, 0}, 0)).case_tag == "6");
    CHECK(pl(chern(cfg, 1, {0, 1}, 0)).case_tag == "sign case");
    CHECK_THROWS_AS(pl(chern(cfg, 0, {-1, 0}, 0)), NotInHeartError);
    CHECK_THROWS_AS(pl(chern(cfg, 0, {}, -1)), NotInHeartError);
    CHECK_THROWS_AS(pl(chern(cfg, 0, {}, 0)), NotInHeartError);
}

TEST_CASE("limit comparison") {
    auto cfg = surface();
    auto vp = VolumeSectionParams::make(2, 2, cfg);
    auto M = limit_charge(chern(cfg, 0, {0, 1}, 0), vp, cfg);
    auto N = limit_charge(chern(cfg, 0, {}, 1), vp, cfg);
    auto c = limit_compare(M, N);
    CHECK(c.order == Order::Precedes);
    CHECK(c.cross_coeffs[0] == 0);
    CHECK(c.cross_coeffs[1] == 3);
    CHECK(limit_compare(M, M).order == Order::Equal);
    CHECK(limit_compare(N, M).order == Order::Succeeds);
    CHECK_THROWS_AS(limit_compare(M, limit_charge(chern(cfg, 0, {}, -1), vp, cfg)), NotInHeartError);
}

TEST_CASE("limit comparison agrees with phases at large v'") {
    auto cfg = surface();
    auto vp = VolumeSectionParams::make(2, 2, cfg);
    Sampler rng(55);
    for (int i = 0; i < 1000; ++i) {
        auto lm = limit_charge(heart_character(rng, cfg, vp), vp, cfg);
        auto ln = limit_charge(heart_character(rng, cfg, vp), vp, cfg);
        auto mn = limit_compare(lm, ln).order, nm = limit_compare(ln, lm).order;
        CHECK((mn == Order::Equal) == (nm == Order::Equal));
        CHECK((mn == Order::Precedes) == (nm == Order::Succeeds));
        int a = phase_rank(phase_limit(lm).value), b = phase_rank(phase_limit(ln).value);
        if (a < b) CHECK(mn == Order::Precedes);
        if (a > b) CHECK(mn == Order::Succeeds);
        // At a huge v′ the exact charges order the same way (phases in (0,1]).
        Rational big = Rational(10) * 1000000;
        ChargeValue zm = lm.evaluate(big), zn = ln.evaluate(big);
        Rational cross = zm.re * zn.im - zn.re * zm.im;
        if (mn == Order::Precedes) CHECK(cross > 0);
        if (mn == Order::Succeeds) CHECK(cross < 0);
        if (mn == Order::Equal) CHECK(cross == 0);
    }
}

TEST_CASE("charges with ch0 < 0 or positive fiber degree tend to phase 1/2") {
    auto cfg = surface();
    auto vp = VolumeSectionParams::make(2, 2, cfg);
    Sampler rng(66);
    for (int i = 0; i < 300; ++i) {
        auto ch = rng.span_character(cfg);
        if (ch.d(cfg) <= 0) continue;
        CHECK(phase_limit(limit_charge(ch, vp, cfg)).value == LimitPhase::Half);
    }
}

TEST_CASE("Re Z identity") {
    auto cfg = surface();
    auto vp = VolumeSectionParams::make(2, 2, cfg);
    CHECK(re_z_identity_check(chern(cfg, 1, {1, 0}, -1), vp, cfg));
    CHECK(re_z_identity_check(chern(cfg, 1, {}, 0), vp, cfg));
    Sampler rng(88);
    for (auto [e, m, a, b] : {std::tuple<int, int, int, int>{2, 3, 2, 2}, {1, 2, 5, 3}, {4, 9, 1, 7}}) {
        auto c = surface(e, m);
        auto p = VolumeSectionParams::make(a, b, c);
        for (int i = 0; i < 300; ++i) CHECK(re_z_identity_check(rng.span_character(c), p, c));
    }
}
