#include "ellwall/charge.hpp"
#include "ellwall/destabilize.hpp"
#include "ellwall/errors.hpp"
#include "ellwall/fmtransform.hpp"
#include "ellwall/io.hpp"
#include "ellwall/walls.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace ellwall;
using testsupport::chern;
using testsupport::dc;
using testsupport::Sampler;
using testsupport::surface;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome fm_composition() {
    Outcome o;
    auto cfg = surface();
    Sampler rng(2024);
    auto t0 = Clock::now();
    for (int i = 0; i < 1000; ++i) {
        auto ch = rng.span_character(cfg);
        o.require(phi_hat(phi(ch, cfg), cfg) == -ch, "phi_hat(phi(ch)) != -ch");
        o.require(phi(phi_hat(ch, cfg), cfg) == -ch, "phi(phi_hat(ch)) != -ch");
    }
    o.require(seconds_since(t0) < 1, "runtime exceeds 1s");
    return o;
}

Outcome transform_identities() {
    Outcome o;
    auto cfg = surface();
    Sampler rng(2024);
    auto f = DivisorClass::fiber(cfg);
    auto h = DivisorClass::theta_f(1, cfg.m(), cfg);
    const Rational half_e = Rational(cfg.e()) / 2;
    for (int i = 0; i < 1000; ++i) {
        auto ch = rng.span_character(cfg);
        Rational n = ch.ch0, d = intersect(f, ch.ch1, cfg), s = ch.ch2;
        auto p = phi(ch, cfg), q = phi_hat(ch, cfg);
        o.require(intersect(p.ch1, f, cfg) == -n, "ch1(phi).f != -n");
        o.require(intersect(p.ch1, h, cfg) == s - half_e * d + (cfg.e() - cfg.m()) * n, "ch1(phi).(Theta+mf)");
        o.require(intersect(q.ch1, f, cfg) == -n, "ch1(phi_hat).f != -n");
        o.require(intersect(q.ch1, h, cfg) == s + half_e * d + (cfg.e() - cfg.m()) * n, "ch1(phi_hat).(Theta+mf)");
    }
    return o;
}

Outcome re_z_identity() {
    Outcome o;
    Sampler rng(7);
    struct Conf {
        int e;
        Rational m, alpha, beta;
    };
    for (const auto& c : {Conf{2, 3, 2, 2}, Conf{1, 2, 5, 3}, Conf{4, 9, 1, 7}}) {
        auto cfg = surface(c.e, c.m);
        auto vp = VolumeSectionParams::make(c.alpha, c.beta, cfg);
        Rational u(1, 2);
        Rational v = (vp.K - (cfg.m() - Rational(cfg.e()) / 2) * u * u) / u;
        auto omega = polarisation(u, v, cfg);
        o.require(intersect(omega, omega, cfg) == 2 * vp.K, "sample point off the volume section");
        auto B = DivisorClass::theta_f(0, Rational(cfg.e()) / 2, cfg);
        Rational ratio = c.beta / c.alpha;
        auto omega_bar = DivisorClass::theta_f(ratio, ratio * cfg.m() + c.beta, cfg);
        for (int i = 0; i < 1000; ++i) {
            auto ch = rng.span_character(cfg);
            Rational lhs = intersect(omega_bar, twist(ch, B, cfg).ch1, cfg);
            Rational rhs = -ratio * central_charge(-phi(ch, cfg), omega, DivisorClass::zero(cfg), cfg).re;
            o.require(lhs == rhs, "identity fails");
            o.require(re_z_identity_check(ch, vp, cfg), "library check disagrees");
        }
    }
    return o;
}

Outcome frame_suite() {
    Outcome o;
    auto cfg = SurfaceConfig::make(2, 0, 3, std::nullopt, {{1, {0, 1}}, {3, {1, 0}}});
    const Rational a = cfg.m() - Rational(cfg.e()) / 2 - 1;
    for (int k = 1; k <= 20; ++k) {
        Rational lambda(k, 21);
        lambda.canonicalize();
        auto fr = elliptic_frame(lambda, cfg);
        Rational expected = 2 * lambda * (1 + a * lambda);
        o.require(intersect(fr.H, fr.Hperp, cfg) == 0, "H.Hperp != 0");
        o.require(intersect(fr.H, fr.H, cfg) == expected, "H^2");
        o.require(intersect(fr.Hperp, fr.Hperp, cfg) == -expected, "Hperp^2");
        for (std::size_t i = 0; i < cfg.sections().size(); ++i) {
            auto target = DivisorClass::theta_f(1, cfg.theta(i) + cfg.e(), cfg);
            Rational ai = intersect(target, fr.H, cfg) / expected;
            Rational bi = -intersect(target, fr.Hperp, cfg) / expected;
            o.require(ai * fr.H + bi * fr.Hperp == target, "a_i H + b_i Hperp");
            auto dec = decompose(target, fr, cfg);
            o.require(dec.l1 == ai && dec.l2 == bi && dec.residual.is_zero(), "decompose");
        }
    }
    return o;
}

Outcome volume_section_pins() {
    Outcome o;
    auto cfg = surface();
    auto vp = VolumeSectionParams::make(2, 1, cfg);
    for (auto [u, v] : {std::pair<Rational, Rational>{1, 1}, {Rational(1, 2), 5}}) {
        auto omega = polarisation(u, v, cfg);
        o.require(intersect(omega, omega, cfg) == 2 * vp.K, "omega^2 != 2K");
        o.require(on_volume_section(PointUV{u, v}, vp, cfg), "(u,v) not on section");
        auto sp = shear(PointUV{u, v}, cfg);
        o.require(sp.u_prime * sp.v_prime == 3, "u'v' != 3");
    }
    for (auto [l, q] : {std::pair<Rational, Rational>{Rational(1, 2), 2}, {Rational(1, 11), Rational(121, 8)}}) {
        o.require(on_volume_section(PointLambdaQ{l, 0, q}, vp, cfg), "(lambda,q) not on section");
        o.require(section_q(l, vp, cfg) == q, "section_q");
        // q(λ + (m−e/2−1)λ²)·2 = K
        o.require(2 * q * (l + (cfg.m() - Rational(cfg.e()) / 2 - 1) * l * l) == vp.K, "section equation");
    }
    return o;
}

Outcome phase_table() {
    Outcome o;
    auto cfg = surface();
    auto vp = VolumeSectionParams::make(2, 2, cfg);
    auto pl = [&](const ChernCharacter& ch) { return phase_limit(limit_charge(ch, vp, cfg)); };
    auto p1 = pl(chern(cfg, 0, {}, 1));
    o.require(p1.value == LimitPhase::One, "(0,0,1)");
    o.require(pl(chern(cfg, 0, {1, 0}, 0)).value == LimitPhase::Half, "(0,Theta,0)");
    o.require(pl(chern(cfg, 0, {0, 1}, 1)).value == LimitPhase::One, "(0,f,1)");
    auto h = pl(chern(cfg, 0, {0, 1}, 0));
    o.require(h.value == LimitPhase::Half && h.attained, "(0,f,0)");
    o.require(pl(chern(cfg, 0, {0, 1}, -1)).value == LimitPhase::Zero, "(0,f,-1)");

    Sampler rng(99);
    auto rank = [](LimitPhase p) { return p == LimitPhase::Zero ? 0 : p == LimitPhase::Half ? 1 : 2; };
    auto draw = [&] {
        for (;;) {
            auto ch = rng.span_character(cfg);
            if (rng.coin()) ch.ch1 = dc(cfg, {0, rng.rational()});
            if (rng.integer(0, 3) == 0) ch.ch0 = 0;
            auto lc = limit_charge(ch, vp, cfg);
            try {
                phase_limit(lc);
                return lc;
            } catch (const NotInHeartError&) {
            }
        }
    };
    for (int i = 0; i < 1000; ++i) {
        auto m = draw(), n = draw();
        auto mn = limit_compare(m, n).order, nm = limit_compare(n, m).order;
        o.require((mn == Order::Precedes) == (nm == Order::Succeeds) && (mn == Order::Equal) == (nm == Order::Equal),
                  "antisymmetry");
        int a = rank(phase_limit(m).value), b = rank(phase_limit(n).value);
        if (a < b) o.require(mn == Order::Precedes, "phase order");
        if (a > b) o.require(mn == Order::Succeeds, "phase order");
    }
    return o;
}

Outcome nested_walls() {
    Outcome o;
    auto cfg = surface();
    Sampler rng(5);
    auto fr = elliptic_frame(Rational(1, 3), cfg);
    fr.w = Rational(1, 2);
    std::vector<ChernCharacter> chs{chern(cfg, 1, {}, 0)};
    while (chs.size() < 11) {
        auto ch = rng.span_character(cfg);
        if (ch.ch0 != 0 && discriminant(ch, cfg) >= 0) chs.push_back(ch);
    }
    for (const auto& ch : chs) {
        o.require(nested_F(ch, fr, cfg) >= 0, "F(ch) < 0");
        PointSQ P = nested_point(ch, fr, cfg);
        for (int j = 0; j < 10; ++j) {
            auto w = bertram_wall(ch, rng.span_character(cfg), fr, cfg);
            if (auto q = w.q_at(P.s)) o.require(*q == P.q, "wall misses P(ch)");
            if (auto* v = std::get_if<WallVertical>(&w.kind)) o.require(v->s == P.s, "vertical wall misses P(ch)");
        }
    }
    auto sec = SurfaceConfig::make(2, 0, 3, std::nullopt, {{1, {}}});
    for (int i = 0; i < 500; ++i) {
        const auto& c = i % 2 ? cfg : sec;
        auto f = elliptic_frame(rat(rng.integer(1, 9), 10), c);
        f.w = rng.rational();
        auto a = rng.character(c), b = rng.character(c);
        if (i % 5 == 0) a.ch0 = 0;
        if (a.ch0 == 0 && intersect(a.ch1, f.H, c) <= 0) a.ch1 = -a.ch1 + f.H;
        auto L = rng.divisor(c);
        o.require(shift_wall(a, b, L, f, c) ==
                      bertram_wall(line_bundle_twist(a, L, c), line_bundle_twist(b, L, c), f, c),
                  "shift_wall != bertram_wall of twisted pair");
    }
    return o;
}

Outcome asymptotes() {
    Outcome o;
    auto cfg = surface();
    auto t0 = Clock::now();
    FactoredCharacter lb{1, 0, dc(cfg, {2, 0})};
    PrimeCharacter lbp{1, -1, 0, {}, -1};
    auto cls = classify_asymptote_dim2(lb, lbp, cfg);
    o.require(cls.case_tag == "C1" && cls.constants.at("D") == 2, "section-8 instance is not C1 with D = 2");
    FactoredCharacter b1{1, 0, dc(cfg, {1, 0})};
    PrimeCharacter b1p{1, 0, 1, {}, -3};
    auto cb = classify_asymptote_dim2(b1, b1p, cfg);
    o.require(cb.case_tag == "B1" && cb.constants.at("A") == 2, "pinned B1 case");
    OneDimCharacter d1{0, 1, {}, -3};
    OneDimPrime d1p{1, 0, dc(cfg, {1, 0})};
    auto cd = classify_asymptote_dim1(d1, d1p, cfg);
    o.require(cd.case_tag == "A1" && cd.constants.at("A") == 2, "dim-1 A1 case");
    Rational lambda = 1;
    for (int k = 1; k <= 6; ++k) {
        lambda /= 10;
        auto w = wall_lambda_q(lb, lbp, lambda, cfg);
        o.require(w.kind == LambdaQWall::Kind::Value, "C1 wall missing");
        o.require(abs_value(2 * lambda * w.q - 2) <= 10 * lambda, "C1 convergence");
        auto wb = wall_lambda_q(b1, b1p, lambda, cfg);
        o.require(wb.kind == LambdaQWall::Kind::Value, "B1 wall missing");
        o.require(abs_value(2 * lambda * lambda * wb.q - 2) <= 10 * lambda, "B1 convergence");
        auto wd = wall_lambda_q_dim1(d1, d1p, lambda, cfg);
        o.require(wd.kind == LambdaQWall::Kind::Value, "dim-1 wall missing");
        o.require(abs_value(2 * lambda * lambda * wd.q - 2) <= 10 * lambda, "dim-1 A1 convergence");
    }
    o.require(seconds_since(t0) < 1, "runtime exceeds 1s");
    return o;
}

Outcome enumeration_oracle() {
    Outcome o;
    auto cfg = surface();
    auto t0 = Clock::now();
    EnumerationRequest req{chern(cfg, 1, {0, 1}, 0), VolumeSectionParams::make(2, 1, cfg), Rational(1, 10)};
    auto out = enumerate_destabilizers(req, cfg);
    testsupport::DestabOracle oracle(req, cfg);
    auto bf = oracle.brute_force(4, 150, 12);
    o.require(!bf.boundary_hit, "oracle box too small");
    o.require(testsupport::keys_of(out) == bf.keys, "enumeration differs from brute force");
    o.require(!out.empty(), "no candidates");
    for (const auto& c : out) {
        if (c.candidate.ch1[0] < 1) continue;
        Rational Sp = (c.complement.ch2 - c.complement.ch0 * req.vp.K) / (req.target.ch2 - req.target.ch0 * req.vp.K);
        o.require(oracle.discriminant_bound(c.complement, Sp), "complement bound");
        o.require(intersect(c.complement.ch1, c.complement.ch1, cfg) <= 0, "complement ch1^2 > 0");
    }
    o.require(seconds_since(t0) < 30, "runtime exceeds 30s");
    return o;
}

Outcome line_bundles() {
    Outcome o;
    auto cfg = surface();
    auto rep = line_bundle_analysis(2, VolumeSectionParams::make(2, 1, cfg), cfg);
    o.require(rep.generic && rep.side == "above" && rep.predicted_rank == 2 && rep.D == 2 && rep.K == 3,
              "a_L = 2 report");
    bool threw = false;
    try {
        line_bundle_analysis(2, VolumeSectionParams::make(1, 1, cfg), cfg);
    } catch (const NonGenericError&) {
        threw = true;
    }
    o.require(threw, "non-generic case not rejected");
    return o;
}

Outcome figure() {
    Outcome o;
    auto cfg = surface();
    auto vp = VolumeSectionParams::make(2, 1, cfg);
    std::vector<Rational> vs;
    for (int v = 1; v <= 30; ++v) vs.emplace_back(v);
    std::string csv = io::emit_volume_section_plot(vp, cfg, vs, io::PlotFormat::Csv);
    auto rows = io::parse_csv(csv);
    bool row1 = false, row5 = false;
    const Rational C = (cfg.m() - Rational(cfg.e()) / 2) * vp.K * vp.K;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][0] == "1" && rows[i][1] == "1" && rows[i][2] == "3") row1 = true;
        if (rows[i][0] == "5" && rows[i][1] == "1/2" && rows[i][2] == "3/5") row5 = true;
        Rational v = parse_rational(rows[i][0]);
        if (v < 10) continue;
        Rational lo = parse_rational(rows[i][3]), hi = parse_rational(rows[i][4]);
        Rational asym = vp.K / v, bound = C / (v * v * v);
        o.require(abs_value(lo - asym) <= bound && abs_value(hi - asym) <= bound, "asymptote bound");
    }
    o.require(row1 && row5, "pinned rows missing");
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"FM composition", fm_composition},
        {"transform identities", transform_identities},
        {"Re Z identity", re_z_identity},
        {"frame suite", frame_suite},
        {"volume section pins", volume_section_pins},
        {"phase table", phase_table},
        {"nested walls", nested_walls},
        {"asymptote convergence", asymptotes},
        {"enumeration oracle", enumeration_oracle},
        {"line bundle analysis", line_bundles},
        {"figure reproduction", figure},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ' ' << criteria[i].first;
        if (!o.ok) std::cout << ": " << o.detail;
        std::cout << '\n';
        if (!o.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
