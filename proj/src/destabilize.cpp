#include "ellwall/destabilize.hpp"

#include "ellwall/errors.hpp"
#include "ellwall/walls.hpp"

#include <algorithm>
#include <future>
#include <tuple>

namespace ellwall {

namespace {

Integer floor_of(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil_of(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw DomainError("enumeration bound exceeds the 64-bit range");
    return z.get_si();
}

struct Context {
    Rational x, lambda, z, K, u0, v0, a, C;
};

Context context(const EnumerationRequest& req, const SurfaceConfig& cfg) {
    Context c;
    c.x = req.target.ch0;
    c.lambda = req.target.ch1[1];
    c.z = req.target.ch2;
    c.K = req.vp.K;
    c.u0 = req.u0;
    c.v0 = section_v0(req, cfg);
    c.a = cfg.m() - cfg.e() + c.v0 / c.u0;
    Rational gap = cfg.m() - cfg.e();
    c.C = Rational(cfg.e()) / (gap * gap);
    return c;
}

}  // namespace

bool CheckResult::passes() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

Rational section_v0(const EnumerationRequest& req, const SurfaceConfig& cfg) {
    Rational a = cfg.m() - cfg.half_e();
    return (req.vp.K - a * req.u0 * req.u0) / req.u0;
}

void validate_request(const EnumerationRequest& req, const SurfaceConfig& cfg) {
    if (cfg.rank() != 2) throw UnsupportedError("enumeration requires a rank 2 surface");
    check_dimension(req.target.ch1, cfg);
    require_nonempty_section(req.vp);
    const auto& t = req.target;
    if (t.ch0 <= 0) throw DomainError("target requires ch0 > 0");
    if (t.ch1[0] != 0 || t.ch1[1] <= 0 || t.ch1[1].get_den() != 1)
        throw DomainError("target requires ch1 = lambda*f with lambda a positive integer");
    if (t.ch2 > 0) throw DomainError("target requires ch2 <= 0");
    if (req.u0 <= 0) throw DomainError("u0 must be positive");
    if (req.u0 * req.u0 >= 4 * req.vp.K) throw DomainError("u0^2 >= 4K");
    if (req.ch2_denominator < 1) throw DomainError("ch2 denominator must be positive");
    if (section_v0(req, cfg) <= 0) throw DomainError("u0 is past the end of the volume section (v0 <= 0)");
}

CheckResult check_candidate(const EnumerationRequest& req, const CandidateKey& key, const SurfaceConfig& cfg) {
    Context c = context(req, cfg);
    const Rational r = key.rank;
    const Rational gamma = key.gamma;
    const Rational eta = key.eta;
    const Rational& ch2 = key.ch2;
    const Rational e = cfg.e();

    Rational deg = eta * c.u0 + gamma * (c.u0 * (cfg.m() - e) + c.v0);
    Rational degE = c.lambda * c.u0;
    Rational wallA = ch2 - r * c.K;
    Rational wallE = c.z - c.x * c.K;
    Rational sq = (2 * eta - e * gamma) * gamma;

    CheckResult out;
    out.S = wallA / wallE;
    const Rational& S = out.S;
    out.checks["sheaf_rank"] = r >= 0;
    out.checks["category"] = deg >= 0 && deg <= degE;
    out.strict_checks["category"] = deg > 0 && deg < degE;
    out.checks["wall_sign"] = wallE < wallA && wallA < 0;
    out.checks["combined_bound"] = wallE + r * c.K < ch2 && ch2 < c.lambda * c.lambda;
    out.checks["bogomolov_bar"] = deg * deg - 4 * c.K * r * ch2 >= 0;
    if (r > 0) out.checks["ch2_bound"] = 4 * c.K * r * ch2 < c.lambda * c.lambda * c.u0 * c.u0;
    out.checks["hodge_index"] = sq <= 2 * S * c.lambda * gamma;
    out.checks["discriminant_C"] = -c.C * S * S * c.lambda * c.lambda <= sq - 2 * r * ch2;
    if (gamma >= 1) {
        Rational rB = c.x - r;
        Rational ch2B = c.z - ch2;
        Rational etaB = c.lambda - eta;
        Rational gammaB = -gamma;
        Rational sqB = (2 * etaB - e * gammaB) * gammaB;
        Rational Sp = 1 - S;
        out.checks["complement"] = -c.C * Sp * Sp * c.lambda * c.lambda + 2 * rB * ch2B <= sqB && sqB <= 0;
    }
    return out;
}

namespace {

struct Found {
    CandidateKey key;
    Integer ch2_scaled;
    CheckResult result;
};

std::vector<Found> scan_pair(const EnumerationRequest& req, const SurfaceConfig& cfg, const Context& c,
                             std::int64_t rank, const Rational& ch2) {
    std::vector<Found> out;
    const Rational r = rank;
    Rational S = (ch2 - r * c.K) / (c.z - c.x * c.K);
    Rational L0 = 2 * r * ch2 - c.C * S * S * c.lambda * c.lambda;
    Rational lead = 2 * c.a + cfg.e();

    std::vector<std::int64_t> gammas;
    for (std::int64_t g = 1;; ++g) {
        Rational gg = g;
        if (lead * gg * gg > -L0) break;
        gammas.push_back(-g);
    }
    std::reverse(gammas.begin(), gammas.end());
    gammas.push_back(0);
    // γ >= 1: the convex quadratic lead·γ² − 2λγ + L0 must be <= 0.
    auto feasible = [&](std::int64_t g) {
        Rational gg = g;
        return lead * gg * gg - 2 * c.lambda * gg + L0 <= 0;
    };
    // Integer minimum of a convex function sits next to its vertex.
    std::int64_t v = std::max<std::int64_t>(1, to_int64(floor_of(c.lambda / lead)));
    std::int64_t seed = feasible(v) ? v : feasible(v + 1) ? v + 1 : 0;
    if (seed > 0) {
        std::int64_t lo = seed, hi = seed;
        while (lo > 1 && feasible(lo - 1)) --lo;
        while (feasible(hi + 1)) ++hi;
        for (std::int64_t g = lo; g <= hi; ++g) gammas.push_back(g);
    }

    for (std::int64_t g : gammas) {
        Rational gg = g;
        std::int64_t eta_lo = to_int64(ceil_of(-gg * c.a));
        std::int64_t eta_hi = to_int64(floor_of(c.lambda - gg * c.a));
        for (std::int64_t eta = eta_lo; eta <= eta_hi; ++eta) {
            CandidateKey key{rank, g, eta, ch2};
            CheckResult res = check_candidate(req, key, cfg);
            if (!res.passes()) continue;
            out.push_back({key, Integer(ch2 * req.ch2_denominator), std::move(res)});
        }
    }
    return out;
}

}  // namespace

std::vector<CandidateReport> enumerate_destabilizers(const EnumerationRequest& req, const SurfaceConfig& cfg) {
    validate_request(req, cfg);
    Context c = context(req, cfg);
    const Rational den = req.ch2_denominator;

    std::vector<std::pair<std::int64_t, Rational>> pairs;
    for (std::int64_t rank = 0;; ++rank) {
        const Rational r = rank;
        Rational lo = c.z - c.x * c.K + r * c.K;
        Rational hi = r * c.K;
        if (rank > 0) {
            Rational bound = c.lambda * c.lambda * c.u0 * c.u0 / (4 * c.K * r);
            if (bound < hi) hi = bound;
            if (lo >= bound) break;
        }
        std::int64_t j_lo = to_int64(floor_of(lo * den)) + 1;
        std::int64_t j_hi = to_int64(ceil_of(hi * den)) - 1;
        for (std::int64_t j = j_lo; j <= j_hi; ++j) {
            Rational ch2(j, req.ch2_denominator);
            ch2.canonicalize();
            pairs.emplace_back(rank, ch2);
        }
    }

    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(req.jobs, pairs.size()));
    std::vector<std::vector<Found>> parts(jobs);
    auto work = [&](std::size_t part) {
        std::vector<Found> acc;
        for (std::size_t i = part; i < pairs.size(); i += jobs) {
            auto found = scan_pair(req, cfg, c, pairs[i].first, pairs[i].second);
            std::move(found.begin(), found.end(), std::back_inserter(acc));
        }
        return acc;
    };
    if (jobs == 1) {
        parts[0] = work(0);
    } else {
        std::vector<std::future<std::vector<Found>>> futures;
        for (std::size_t p = 0; p < jobs; ++p) futures.push_back(std::async(std::launch::async, work, p));
        for (std::size_t p = 0; p < jobs; ++p) parts[p] = futures[p].get();
    }

    std::vector<Found> all;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end(), [](const Found& a, const Found& b) {
        return std::tie(a.key.rank, a.key.gamma, a.key.eta) < std::tie(b.key.rank, b.key.gamma, b.key.eta) ||
               (std::tie(a.key.rank, a.key.gamma, a.key.eta) == std::tie(b.key.rank, b.key.gamma, b.key.eta) &&
                a.ch2_scaled < b.ch2_scaled);
    });

    std::vector<CandidateReport> out;
    out.reserve(all.size());
    for (auto& f : all) {
        ChernCharacter cand{Rational(f.key.rank), DivisorClass::theta_f(f.key.gamma, f.key.eta, cfg), f.key.ch2};
        out.push_back({cand, req.target - cand, f.result.S, std::move(f.result.checks),
                       std::move(f.result.strict_checks)});
    }
    return out;
}

LineBundleReport line_bundle_analysis(std::int64_t a_L, const VolumeSectionParams& vp, const SurfaceConfig& cfg) {
    if (cfg.rank() != 2) throw UnsupportedError("line bundle analysis requires a rank 2 surface");
    if (cfg.e() <= 0) throw DomainError("line bundle analysis requires e > 0");
    if (a_L < 2) throw DomainError("line bundle analysis requires a_L >= 2");
    require_nonempty_section(vp);

    FactoredCharacter ch{1, 0, DivisorClass::theta_f(a_L, 0, cfg)};
    PrimeCharacter prime{1, -1, 0, {}, -cfg.half_e()};
    AsymptoteClass cls = classify_asymptote_dim2(ch, prime, cfg);
    Rational expected = cfg.half_e() * a_L * (a_L - 1);
    if (cls.case_tag != "C1" || cls.constants.at("D") != expected)
        throw InvariantError("line bundle wall constant disagrees with (e/2)a_L(a_L-1)");

    LineBundleReport rep;
    rep.a_L = a_L;
    rep.D = expected;
    rep.K = vp.K;
    if (vp.K == rep.D)
        throw NonGenericError("non-generic: alpha+m-e equals (e/2)a_L(a_L-1), the section may ride the wall");
    rep.generic = true;
    rep.side = vp.K > rep.D ? "above" : "below";
    rep.predicted_rank = a_L;
    rep.asymptote = cls.leading_term();
    rep.case_tag = cls.case_tag;
    return rep;
}

}  // namespace ellwall
