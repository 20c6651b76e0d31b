#include "ellwall/walls.hpp"

#include "ellwall/errors.hpp"

namespace ellwall {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

WallSQ line(const Rational& s, const Rational& q, const Rational& slope) { return {WallLine{s, q, slope}}; }

/// Δ_i = Θ_i − Θ − (θ_i + e) f
DivisorClass delta_i(std::size_t i, const SurfaceConfig& cfg) {
    return DivisorClass::section(i, cfg) - DivisorClass::theta_f(1, cfg.theta(i) + cfg.e(), cfg);
}

DivisorClass delta_sum(const std::vector<Rational>& coeffs, const SurfaceConfig& cfg) {
    auto out = DivisorClass::zero(cfg);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * delta_i(i, cfg);
    return out;
}

std::vector<Rational> section_coeffs(const DivisorClass& d) {
    return std::vector<Rational>(d.coeffs().begin() + 2, d.coeffs().end());
}

void check_sections(const std::vector<Rational>& xi, const SurfaceConfig& cfg) {
    if (xi.size() != cfg.sections().size())
        throw DimensionError("xi list must have one entry per extra section");
}

/// Section sums entering the asymptotic constants.
struct Sums {
    Rational kk;  ///< k + Σξ
    Rational pp;  ///< p − ek + Σξθ
    Rational pe;  ///< p − (e/2)k + Σξ(θ + e/2)
    Rational aa;  ///< a_L + Ση
    Rational bb;  ///< b_L − e a_L + Σηθ
    Rational cross;  ///< Δ_ch · Δ_L
    Rational lsq;    ///< Δ_L²
};

Sums section_sums(const Rational& k, const Rational& p, const std::vector<Rational>& xi, const DivisorClass& L,
                  const SurfaceConfig& cfg) {
    check_sections(xi, cfg);
    check_dimension(L, cfg);
    const Rational e = cfg.e();
    Sums s;
    s.kk = k;
    s.pp = p - e * k;
    s.pe = p - e * k / 2;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        s.kk += xi[i];
        s.pp += xi[i] * cfg.theta(i);
        s.pe += xi[i] * (cfg.theta(i) + e / 2);
    }
    auto eta = section_coeffs(L);
    s.aa = L[0];
    s.bb = L[1] - e * L[0];
    for (std::size_t i = 0; i < eta.size(); ++i) {
        s.aa += eta[i];
        s.bb += eta[i] * cfg.theta(i);
    }
    DivisorClass dl = delta_sum(eta, cfg);
    s.cross = intersect(delta_sum(xi, cfg), dl, cfg);
    s.lsq = intersect(dl, dl, cfg);
    return s;
}

void require_dim2_input(const FactoredCharacter& ch) {
    if (ch.x == 0) throw DomainError("two-dimensional walls require x != 0");
    if (ch.x * ch.z > 0) throw DomainError("two-dimensional walls require x*z <= 0");
}

void require_lambda(const Rational& lambda) {
    if (lambda <= 0 || lambda >= 1) throw DomainError("lambda must lie in (0,1)");
}

}  // namespace

std::optional<Rational> WallSQ::q_at(const Rational& s) const {
    if (auto* l = std::get_if<WallLine>(&kind)) return l->q + l->slope * (s - l->s);
    return std::nullopt;
}

bool operator==(const WallSQ& a, const WallSQ& b) {
    if (a.kind.index() != b.kind.index()) return false;
    return std::visit(overloaded{
                          [&](const WallLine& la) {
                              const auto& lb = std::get<WallLine>(b.kind);
                              return la.slope == lb.slope && *a.q_at(lb.s) == lb.q;
                          },
                          [&](const WallVertical& va) { return va.s == std::get<WallVertical>(b.kind).s; },
                          [](const WallEverywhere&) { return true; },
                          [](const WallNowhere&) { return true; },
                      },
                      a.kind);
}

std::string describe(const WallSQ& w) {
    return std::visit(overloaded{
                          [](const WallLine& l) {
                              return "line through (" + format_rational(l.s) + ", " + format_rational(l.q) +
                                     ") with slope " + format_rational(l.slope);
                          },
                          [](const WallVertical& v) { return "vertical line s = " + format_rational(v.s); },
                          [](const WallEverywhere&) { return std::string("everywhere"); },
                          [](const WallNowhere&) { return std::string("nowhere"); },
                      },
                      w.kind);
}

FrameCoords frame_coords(const ChernCharacter& ch, const Frame& fr, const SurfaceConfig& cfg) {
    FrameDecomposition d = decompose(ch.ch1, fr, cfg);
    return {ch.ch0, d.l1, d.l2, ch.ch2, d.residual};
}

namespace {

Rational F_of(const FrameCoords& c, const Frame& fr) {
    Rational t = fr.w - c.y2 / c.x;
    return fr.delta / fr.g * t * t + (c.y1 * c.y1 * fr.g - c.y2 * c.y2 * fr.delta - 2 * c.x * c.z) / (c.x * c.x * fr.g);
}

PointSQ P_of(const FrameCoords& c, const Frame& fr) {
    Rational s = c.y1 / c.x;
    return {s, (s * s - F_of(c, fr)) / 2};
}

/// Numerator of C(ch, ch′): xχ − rz + wδ(xc2 − ry2).
Rational slope_numerator(const FrameCoords& a, const FrameCoords& b, const Frame& fr) {
    return a.x * b.z - b.x * a.z + fr.w * fr.delta * (a.x * b.y2 - b.x * a.y2);
}

/// r = 0 coincidence test for a one-dimensional ch.
Rational rank_zero_condition(const FrameCoords& a, const FrameCoords& b, const Frame& fr) {
    return a.y1 * b.z - a.z * b.y1 + fr.w * fr.delta * (b.y2 * a.y1 - a.y2 * b.y1);
}

void require_positive_degree(const FrameCoords& a) {
    if (a.y1 <= 0) throw DomainError("x = 0 requires ch1.H > 0");
}

}  // namespace

Rational nested_F(const ChernCharacter& ch, const Frame& fr, const SurfaceConfig& cfg) {
    if (ch.ch0 == 0) throw DomainError("F(ch) requires ch0 != 0");
    return F_of(frame_coords(ch, fr, cfg), fr);
}

PointSQ nested_point(const ChernCharacter& ch, const Frame& fr, const SurfaceConfig& cfg) {
    if (ch.ch0 == 0) throw DomainError("P(ch) requires ch0 != 0");
    return P_of(frame_coords(ch, fr, cfg), fr);
}

WallSQ bertram_wall(const ChernCharacter& ch, const ChernCharacter& ch_prime, const Frame& fr,
                    const SurfaceConfig& cfg) {
    FrameCoords a = frame_coords(ch, fr, cfg);
    FrameCoords b = frame_coords(ch_prime, fr, cfg);
    if (a.x != 0) {
        Rational den = a.x * b.y1 - b.x * a.y1;
        Rational num = slope_numerator(a, b, fr);
        if (den != 0) {
            PointSQ P = P_of(a, fr);
            return line(P.s, P.q, num / (fr.g * den));
        }
        if (num != 0) return {WallVertical{a.y1 / a.x}};
        return {WallEverywhere{}};
    }
    require_positive_degree(a);
    if (b.x == 0) {
        if (rank_zero_condition(a, b, fr) == 0) return {WallEverywhere{}};
        return {WallNowhere{}};
    }
    PointSQ P = P_of(b, fr);
    return line(P.s, P.q, (a.z + fr.delta * fr.w * a.y2) / (fr.g * a.y1));
}

WallSQ shift_wall(const ChernCharacter& ch, const ChernCharacter& ch_prime, const DivisorClass& L, const Frame& fr,
                  const SurfaceConfig& cfg) {
    FrameCoords a = frame_coords(ch, fr, cfg);
    FrameCoords b = frame_coords(ch_prime, fr, cfg);
    FrameDecomposition ld = decompose(L, fr, cfg);
    const Rational& l1 = ld.l1;
    const Rational& l2 = ld.l2;
    const Rational& g = fr.g;
    const Rational& d = fr.delta;
    const Rational& w = fr.w;
    Rational lsq = intersect(ld.residual, ld.residual, cfg);
    Rational a_cross = intersect(a.delta, ld.residual, cfg);
    Rational b_cross = intersect(b.delta, ld.residual, cfg);

    // Common q-shift of a nested point whose coordinates are (y1, y2, Δ·Δ_L) / x.
    auto shifted_q = [&](const Rational& s_over, const Rational& y2_over, const Rational& cross_over) -> Rational {
        return l1 * l1 / 2 + s_over * l1 - d / (2 * g) * l2 * l2 + d / g * (w - y2_over) * l2 + lsq / (2 * g) +
               cross_over / g;
    };

    if (a.x != 0) {
        Rational den = a.x * b.y1 - b.x * a.y1;
        Rational num = slope_numerator(a, b, fr) + g * l1 * den - l2 * d * (a.x * b.y2 - b.x * a.y2) +
                       (a.x * b_cross - b.x * a_cross);
        if (den != 0) {
            PointSQ P = P_of(a, fr);
            Rational q = P.q + shifted_q(a.y1 / a.x, a.y2 / a.x, a_cross / a.x);
            return line(P.s + l1, q, num / (g * den));
        }
        if (num != 0) return {WallVertical{a.y1 / a.x + l1}};
        return {WallEverywhere{}};
    }
    require_positive_degree(a);
    if (b.x == 0) {
        Rational cond = rank_zero_condition(a, b, fr) - d * l2 * (a.y1 * b.y2 - b.y1 * a.y2) +
                        a.y1 * b_cross - b.y1 * a_cross;
        if (cond == 0) return {WallEverywhere{}};
        return {WallNowhere{}};
    }
    PointSQ P = P_of(b, fr);
    Rational q = P.q + shifted_q(b.y1 / b.x, b.y2 / b.x, b_cross / b.x);
    Rational slope = (a.z + d * w * a.y2) / (g * a.y1) + l1 - l2 * d / g * (a.y2 / a.y1) + a_cross / (g * a.y1);
    return line(P.s + l1, q, slope);
}

ChernCharacter to_character(const PrimeCharacter& c, const SurfaceConfig& cfg) {
    check_sections(c.xi, cfg);
    auto ch1 = DivisorClass::theta_f(c.k, c.p, cfg);
    for (std::size_t i = 0; i < c.xi.size(); ++i) ch1[2 + i] = c.xi[i];
    return {c.r, ch1, c.chi};
}

ChernCharacter to_character(const OneDimCharacter& c, const SurfaceConfig& cfg) {
    check_sections(c.xi, cfg);
    auto ch1 = DivisorClass::theta_f(c.k, c.p, cfg);
    for (std::size_t i = 0; i < c.xi.size(); ++i) ch1[2 + i] = c.xi[i];
    return {0, ch1, c.z};
}

std::string describe(const LambdaQWall& w) {
    switch (w.kind) {
        case LambdaQWall::Kind::Value: return format_rational(w.q);
        case LambdaQWall::Kind::NoWall: return "no wall";
        case LambdaQWall::Kind::Everywhere: return "everywhere";
        case LambdaQWall::Kind::Pole: return "pole";
    }
    return "?";
}

LambdaQWall wall_lambda_q(const FactoredCharacter& ch, const PrimeCharacter& ch_prime, const Rational& lambda,
                          const SurfaceConfig& cfg) {
    require_dim2_input(ch);
    require_lambda(lambda);
    Sums sums = section_sums(ch_prime.k, ch_prime.p, ch_prime.xi, ch.L, cfg);
    Frame fr = elliptic_frame(lambda, cfg);
    FrameDecomposition cp = decompose(to_character(ch_prime, cfg).ch1, fr, cfg);
    FrameDecomposition ld = decompose(ch.L, fr, cfg);
    const Rational& g = fr.g;
    const Rational& x = ch.x;
    Rational X = (x * ch_prime.chi - ch_prime.r * ch.z) / x + sums.cross;

    LambdaQWall out;
    if (sums.kk == 0 && sums.pp == 0) {
        // c1 vanishes identically; the twisted wall is vertical at s = l1 or fills the plane.
        Rational num = x * X - fr.delta * ld.l2 * x * cp.l2;
        out.kind = (ld.l1 == 0 || num == 0) ? LambdaQWall::Kind::Everywhere : LambdaQWall::Kind::NoWall;
        return out;
    }
    if (cp.l1 == 0) {
        out.kind = LambdaQWall::Kind::Pole;
        return out;
    }
    const Rational& l1 = ld.l1;
    const Rational& l2 = ld.l2;
    const Rational& c1 = cp.l1;
    const Rational& c2 = cp.l2;
    Rational sum = l1 + l2;
    out.kind = LambdaQWall::Kind::Value;
    out.q = -X * l1 / (g * c1) + l1 * l2 * (c1 + c2) / c1 - sum * sum / 2 + ch.z / (x * g) + sums.lsq / (2 * g);
    return out;
}

LambdaQWall wall_lambda_q_dim1(const OneDimCharacter& ch, const OneDimPrime& ch_prime, const Rational& lambda,
                               const SurfaceConfig& cfg) {
    require_lambda(lambda);
    if (ch_prime.r == 0) throw DomainError("one-dimensional walls require r != 0");
    Sums sums = section_sums(ch.k, ch.p, ch.xi, ch_prime.L, cfg);
    Frame fr = elliptic_frame(lambda, cfg);
    FrameDecomposition yd = decompose(to_character(ch, cfg).ch1, fr, cfg);
    FrameDecomposition ld = decompose(ch_prime.L, fr, cfg);
    LambdaQWall out;
    if (yd.l1 < 0) throw DomainError("one-dimensional walls require ch1.H_lambda > 0");
    if (yd.l1 == 0) {
        out.kind = LambdaQWall::Kind::Pole;
        return out;
    }
    const Rational& g = fr.g;
    const Rational& l1 = ld.l1;
    const Rational& l2 = ld.l2;
    const Rational& y1 = yd.l1;
    const Rational& y2 = yd.l2;
    Rational sum = l1 + l2;
    out.kind = LambdaQWall::Kind::Value;
    out.q = -(ch.z + sums.cross) * l1 / (g * y1) + l1 * l2 * (y1 + y2) / y1 - sum * sum / 2 +
            ch_prime.chi / (ch_prime.r * g) + sums.lsq / (2 * g);
    return out;
}

std::string AsymptoteClass::leading_term() const {
    switch (leading) {
        case Leading::InverseSquare: return "q ~ " + format_rational(coefficient) + "/(2 lambda^2)";
        case Leading::Inverse: return "q ~ " + format_rational(coefficient) + "/(2 lambda)";
        case Leading::Bounded: return "bounded";
        case Leading::Nowhere: return "nowhere";
        case Leading::Everywhere: return "everywhere";
    }
    return "?";
}

AsymptoteClass classify_asymptote_dim2(const FactoredCharacter& ch, const PrimeCharacter& ch_prime,
                                       const SurfaceConfig& cfg) {
    require_dim2_input(ch);
    Sums s = section_sums(ch_prime.k, ch_prime.p, ch_prime.xi, ch.L, cfg);
    const Rational& x = ch.x;
    Rational X = (x * ch_prime.chi - ch_prime.r * ch.z) / x + s.cross;
    Rational head = ch.z / x + s.lsq / 2;

    AsymptoteClass out;
    out.family = WallFamily::Dim2;
    if (s.kk == 0 && s.pp == 0) {
        bool trivial = s.aa == 0 && s.bb == 0;
        out.case_tag = trivial ? "A1" : "A2";
        out.leading = trivial ? Leading::Everywhere : Leading::Nowhere;
        return out;
    }
    if (s.kk == 0) {
        Rational A = -(X + s.aa * s.pe) * s.aa / s.pp;
        Rational B = head - (s.bb + cfg.half_e() * s.aa) * X / s.pp;
        out.constants = {{"A", A}, {"B", B}};
        if (A != 0) {
            out.case_tag = "B1";
            out.leading = Leading::InverseSquare;
            out.coefficient = A;
        } else if (B != 0) {
            out.case_tag = "B2";
            out.leading = Leading::Inverse;
            out.coefficient = B;
        } else {
            out.case_tag = "B3";
            out.leading = Leading::Bounded;
        }
        return out;
    }
    Rational D = head - (X + s.aa * s.pe) * s.aa / s.kk;
    out.constants = {{"D", D}};
    if (D != 0) {
        out.case_tag = "C1";
        out.leading = Leading::Inverse;
        out.coefficient = D;
    } else {
        out.case_tag = "C2";
        out.leading = Leading::Bounded;
    }
    return out;
}

AsymptoteClass classify_asymptote_dim1(const OneDimCharacter& ch, const OneDimPrime& ch_prime,
                                       const SurfaceConfig& cfg) {
    if (ch_prime.r == 0) throw DomainError("one-dimensional walls require r != 0");
    Sums s = section_sums(ch.k, ch.p, ch.xi, ch_prime.L, cfg);
    if (!(s.kk > 0 || (s.kk == 0 && s.pp > 0)))
        throw DomainError("one-dimensional walls require ch1.H_lambda > 0 for small lambda");
    Rational Z = ch.z + s.cross;
    Rational head = ch_prime.chi / ch_prime.r + s.lsq / 2;

    AsymptoteClass out;
    out.family = WallFamily::Dim1;
    if (s.kk == 0) {
        Rational A = -(Z + s.aa * s.pe) * s.aa / s.pp;
        Rational B = head - (s.bb + cfg.half_e() * s.aa) * Z / s.pp;
        out.constants = {{"A", A}, {"B", B}};
        if (A != 0) {
            out.case_tag = "A1";
            out.leading = Leading::InverseSquare;
            out.coefficient = A;
        } else if (B != 0) {
            out.case_tag = "A2";
            out.leading = Leading::Inverse;
            out.coefficient = B;
        } else {
            out.case_tag = "A3";
            out.leading = Leading::Bounded;
        }
        return out;
    }
    Rational D = head - (Z + s.aa * s.pe) * s.aa / s.kk;
    out.constants = {{"D", D}};
    if (D != 0) {
        out.case_tag = "B1";
        out.leading = Leading::Inverse;
        out.coefficient = D;
    } else {
        out.case_tag = "B2";
        out.leading = Leading::Bounded;
    }
    return out;
}

}  // namespace ellwall
