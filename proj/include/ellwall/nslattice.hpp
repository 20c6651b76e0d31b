#pragma once

#include "ellwall/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ellwall {

/// An extra section Θ_i beyond the zero section Θ.
struct ExtraSection {
    std::int64_t theta = 0;           ///< Θ·Θ_i
    std::vector<std::int64_t> cross;  ///< Θ_i·Θ_j for every j; diagonal entry ignored, empty means all zero
};

/// Numerical model of a Weierstraß elliptic surface. Basis order is (Θ, f, Θ_1, ..., Θ_r).
class SurfaceConfig {
public:
    /// Validates and builds. Omitted euler_char defaults to e.
    static SurfaceConfig make(std::int64_t e, std::int64_t genus_base, const Rational& m,
                              std::optional<Rational> euler_char = std::nullopt,
                              std::vector<ExtraSection> sections = {});

    std::int64_t e() const { return e_; }
    std::int64_t genus_base() const { return genus_base_; }
    const Rational& m() const { return m_; }
    const Rational& euler_char() const { return euler_char_; }
    const std::vector<ExtraSection>& sections() const { return sections_; }
    std::size_t rank() const { return 2 + sections_.size(); }
    Rational half_e() const { return rat(e_, 2); }
    std::int64_t theta(std::size_t i) const { return sections_.at(i).theta; }
    const Rational& pairing(std::size_t i, std::size_t j) const { return gram_[i * rank() + j]; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::int64_t e_ = 0;
    std::int64_t genus_base_ = 0;
    Rational m_;
    Rational euler_char_;
    std::vector<ExtraSection> sections_;
    std::vector<Rational> gram_;
    std::vector<std::string> warnings_;
};

class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static DivisorClass zero(const SurfaceConfig& cfg);
    static DivisorClass theta(const SurfaceConfig& cfg);
    static DivisorClass fiber(const SurfaceConfig& cfg);
    static DivisorClass section(std::size_t i, const SurfaceConfig& cfg);
    /// aΘ + bf
    static DivisorClass theta_f(const Rational& a, const Rational& b, const SurfaceConfig& cfg);

    std::size_t size() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// True when every coefficient past (Θ, f) vanishes.
    bool in_theta_f_span() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& k);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& k, DivisorClass a) { return a *= k; }
    friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

void check_dimension(const DivisorClass& d, const SurfaceConfig& cfg);

Rational intersect(const DivisorClass& a, const DivisorClass& b, const SurfaceConfig& cfg);

struct ConeMembership {
    bool nef = false;
    bool ample = false;
    bool effective_curve_cone = false;
};

/// Rank 2 only.
ConeMembership cone_membership(const DivisorClass& d, const SurfaceConfig& cfg);

struct Frame {
    DivisorClass H;
    DivisorClass Hperp;
    Rational w;
    Rational g;
    Rational delta;

    /// Computes g and delta and checks orthogonality, g > 0, delta >= 0.
    static Frame make(DivisorClass H, DivisorClass Hperp, const Rational& w, const SurfaceConfig& cfg);
};

/// (H_λ, H_λ^⊥, 0).
Frame elliptic_frame(const Rational& lambda, const SurfaceConfig& cfg);

/// 2λ(1 + (m − e/2 − 1)λ)
Rational elliptic_frame_g(const Rational& lambda, const SurfaceConfig& cfg);

struct FrameDecomposition {
    Rational l1;
    Rational l2;
    DivisorClass residual;

    DivisorClass reconstruct(const Frame& fr) const { return l1 * fr.H + l2 * fr.Hperp + residual; }
};

FrameDecomposition decompose(const DivisorClass& d, const Frame& fr, const SurfaceConfig& cfg);

struct PointUV {
    Rational u, v;
};
struct PointLambdaT {
    Rational lambda, t;
};
struct PointSQ {
    Rational s, q;
};
using StabPoint = std::variant<PointUV, PointLambdaT, PointSQ>;

PointUV make_uv(const Rational& u, const Rational& v);
PointLambdaT make_lambda_t(const Rational& lambda, const Rational& t);
PointSQ make_sq(const Rational& s, const Rational& q);

PointLambdaT to_lambda_t(const PointUV& p);
PointUV to_uv(const PointLambdaT& p);

struct PointLambdaQ {
    Rational lambda, s, q;
};

/// s = 0 since B = 0 along the volume section.
PointLambdaQ to_lambda_q(const PointUV& p);

struct ShearPoint {
    Rational u_prime, v_prime;
};

ShearPoint shear(const PointUV& p, const SurfaceConfig& cfg);
PointUV unshear(const ShearPoint& p, const SurfaceConfig& cfg);

/// The polarisation u(Θ+mf) + vf.
DivisorClass polarisation(const Rational& u, const Rational& v, const SurfaceConfig& cfg);

struct VolumeSectionParams {
    Rational alpha;
    Rational beta;
    Rational K;  ///< alpha + m − e

    static VolumeSectionParams make(const Rational& alpha, const Rational& beta, const SurfaceConfig& cfg);
};

void require_nonempty_section(const VolumeSectionParams& vp);

bool on_volume_section(const PointUV& p, const VolumeSectionParams& vp, const SurfaceConfig& cfg);
bool on_volume_section(const PointLambdaQ& p, const VolumeSectionParams& vp, const SurfaceConfig& cfg);

/// q of the volume section over λ: K / (2(λ + (m−e/2−1)λ²)).
Rational section_q(const Rational& lambda, const VolumeSectionParams& vp, const SurfaceConfig& cfg);

/// Positive root of a·u² + b·u + c with integer coefficients.
struct SectionRoot {
    Integer a, b, c;
    bool larger_root = true;
    std::optional<Rational> exact;
    Rational lo, hi;  ///< lo <= u <= hi

    Rational midpoint() const { return exact ? *exact : Rational((lo + hi) / 2); }
};

SectionRoot volume_section_u(const Rational& v, const VolumeSectionParams& vp, const SurfaceConfig& cfg,
                             const Rational& width = Rational(1, 1u << 30));

}  // namespace ellwall
