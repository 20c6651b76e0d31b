#pragma once

#include "ellwall/chern.hpp"

#include <map>
#include <string>
#include <vector>

namespace ellwall {

struct EnumerationRequest {
    ChernCharacter target;  ///< (x, λ f, z) with x > 0, λ > 0 integral, z <= 0
    VolumeSectionParams vp;
    Rational u0;
    std::int64_t ch2_denominator = 2;
    unsigned jobs = 1;
};

/// Raw data of one candidate ch(A) = (r, η f + γ Θ, ch2).
struct CandidateKey {
    std::int64_t rank;
    std::int64_t gamma;
    std::int64_t eta;
    Rational ch2;
};

struct CandidateReport {
    ChernCharacter candidate;
    ChernCharacter complement;
    Rational S;
    std::map<std::string, bool> checks;         ///< every entry holds for an emitted candidate
    std::map<std::string, bool> strict_checks;  ///< strict variants, recorded only
};

/// Named inequalities for ch(A) against the request. Checks that do not apply are omitted.
struct CheckResult {
    Rational S;
    std::map<std::string, bool> checks;
    std::map<std::string, bool> strict_checks;
    bool passes() const;
};

CheckResult check_candidate(const EnumerationRequest& req, const CandidateKey& key, const SurfaceConfig& cfg);

/// v0 with u0(Θ+mf) + v0 f on the volume section.
Rational section_v0(const EnumerationRequest& req, const SurfaceConfig& cfg);

void validate_request(const EnumerationRequest& req, const SurfaceConfig& cfg);

std::vector<CandidateReport> enumerate_destabilizers(const EnumerationRequest& req, const SurfaceConfig& cfg);

struct LineBundleReport {
    std::int64_t a_L;
    Rational D;
    Rational K;
    bool generic;
    std::string side;  ///< "above" or "below": the volume section relative to the wall asymptote
    std::int64_t predicted_rank;
    std::string asymptote;
    std::string case_tag;
};

LineBundleReport line_bundle_analysis(std::int64_t a_L, const VolumeSectionParams& vp, const SurfaceConfig& cfg);

}  // namespace ellwall
