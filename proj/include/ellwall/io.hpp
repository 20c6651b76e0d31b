#pragma once

#include "ellwall/charge.hpp"
#include "ellwall/destabilize.hpp"
#include "ellwall/walls.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace ellwall::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "ellwall/1";

/// Adds the schema tag to an object document.
json document(json body);

/// Rejects a document whose schema tag is present but foreign.
void check_schema(const json& j);

json rational_to_json(const Rational& x);
Rational rational_from_json(const json& j, const std::string& what);

json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const json& j, const SurfaceConfig& cfg);

json to_json(const ChernCharacter& ch);
ChernCharacter chern_from_json(const json& j, const SurfaceConfig& cfg);

json to_json(const SurfaceConfig& cfg);
SurfaceConfig surface_from_json(const json& j);

json to_json(const Frame& fr);
Frame frame_from_json(const json& j, const SurfaceConfig& cfg);

FactoredCharacter factored_from_json(const json& j, const SurfaceConfig& cfg);
PrimeCharacter prime_from_json(const json& j, const SurfaceConfig& cfg);
OneDimCharacter one_dim_from_json(const json& j, const SurfaceConfig& cfg);
OneDimPrime one_dim_prime_from_json(const json& j, const SurfaceConfig& cfg);

json to_json(const ChargeValue& z);
json to_json(const LimitCharge& lc);
json to_json(const PhaseLimit& p);
json to_json(const LimitComparison& c);
json to_json(const DiscriminantReport& r);
json to_json(const WallSQ& w);
json to_json(const LambdaQWall& w);
json to_json(const AsymptoteClass& a);
json to_json(const CandidateReport& r);
json to_json(const LineBundleReport& r);

json parse_json(const std::string& text, const std::string& source);

enum class PlotFormat { Csv, Svg };

/// start, start+step, ..., up to and including stop.
std::vector<Rational> rational_range(const Rational& start, const Rational& stop, const Rational& step);

std::string emit_volume_section_plot(const VolumeSectionParams& vp, const SurfaceConfig& cfg,
                                     const std::vector<Rational>& v_values, PlotFormat format);

struct Dim2WallSpec {
    std::string label;
    FactoredCharacter ch;
    PrimeCharacter ch_prime;
};

struct Dim1WallSpec {
    std::string label;
    OneDimCharacter ch;
    OneDimPrime ch_prime;
};

using WallSpec = std::variant<Dim2WallSpec, Dim1WallSpec>;

std::string emit_lambda_q_plot(const VolumeSectionParams& vp, const SurfaceConfig& cfg,
                               const std::vector<Rational>& lambdas, const std::vector<WallSpec>& walls,
                               PlotFormat format);

/// Splits comma-separated text into rows of cells; the header is row 0.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace ellwall::io
