#include "ellwall/io.hpp"

#include "ellwall/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace ellwall::io {

json document(json body) {
    body["schema"] = kSchema;
    return body;
}

void check_schema(const json& j) {
    if (j.is_object() && j.contains("schema") && j["schema"] != kSchema)
        throw InputError("unsupported schema tag " + j["schema"].dump());
}

json rational_to_json(const Rational& x) { return format_rational(x); }

Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.dump());
    throw InputError(what + ": expected a rational string \"p/q\"");
}

namespace {

const json& field(const json& j, const char* key, const std::string& what) {
    if (!j.is_object()) throw InputError(what + ": expected a JSON object");
    if (!j.contains(key)) throw InputError(what + ": missing field '" + key + "'");
    return j.at(key);
}

std::int64_t int_from_json(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError(what + ": expected an integer");
    return j.get<std::int64_t>();
}

std::vector<Rational> rational_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + ": expected an array");
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rational_from_json(v, what));
    return out;
}

std::vector<Rational> optional_xi(const json& j, const SurfaceConfig& cfg, const std::string& what) {
    if (!j.contains("xi")) return std::vector<Rational>(cfg.sections().size(), Rational(0));
    auto xi = rational_list(j.at("xi"), what + ".xi");
    if (xi.size() != cfg.sections().size()) throw DimensionError(what + ".xi: one entry per extra section");
    return xi;
}

DivisorClass optional_divisor(const json& j, const char* key, const SurfaceConfig& cfg) {
    if (!j.contains(key)) return DivisorClass::zero(cfg);
    return divisor_from_json(j.at(key), cfg);
}

json rational_map(const std::map<std::string, Rational>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[k] = format_rational(v);
    return out;
}

}  // namespace

json to_json(const DivisorClass& d) {
    json out = json::array();
    for (const auto& c : d.coeffs()) out.push_back(format_rational(c));
    return out;
}

DivisorClass divisor_from_json(const json& j, const SurfaceConfig& cfg) {
    DivisorClass d(rational_list(j, "divisor"));
    check_dimension(d, cfg);
    return d;
}

json to_json(const ChernCharacter& ch) {
    return {{"ch0", format_rational(ch.ch0)}, {"ch1", to_json(ch.ch1)}, {"ch2", format_rational(ch.ch2)}};
}

ChernCharacter chern_from_json(const json& j, const SurfaceConfig& cfg) {
    check_schema(j);
    ChernCharacter ch;
    ch.ch0 = rational_from_json(field(j, "ch0", "character"), "ch0");
    ch.ch1 = divisor_from_json(field(j, "ch1", "character"), cfg);
    ch.ch2 = rational_from_json(field(j, "ch2", "character"), "ch2");
    return ch;
}

json to_json(const SurfaceConfig& cfg) {
    json sections = json::array();
    for (const auto& s : cfg.sections()) sections.push_back({{"theta", s.theta}, {"cross", s.cross}});
    return {{"e", cfg.e()},
            {"genus_base", cfg.genus_base()},
            {"m", format_rational(cfg.m())},
            {"euler_char", format_rational(cfg.euler_char())},
            {"rank", cfg.rank()},
            {"sections", sections}};
}

SurfaceConfig surface_from_json(const json& j) {
    check_schema(j);
    std::int64_t e = int_from_json(field(j, "e", "surface"), "surface.e");
    std::int64_t genus = j.contains("genus_base") ? int_from_json(j.at("genus_base"), "surface.genus_base") : 0;
    Rational m = rational_from_json(field(j, "m", "surface"), "surface.m");
    std::optional<Rational> chi;
    if (j.contains("euler_char")) chi = rational_from_json(j.at("euler_char"), "surface.euler_char");
    std::vector<ExtraSection> sections;
    if (j.contains("sections")) {
        if (!j.at("sections").is_array()) throw InputError("surface.sections: expected an array");
        for (const auto& s : j.at("sections")) {
            ExtraSection es;
            es.theta = int_from_json(field(s, "theta", "section"), "section.theta");
            if (s.contains("cross")) {
                if (!s.at("cross").is_array()) throw InputError("section.cross: expected an array");
                for (const auto& c : s.at("cross")) es.cross.push_back(int_from_json(c, "section.cross"));
            }
            sections.push_back(std::move(es));
        }
    }
    return SurfaceConfig::make(e, genus, m, chi, std::move(sections));
}

json to_json(const Frame& fr) {
    return {{"H", to_json(fr.H)},
            {"Hperp", to_json(fr.Hperp)},
            {"w", format_rational(fr.w)},
            {"g", format_rational(fr.g)},
            {"delta", format_rational(fr.delta)}};
}

Frame frame_from_json(const json& j, const SurfaceConfig& cfg) {
    check_schema(j);
    if (j.is_object() && j.contains("lambda")) {
        Frame fr = elliptic_frame(rational_from_json(j.at("lambda"), "frame.lambda"), cfg);
        if (j.contains("w")) fr.w = rational_from_json(j.at("w"), "frame.w");
        return fr;
    }
    DivisorClass H = divisor_from_json(field(j, "H", "frame"), cfg);
    DivisorClass Hp = divisor_from_json(field(j, "Hperp", "frame"), cfg);
    Rational w = j.contains("w") ? rational_from_json(j.at("w"), "frame.w") : Rational(0);
    return Frame::make(std::move(H), std::move(Hp), w, cfg);
}

FactoredCharacter factored_from_json(const json& j, const SurfaceConfig& cfg) {
    check_schema(j);
    return {rational_from_json(field(j, "x", "factored character"), "x"),
            rational_from_json(field(j, "z", "factored character"), "z"), optional_divisor(j, "L", cfg)};
}

PrimeCharacter prime_from_json(const json& j, const SurfaceConfig& cfg) {
    check_schema(j);
    return {rational_from_json(field(j, "r", "ch_prime"), "r"), rational_from_json(field(j, "k", "ch_prime"), "k"),
            rational_from_json(field(j, "p", "ch_prime"), "p"), optional_xi(j, cfg, "ch_prime"),
            rational_from_json(field(j, "chi", "ch_prime"), "chi")};
}

OneDimCharacter one_dim_from_json(const json& j, const SurfaceConfig& cfg) {
    check_schema(j);
    return {rational_from_json(field(j, "k", "character"), "k"), rational_from_json(field(j, "p", "character"), "p"),
            optional_xi(j, cfg, "character"), rational_from_json(field(j, "z", "character"), "z")};
}

OneDimPrime one_dim_prime_from_json(const json& j, const SurfaceConfig& cfg) {
    check_schema(j);
    return {rational_from_json(field(j, "r", "ch_prime"), "r"), rational_from_json(field(j, "chi", "ch_prime"), "chi"),
            optional_divisor(j, "L", cfg)};
}

json to_json(const ChargeValue& z) { return {{"re", format_rational(z.re)}, {"im", format_rational(z.im)}}; }

json to_json(const LimitCharge& lc) {
    return {{"re_const", format_rational(lc.re_const)},
            {"im_hi", format_rational(lc.im_hi)},
            {"im_lo", format_rational(lc.im_lo)},
            {"K", format_rational(lc.K)}};
}

json to_json(const PhaseLimit& p) {
    return {{"phase_limit", to_string(p.value)}, {"attained", p.attained}, {"case", p.case_tag}};
}

json to_json(const LimitComparison& c) {
    return {{"order", to_string(c.order)},
            {"cross_coeffs", {format_rational(c.cross_coeffs[0]), format_rational(c.cross_coeffs[1])}}};
}

json to_json(const DiscriminantReport& r) {
    return {{"delta", format_rational(r.delta)},
            {"delta_bar", format_rational(r.delta_bar)},
            {"delta_C", format_rational(r.delta_C)},
            {"constant_used", format_rational(r.constant_used)}};
}

json to_json(const WallSQ& w) {
    if (auto* l = std::get_if<WallLine>(&w.kind))
        return {{"kind", "line"},
                {"point", {format_rational(l->s), format_rational(l->q)}},
                {"slope", format_rational(l->slope)}};
    if (auto* v = std::get_if<WallVertical>(&w.kind)) return {{"kind", "vertical"}, {"s", format_rational(v->s)}};
    if (std::holds_alternative<WallEverywhere>(w.kind)) return {{"kind", "everywhere"}};
    return {{"kind", "nowhere"}};
}

json to_json(const LambdaQWall& w) {
    switch (w.kind) {
        case LambdaQWall::Kind::Value: return {{"kind", "value"}, {"q", format_rational(w.q)}};
        case LambdaQWall::Kind::NoWall: return {{"kind", "no_wall"}};
        case LambdaQWall::Kind::Everywhere: return {{"kind", "everywhere"}};
        case LambdaQWall::Kind::Pole: return {{"kind", "pole"}};
    }
    return {};
}

json to_json(const AsymptoteClass& a) {
    return {{"family", a.family == WallFamily::Dim2 ? "dim2" : "dim1"},
            {"case", a.case_tag},
            {"constants", rational_map(a.constants)},
            {"leading_term", a.leading_term()}};
}

json to_json(const CandidateReport& r) {
    return {{"candidate", to_json(r.candidate)},
            {"complement", to_json(r.complement)},
            {"S", format_rational(r.S)},
            {"checks", r.checks},
            {"strict_checks", r.strict_checks}};
}

json to_json(const LineBundleReport& r) {
    return {{"a_L", r.a_L},
            {"D", format_rational(r.D)},
            {"K", format_rational(r.K)},
            {"generic", r.generic},
            {"side", r.side},
            {"predicted_rank", r.predicted_rank},
            {"asymptote", r.asymptote},
            {"case", r.case_tag}};
}

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(source + ": invalid JSON: " + e.what());
    }
}

std::vector<Rational> rational_range(const Rational& start, const Rational& stop, const Rational& step) {
    if (step <= 0) throw DomainError("range step must be positive");
    if (stop < start) throw DomainError("empty range");
    std::vector<Rational> out;
    for (Rational v = start; v <= stop; v += step) out.push_back(v);
    return out;
}

namespace {

std::string fmt_double(double x) {
    if (!std::isfinite(x)) return "nan";
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

std::string svg_document(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                         const std::vector<Series>& series) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    y0 = std::min(y0, 0.0);
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) y1 = y0 + 1;

    const double W = 640, Hh = 480, L = 60, R = 20, T = 40, B = 50;
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double y) { return Hh - B - (y - y0) / (y1 - y0) * (Hh - T - B); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << Hh
       << "\" viewBox=\"0 0 " << W << ' ' << Hh << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
       << title << "</text>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << Hh - B << "\" x2=\"" << W - R << "\" y2=\"" << Hh - B
       << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << Hh - B << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << W - R << "\" y=\"" << Hh - 15 << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
       << "font-size=\"12\">" << xlabel << " [" << fmt_double(x0) << ", " << fmt_double(x1) << "]</text>\n"
       << "<text x=\"10\" y=\"" << T - 8 << "\" font-family=\"sans-serif\" font-size=\"12\">" << ylabel << " ["
       << fmt_double(y0) << ", " << fmt_double(y1) << "]</text>\n";
    double legend_y = T + 14;
    for (const auto& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i)
            os << (i ? " " : "") << fmt_double(px(s.points[i].first)) << ',' << fmt_double(py(s.points[i].second));
        os << "\"/>\n";
        os << "<text x=\"" << W - R - 4 << "\" y=\"" << legend_y << "\" text-anchor=\"end\" fill=\"" << s.color
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
        legend_y += 16;
    }
    os << "</svg>\n";
    return os.str();
}

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string root_label(const SectionRoot& r) {
    return "root(" + r.a.get_str() + ";" + r.b.get_str() + ";" + r.c.get_str() + ")";
}

}  // namespace

std::string emit_volume_section_plot(const VolumeSectionParams& vp, const SurfaceConfig& cfg,
                                     const std::vector<Rational>& v_values, PlotFormat format) {
    require_nonempty_section(vp);
    if (v_values.empty()) throw DomainError("empty v range");
    std::ostringstream csv;
    csv << "v,u,u_asym,u_lo,u_hi,v_float,u_float,u_asym_float\n";
    Series curve{"volume section", kColors[0], {}}, asym{"u = K/v", kColors[1], {}};
    for (const auto& v : v_values) {
        SectionRoot root = volume_section_u(v, vp, cfg);
        Rational asymptote = vp.K / v;
        double uf = to_double(root.midpoint());
        csv << format_rational(v) << ',' << (root.exact ? format_rational(*root.exact) : root_label(root)) << ','
            << format_rational(asymptote) << ',' << format_rational(root.lo) << ',' << format_rational(root.hi) << ','
            << fmt_double(to_double(v)) << ',' << fmt_double(uf) << ',' << fmt_double(to_double(asymptote)) << '\n';
        curve.points.emplace_back(to_double(v), uf);
        asym.points.emplace_back(to_double(v), to_double(asymptote));
    }
    if (format == PlotFormat::Csv) return csv.str();
    return svg_document("volume section (m-e/2)u^2 + uv = " + format_rational(vp.K), "v", "u", {curve, asym});
}

namespace {

std::string wall_label(const WallSpec& w) {
    return std::visit([](const auto& s) { return s.label; }, w);
}

LambdaQWall evaluate_wall(const WallSpec& w, const Rational& lambda, const SurfaceConfig& cfg) {
    if (auto* d2 = std::get_if<Dim2WallSpec>(&w)) return wall_lambda_q(d2->ch, d2->ch_prime, lambda, cfg);
    const auto& d1 = std::get<Dim1WallSpec>(w);
    return wall_lambda_q_dim1(d1.ch, d1.ch_prime, lambda, cfg);
}

}  // namespace

std::string emit_lambda_q_plot(const VolumeSectionParams& vp, const SurfaceConfig& cfg,
                               const std::vector<Rational>& lambdas, const std::vector<WallSpec>& walls,
                               PlotFormat format) {
    require_nonempty_section(vp);
    if (lambdas.empty()) throw DomainError("empty lambda range");
    for (const auto& l : lambdas)
        if (l <= 0 || l >= 1) throw DomainError("lambda range must lie in (0,1)");

    std::ostringstream csv;
    csv << "lambda,q_section,q_asym";
    for (const auto& w : walls) csv << ",q_" << wall_label(w);
    csv << ",lambda_float,q_section_float,q_asym_float";
    for (const auto& w : walls) csv << ",q_" << wall_label(w) << "_float";
    csv << '\n';

    std::vector<Series> series{{"volume section", kColors[0], {}}, {"q = K/(2 lambda)", kColors[1], {}}};
    for (std::size_t i = 0; i < walls.size(); ++i)
        series.push_back({"wall " + wall_label(walls[i]), kColors[(i + 2) % 6], {}});

    for (const auto& l : lambdas) {
        Rational qs = section_q(l, vp, cfg);
        Rational qa = vp.K / (2 * l);
        std::vector<LambdaQWall> values;
        for (const auto& w : walls) values.push_back(evaluate_wall(w, l, cfg));
        csv << format_rational(l) << ',' << format_rational(qs) << ',' << format_rational(qa);
        for (const auto& v : values) csv << ',' << describe(v);
        csv << ',' << fmt_double(to_double(l)) << ',' << fmt_double(to_double(qs)) << ',' << fmt_double(to_double(qa));
        for (const auto& v : values)
            csv << ',' << (v.kind == LambdaQWall::Kind::Value ? fmt_double(to_double(v.q)) : std::string("nan"));
        csv << '\n';
        series[0].points.emplace_back(to_double(l), to_double(qs));
        series[1].points.emplace_back(to_double(l), to_double(qa));
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i].kind == LambdaQWall::Kind::Value)
                series[i + 2].points.emplace_back(to_double(l), to_double(values[i].q));
    }
    if (format == PlotFormat::Csv) return csv.str();
    return svg_document("(lambda, q)-plane", "lambda", "q", series);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace ellwall::io
