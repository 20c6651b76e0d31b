#include "cli.hpp"

#include "ellwall/errors.hpp"
#include "ellwall/fmtransform.hpp"
#include "ellwall/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

namespace ellwall::cli {

namespace {

using io::json;

struct Inputs {
    std::istream* in = nullptr;

    json load(const std::string& spec, const std::string& what) const {
        if (spec.empty()) throw InputError("missing input for " + what);
        if (spec == "-") {
            std::stringstream ss;
            ss << in->rdbuf();
            return io::parse_json(ss.str(), what + " (stdin)");
        }
        if (spec.front() == '{' || spec.front() == '[') return io::parse_json(spec, what);
        std::ifstream f(spec);
        if (!f) throw InputError("cannot read " + what + " file '" + spec + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        return io::parse_json(ss.str(), spec);
    }
};

struct SurfaceOpts {
    std::string file;
    std::string e, m, genus, euler;

    SurfaceConfig build(const Inputs& inputs) const {
        json j;
        if (!file.empty()) j = inputs.load(file, "surface");
        else j = json::object();
        if (!e.empty()) {
            auto r = parse_rational(e);
            if (r.get_den() != 1) throw InputError("--e must be an integer");
            j["e"] = r.get_num().get_si();
        }
        if (!m.empty()) j["m"] = m;
        if (!genus.empty()) {
            auto r = parse_rational(genus);
            if (r.get_den() != 1) throw InputError("--genus-base must be an integer");
            j["genus_base"] = r.get_num().get_si();
        }
        if (!euler.empty()) j["euler_char"] = euler;
        if (!j.contains("e") || !j.contains("m")) throw InputError("surface needs --surface FILE or --e and --m");
        return io::surface_from_json(j);
    }
};

Rational flag_rational(const std::string& text, const std::string& name) {
    if (text.empty()) throw InputError("missing --" + name);
    return parse_rational(text);
}

std::vector<Rational> parse_range(const std::string& text, const std::string& name) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() != 3) throw InputError("--" + name + " expects start:stop:step");
    return io::rational_range(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

unsigned default_jobs() {
    if (const char* env = std::getenv("ELLWALL_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (...) {
        }
        throw InputError("ELLWALL_JOBS must be a positive integer");
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact stability data on Weierstrass elliptic surfaces", "ellwall"};
    app.require_subcommand(1);
    app.fallthrough();

    Inputs inputs{&in};
    SurfaceOpts surf;
    std::string out_path;
    app.add_option("--surface", surf.file, "surface JSON (file, inline JSON, or - for stdin)");
    app.add_option("--e", surf.e, "e = -Theta^2");
    app.add_option("--m", surf.m, "m as p/q");
    app.add_option("--genus-base", surf.genus, "genus of the base curve");
    app.add_option("--euler-char", surf.euler, "chi(O_X) as p/q (default e)");
    app.add_option("--out", out_path, "write the result here instead of stdout");

    std::function<std::string()> action;
    auto emit = [](const json& body) { return io::document(body).dump(2) + "\n"; };

    // Frequently shared option storage.
    std::string ch, ch_prime, omega, B, L, frame, alpha, beta = "1", lambda, dim = "2", functor, which, format = "json";
    std::string s_val, q_val, u0, target, m0, range, u_val, v_val, a_file, b_file, aL;
    std::vector<std::string> wall_files;
    int ch2_den = 2;
    unsigned jobs = 0;

    // surface check
    auto* surface = app.add_subcommand("surface", "surface configuration")->require_subcommand(1);
    surface->add_subcommand("check", "validate a surface configuration")->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            json body = io::to_json(cfg);
            body["warnings"] = cfg.warnings();
            if (cfg.rank() == 2) body["theta_mf_ample"] = cone_membership(DivisorClass::theta_f(1, cfg.m(), cfg), cfg).ample;
            return emit(body);
        };
    });

    // lattice operations
    auto* lattice = app.add_subcommand("lattice", "Neron-Severi lattice operations")->require_subcommand(1);
    auto* inter = lattice->add_subcommand("intersect", "intersection number a.b");
    inter->add_option("--a", a_file)->required();
    inter->add_option("--b", b_file)->required();
    inter->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto a = io::divisor_from_json(inputs.load(a_file, "a"), cfg);
            auto b = io::divisor_from_json(inputs.load(b_file, "b"), cfg);
            return emit({{"intersection", format_rational(intersect(a, b, cfg))}});
        };
    });
    auto* cone = lattice->add_subcommand("cone", "nef/ample/Mori cone membership (rank 2)");
    cone->add_option("--divisor", a_file)->required();
    cone->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto c = cone_membership(io::divisor_from_json(inputs.load(a_file, "divisor"), cfg), cfg);
            return emit({{"nef", c.nef}, {"ample", c.ample}, {"effective_curve_cone", c.effective_curve_cone}});
        };
    });
    auto* frame_cmd = lattice->add_subcommand("frame", "elliptic frame at lambda");
    frame_cmd->add_option("--lambda", lambda)->required();
    frame_cmd->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            return emit(io::to_json(elliptic_frame(flag_rational(lambda, "lambda"), cfg)));
        };
    });
    auto* dec = lattice->add_subcommand("decompose", "frame coordinates (l1, l2, residual) of a divisor");
    dec->add_option("--divisor", a_file)->required();
    dec->add_option("--frame", frame)->required();
    dec->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            Frame fr = io::frame_from_json(inputs.load(frame, "frame"), cfg);
            auto d = decompose(io::divisor_from_json(inputs.load(a_file, "divisor"), cfg), fr, cfg);
            return emit({{"l1", format_rational(d.l1)}, {"l2", format_rational(d.l2)}, {"residual", io::to_json(d.residual)}});
        };
    });
    auto* secu = lattice->add_subcommand("section-u", "u on the volume section over v");
    secu->add_option("--v", v_val)->required();
    secu->add_option("--alpha", alpha)->required();
    secu->add_option("--beta", beta);
    secu->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto vp = VolumeSectionParams::make(flag_rational(alpha, "alpha"), flag_rational(beta, "beta"), cfg);
            SectionRoot r = volume_section_u(flag_rational(v_val, "v"), vp, cfg);
            json body = {{"quadratic", {r.a.get_str(), r.b.get_str(), r.c.get_str()}},
                         {"root", "larger"},
                         {"lo", format_rational(r.lo)},
                         {"hi", format_rational(r.hi)}};
            body["exact"] = r.exact ? json(format_rational(*r.exact)) : json(nullptr);
            return emit(body);
        };
    });
    auto* coords = lattice->add_subcommand("coords", "(u,v) to (lambda,t), (lambda,q) and shear coordinates");
    coords->add_option("--u", u_val)->required();
    coords->add_option("--v", v_val)->required();
    coords->add_option("--alpha", alpha);
    coords->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            PointUV p = make_uv(flag_rational(u_val, "u"), flag_rational(v_val, "v"));
            PointLambdaT lt = to_lambda_t(p);
            PointLambdaQ lq = to_lambda_q(p);
            ShearPoint sh = shear(p, cfg);
            json body = {{"lambda", format_rational(lt.lambda)},
                         {"t", format_rational(lt.t)},
                         {"q", format_rational(lq.q)},
                         {"u_prime", format_rational(sh.u_prime)},
                         {"v_prime", format_rational(sh.v_prime)}};
            if (!alpha.empty()) {
                auto vp = VolumeSectionParams::make(parse_rational(alpha), 1, cfg);
                body["on_volume_section"] = on_volume_section(p, vp, cfg);
                body["K"] = format_rational(vp.K);
            }
            return emit(body);
        };
    });

    // chern operations
    auto* chern = app.add_subcommand("chern", "Chern character invariants")->require_subcommand(1);
    auto* slope_cmd = chern->add_subcommand("slope", "mu_{omega,B}");
    slope_cmd->add_option("--ch", ch)->required();
    slope_cmd->add_option("--omega", omega)->required();
    slope_cmd->add_option("--B", B);
    slope_cmd->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto c = io::chern_from_json(inputs.load(ch, "ch"), cfg);
            auto w = io::divisor_from_json(inputs.load(omega, "omega"), cfg);
            auto b = B.empty() ? DivisorClass::zero(cfg) : io::divisor_from_json(inputs.load(B, "B"), cfg);
            Slope s = slope(c, w, b, cfg);
            return emit({{"slope", s.infinite ? std::string("+inf") : format_rational(s.value)}});
        };
    });
    std::string C_val;
    auto* disc = chern->add_subcommand("discriminants", "Delta, Delta-bar and Delta^C");
    disc->add_option("--ch", ch)->required();
    disc->add_option("--omega", omega)->required();
    disc->add_option("--B", B);
    disc->add_option("--C", C_val);
    disc->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto c = io::chern_from_json(inputs.load(ch, "ch"), cfg);
            auto w = io::divisor_from_json(inputs.load(omega, "omega"), cfg);
            auto b = B.empty() ? DivisorClass::zero(cfg) : io::divisor_from_json(inputs.load(B, "B"), cfg);
            Rational C = C_val.empty() ? Rational(0) : parse_rational(C_val);
            return emit(io::to_json(discriminants(c, w, b, C, cfg)));
        };
    });
    auto* bog = chern->add_subcommand("bogomolov-constant", "C = e/(u0^2 (m-e)^2)");
    bog->add_option("--u0", u0)->required();
    bog->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            return emit({{"C", format_rational(bogomolov_constant(flag_rational(u0, "u0"), cfg))}});
        };
    });
    auto* eul = chern->add_subcommand("euler", "twisted Euler characteristic, Gieseker slope and threshold");
    eul->add_option("--ch", ch)->required();
    eul->add_option("--alpha", alpha);
    eul->add_option("--beta", beta);
    eul->add_option("--m0", m0);
    eul->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto c = io::chern_from_json(inputs.load(ch, "ch"), cfg);
            json body = {{"chi_L", format_rational(twisted_euler(c, cfg))}};
            if (!alpha.empty()) {
                auto vp = VolumeSectionParams::make(parse_rational(alpha), flag_rational(beta, "beta"), cfg);
                GiesekerSlope g = gieseker_slope_1dim(c, vp, cfg);
                body["gieseker_slope"] = format_rational(g.slope);
                body["gieseker_normalized"] = format_rational(g.normalized);
            }
            if (!m0.empty()) body["torsion_free_threshold"] = format_rational(torsion_free_threshold(c, parse_rational(m0), cfg));
            return emit(body);
        };
    });

    // transform / twist
    auto* tr = app.add_subcommand("transform", "cohomological Fourier-Mukai transform");
    tr->add_option("--functor", functor, "phi or phihat")->required()->check(CLI::IsMember({"phi", "phihat"}));
    tr->add_option("--ch", ch, "character JSON (default stdin)");
    tr->add_option("--wit", which, "also report the W0/W1 sign predicate")->check(CLI::IsMember({"W0", "W1"}));
    tr->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto c = io::chern_from_json(inputs.load(ch.empty() ? "-" : ch, "ch"), cfg);
            Functor f = functor == "phi" ? Functor::Phi : Functor::PhiHat;
            json body = io::to_json(apply(f, c, cfg));
            body["composition_check"] = composition_check(c, cfg);
            if (!which.empty())
                body["wit_sign"] = wit_sign(c, which == "W0" ? WitIndex::W0 : WitIndex::W1, f, cfg);
            return emit(body);
        };
    });
    auto* tw = app.add_subcommand("twist", "e^{-B} ch, or e^{L} ch with --L");
    tw->add_option("--ch", ch)->required();
    auto* tw_b = tw->add_option("--B", B);
    auto* tw_l = tw->add_option("--L", L);
    tw_b->excludes(tw_l);
    tw->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto c = io::chern_from_json(inputs.load(ch, "ch"), cfg);
            if (B.empty() && L.empty()) throw InputError("twist needs --B or --L");
            if (!B.empty()) return emit(io::to_json(twist(c, io::divisor_from_json(inputs.load(B, "B"), cfg), cfg)));
            return emit(io::to_json(line_bundle_twist(c, io::divisor_from_json(inputs.load(L, "L"), cfg), cfg)));
        };
    });

    // charges
    auto* chg = app.add_subcommand("charge", "central charge Z_{omega,B}");
    chg->add_option("--ch", ch)->required();
    chg->add_option("--omega", omega)->required();
    chg->add_option("--B", B);
    chg->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto c = io::chern_from_json(inputs.load(ch, "ch"), cfg);
            auto w = io::divisor_from_json(inputs.load(omega, "omega"), cfg);
            auto b = B.empty() ? DivisorClass::zero(cfg) : io::divisor_from_json(inputs.load(B, "B"), cfg);
            return emit(io::to_json(central_charge(c, w, b, cfg)));
        };
    });
    auto* csq = app.add_subcommand("charge-sq", "central charge Z_{s,q} in a frame");
    csq->add_option("--ch", ch)->required();
    csq->add_option("--frame", frame)->required();
    csq->add_option("--s", s_val)->required();
    csq->add_option("--q", q_val)->required();
    csq->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto c = io::chern_from_json(inputs.load(ch, "ch"), cfg);
            Frame fr = io::frame_from_json(inputs.load(frame, "frame"), cfg);
            PointSQ p{flag_rational(s_val, "s"), flag_rational(q_val, "q")};
            return emit(io::to_json(charge_sq(c, p, fr, cfg)));
        };
    });
    auto* lp = app.add_subcommand("limit-phase", "limit central charge and phase limit along the volume section");
    lp->add_option("--ch", ch)->required();
    lp->add_option("--alpha", alpha)->required();
    lp->add_option("--beta", beta);
    lp->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto vp = VolumeSectionParams::make(flag_rational(alpha, "alpha"), flag_rational(beta, "beta"), cfg);
            auto c = io::chern_from_json(inputs.load(ch, "ch"), cfg);
            LimitCharge lc = limit_charge(c, vp, cfg);
            json body = io::to_json(phase_limit(lc));
            body["limit_charge"] = io::to_json(lc);
            if (c.ch1.in_theta_f_span()) body["re_z_identity"] = re_z_identity_check(c, vp, cfg);
            return emit(body);
        };
    });
    auto* lcmp = app.add_subcommand("limit-compare", "Z^l phase comparison of two characters");
    lcmp->add_option("--first", a_file)->required();
    lcmp->add_option("--second", b_file)->required();
    lcmp->add_option("--alpha", alpha)->required();
    lcmp->add_option("--beta", beta);
    lcmp->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto vp = VolumeSectionParams::make(flag_rational(alpha, "alpha"), flag_rational(beta, "beta"), cfg);
            auto lm = limit_charge(io::chern_from_json(inputs.load(a_file, "m"), cfg), vp, cfg);
            auto ln = limit_charge(io::chern_from_json(inputs.load(b_file, "n"), cfg), vp, cfg);
            json body = io::to_json(limit_compare(lm, ln));
            body["phase_limits"] = {to_string(phase_limit(lm).value), to_string(phase_limit(ln).value)};
            return emit(body);
        };
    });

    // walls
    auto* wall = app.add_subcommand("wall", "potential walls")->require_subcommand(1);
    auto* wsq = wall->add_subcommand("sq", "wall in the (s,q)-plane of a frame");
    wsq->add_option("--ch", ch)->required();
    wsq->add_option("--ch-prime", ch_prime)->required();
    wsq->add_option("--frame", frame)->required();
    wsq->add_option("--L", L, "shift both characters by e^L");
    wsq->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto a = io::chern_from_json(inputs.load(ch, "ch"), cfg);
            auto b = io::chern_from_json(inputs.load(ch_prime, "ch-prime"), cfg);
            Frame fr = io::frame_from_json(inputs.load(frame, "frame"), cfg);
            WallSQ w = L.empty() ? bertram_wall(a, b, fr, cfg)
                                 : shift_wall(a, b, io::divisor_from_json(inputs.load(L, "L"), cfg), fr, cfg);
            json body = io::to_json(w);
            if (a.ch0 != 0 && L.empty()) {
                PointSQ P = nested_point(a, fr, cfg);
                body["P"] = {format_rational(P.s), format_rational(P.q)};
                body["F"] = format_rational(nested_F(a, fr, cfg));
            }
            return emit(body);
        };
    });
    auto* wlq = wall->add_subcommand("lambda-q", "exact wall q(lambda) at s = 0");
    wlq->add_option("--dim", dim)->check(CLI::IsMember({"1", "2"}));
    wlq->add_option("--ch", ch)->required();
    wlq->add_option("--ch-prime", ch_prime)->required();
    auto* wlq_l = wlq->add_option("--lambda", lambda);
    auto* wlq_r = wlq->add_option("--lambda-range", range, "start:stop:step");
    wlq_l->excludes(wlq_r);
    wlq->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "svg"}));
    wlq->add_flag_callback("--csv", [&] { format = "csv"; });
    wlq->add_flag_callback("--svg", [&] { format = "svg"; });
    wlq->add_option("--alpha", alpha, "volume section drawn alongside in csv/svg output");
    wlq->callback([&] {
        action = [&]() -> std::string {
            SurfaceConfig cfg = surf.build(inputs);
            json jc = inputs.load(ch, "ch"), jp = inputs.load(ch_prime, "ch-prime");
            io::WallSpec spec;
            if (dim == "2") spec = io::Dim2WallSpec{"wall", io::factored_from_json(jc, cfg), io::prime_from_json(jp, cfg)};
            else spec = io::Dim1WallSpec{"wall", io::one_dim_from_json(jc, cfg), io::one_dim_prime_from_json(jp, cfg)};
            std::vector<Rational> lambdas = range.empty() ? std::vector<Rational>{flag_rational(lambda, "lambda")}
                                                          : parse_range(range, "lambda-range");
            if (format != "json") {
                auto vp = VolumeSectionParams::make(flag_rational(alpha, "alpha"), flag_rational(beta, "beta"), cfg);
                return io::emit_lambda_q_plot(vp, cfg, lambdas, {spec},
                                              format == "csv" ? io::PlotFormat::Csv : io::PlotFormat::Svg);
            }
            json rows = json::array();
            for (const auto& l : lambdas) {
                LambdaQWall w = dim == "2" ? wall_lambda_q(std::get<io::Dim2WallSpec>(spec).ch,
                                                           std::get<io::Dim2WallSpec>(spec).ch_prime, l, cfg)
                                           : wall_lambda_q_dim1(std::get<io::Dim1WallSpec>(spec).ch,
                                                                std::get<io::Dim1WallSpec>(spec).ch_prime, l, cfg);
                json row = io::to_json(w);
                row["lambda"] = format_rational(l);
                rows.push_back(row);
            }
            if (rows.size() == 1) return emit(rows[0]);
            return emit({{"walls", rows}});
        };
    });
    auto* was = wall->add_subcommand("asymptote", "asymptotic class of a (lambda,q)-plane wall");
    was->add_option("--dim", dim)->check(CLI::IsMember({"1", "2"}));
    was->add_option("--ch", ch)->required();
    was->add_option("--ch-prime", ch_prime)->required();
    was->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            json jc = inputs.load(ch, "ch"), jp = inputs.load(ch_prime, "ch-prime");
            if (dim == "2")
                return emit(io::to_json(
                    classify_asymptote_dim2(io::factored_from_json(jc, cfg), io::prime_from_json(jp, cfg), cfg)));
            return emit(io::to_json(
                classify_asymptote_dim1(io::one_dim_from_json(jc, cfg), io::one_dim_prime_from_json(jp, cfg), cfg)));
        };
    });

    // destabilizers
    auto* destab = app.add_subcommand("destab", "destabilizing characters")->require_subcommand(1);
    auto* en = destab->add_subcommand("enumerate", "enumerate candidate destabilizing characters");
    en->add_option("--target", target)->required();
    en->add_option("--alpha", alpha)->required();
    en->add_option("--beta", beta);
    en->add_option("--u0", u0)->required();
    en->add_option("--ch2-denominator", ch2_den);
    en->add_option("--jobs", jobs, "worker threads (default $ELLWALL_JOBS or 1)");
    en->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            EnumerationRequest req{io::chern_from_json(inputs.load(target, "target"), cfg),
                                   VolumeSectionParams::make(flag_rational(alpha, "alpha"), flag_rational(beta, "beta"), cfg),
                                   flag_rational(u0, "u0"), ch2_den, jobs ? jobs : default_jobs()};
            json arr = json::array();
            for (const auto& r : enumerate_destabilizers(req, cfg)) arr.push_back(io::to_json(r));
            return emit({{"candidates", arr}, {"count", arr.size()}});
        };
    });

    auto* lb = app.add_subcommand("linebundle", "line bundle chamber analysis")->require_subcommand(1);
    auto* lba = lb->add_subcommand("analyze", "wall of O(a_L Theta) against the volume section");
    lba->add_option("--aL", aL)->required();
    lba->add_option("--alpha", alpha)->required();
    lba->add_option("--beta", beta);
    lba->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            Rational a = flag_rational(aL, "aL");
            if (a.get_den() != 1 || !a.get_num().fits_slong_p()) throw InputError("--aL must be an integer");
            auto vp = VolumeSectionParams::make(flag_rational(alpha, "alpha"), flag_rational(beta, "beta"), cfg);
            return emit(io::to_json(line_bundle_analysis(a.get_num().get_si(), vp, cfg)));
        };
    });

    // plots
    auto* plot = app.add_subcommand("plot", "plot data")->require_subcommand(1);
    std::string plot_format = "csv";
    auto* pvs = plot->add_subcommand("volume-section", "(v, u) curve and its asymptote u = K/v");
    pvs->add_option("--alpha", alpha)->required();
    pvs->add_option("--beta", beta);
    pvs->add_option("--v-range", range, "start:stop:step")->required();
    pvs->add_option("--format", plot_format)->check(CLI::IsMember({"csv", "svg"}));
    pvs->add_flag_callback("--csv", [&] { plot_format = "csv"; });
    pvs->add_flag_callback("--svg", [&] { plot_format = "svg"; });
    pvs->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto vp = VolumeSectionParams::make(flag_rational(alpha, "alpha"), flag_rational(beta, "beta"), cfg);
            return io::emit_volume_section_plot(vp, cfg, parse_range(range, "v-range"),
                                                plot_format == "csv" ? io::PlotFormat::Csv : io::PlotFormat::Svg);
        };
    });
    auto* plq = plot->add_subcommand("lambda-q", "volume section and walls in the (lambda, q)-plane");
    plq->add_option("--alpha", alpha)->required();
    plq->add_option("--beta", beta);
    plq->add_option("--lambda-range", range, "start:stop:step")->required();
    plq->add_option("--wall", wall_files, "wall JSON {label, dim, ch, ch_prime}; repeatable");
    plq->add_option("--format", plot_format)->check(CLI::IsMember({"csv", "svg"}));
    plq->add_flag_callback("--csv", [&] { plot_format = "csv"; });
    plq->add_flag_callback("--svg", [&] { plot_format = "svg"; });
    plq->callback([&] {
        action = [&] {
            SurfaceConfig cfg = surf.build(inputs);
            auto vp = VolumeSectionParams::make(flag_rational(alpha, "alpha"), flag_rational(beta, "beta"), cfg);
            std::vector<io::WallSpec> walls;
            for (std::size_t i = 0; i < wall_files.size(); ++i) {
                json w = inputs.load(wall_files[i], "wall");
                std::string label = w.value("label", "w" + std::to_string(i + 1));
                int d = w.value("dim", 2);
                if (!w.contains("ch") || !w.contains("ch_prime")) throw InputError("wall needs ch and ch_prime");
                if (d == 2)
                    walls.push_back(io::Dim2WallSpec{label, io::factored_from_json(w["ch"], cfg),
                                                     io::prime_from_json(w["ch_prime"], cfg)});
                else if (d == 1)
                    walls.push_back(io::Dim1WallSpec{label, io::one_dim_from_json(w["ch"], cfg),
                                                     io::one_dim_prime_from_json(w["ch_prime"], cfg)});
                else
                    throw InputError("wall dim must be 1 or 2");
            }
            return io::emit_lambda_q_plot(vp, cfg, parse_range(range, "lambda-range"), walls,
                                          plot_format == "csv" ? io::PlotFormat::Csv : io::PlotFormat::Svg);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (!action) throw InputError("no command given");
        std::string result = action();
        if (out_path.empty()) {
            out << result;
        } else {
            std::ofstream f(out_path);
            if (!f) throw InputError("cannot write '" + out_path + "'");
            f << result;
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const io::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ellwall::cli
