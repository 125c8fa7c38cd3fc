#include "bq/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bq/entangle.hpp"
#include "bq/io.hpp"
#include "bq/rotations.hpp"
#include "bq/verify.hpp"

namespace bq::cli {

namespace {

using Json = nlohmann::ordered_json;

// Adding +0 turns arithmetic -0 into +0 for display.
Complex tidy(Complex z) { return {z.real() + 0.0, z.imag() + 0.0}; }

BiQuat tidy(const BiQuat& q) { return {tidy(q.c1), tidy(q.c2), tidy(q.c3), tidy(q.c4)}; }

Json biquat_json(const BiQuat& q) { return Json::parse(format_biquat(tidy(q), Style::json)); }

Json support_json(const Support& s) { return Json(std::vector<int>(s.begin(), s.end())); }

Json report_json(const RestrictionReport& r) {
    Json j;
    j["r1_pass"] = r.r1_pass;
    j["r2_pass"] = r.r2_pass;
    j["r3_pass"] = r.r3_pass;
    j["pass"] = r.passed();
    j["p_support"] = support_json(r.p_support);
    j["q_support"] = support_json(r.q_support);
    j["concurrence_p"] = r.concurrence_p;
    j["detail"] = r.detail;
    return j;
}

void print_report(std::ostream& out, const RestrictionReport& r, bool json) {
    if (json) {
        out << report_json(r).dump(2) << "\n";
        return;
    }
    out << "restrictions: " << (r.passed() ? "pass" : "FAIL") << "\n  " << r.detail << "\n";
}

struct Options {
    bool json = false;
    double tol = kDefaultTol;
    std::string p, q, x, map = "conj", out_path;
    int samples = 1000;
    std::uint64_t seed = 7;
    int grid = 5;
    int case_id = 1;
    bool normalize = false;
    bool strict = false;
    double law_tol = verify::kConcurrenceTol;
};

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cmd_entangle(const Options& o, std::ostream& out) {
    const Quat p = parse_quat(o.p);
    const BiQuat q = parse_biquat(o.q);
    try {
        const EntangleOutcome r = entangle(p, q, o.tol);
        if (o.json) {
            Json j;
            j["result"] = biquat_json(r.result);
            j["concurrence_before"] = r.concurrence_before;
            j["concurrence_after"] = r.concurrence_after;
            j["degenerate_amplitudes"] = r.degenerate_amplitudes;
            j["restrictions"] = report_json(r.report);
            out << j.dump(2) << "\n";
        } else {
            out << "Lambda(q) = " << format_biquat(tidy(r.result)) << "\n";
            out << "concurrence: " << format_double(r.concurrence_before) << " -> "
                << format_double(r.concurrence_after) << "\n";
            if (r.degenerate_amplitudes) {
                out << "warning: degenerate amplitudes (alpha or beta is zero)\n";
            }
            print_report(out, r.report, false);
        }
        return kSuccess;
    } catch (const RestrictionError& e) {
        print_report(out, e.report(), o.json);
        return kRestrictionFailed;
    }
}

int cmd_concurrence(const Options& o, std::istream& in, std::ostream& out) {
    const std::string text = o.q == "-" ? read_all(in) : o.q;
    BiQuat q = parse_biquat(text);
    if (o.normalize) {
        q = normalize(q);
    }
    const double c = concurrence(q, o.tol);
    if (o.json) {
        Json j;
        j["state"] = biquat_json(q);
        j["concurrence"] = c;
        out << j.dump(2) << "\n";
    } else {
        out << format_double(c) << "\n";
    }
    return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
    const RestrictionReport r = check_restrictions(parse_quat(o.p), parse_biquat(o.q), o.tol);
    print_report(out, r, o.json);
    return r.passed() ? kSuccess : kRestrictionFailed;
}

int cmd_rotate(const Options& o, std::ostream& out) {
    BiQuat image;
    if (o.map == "left" || o.map == "right") {
        image = BiQuat(rotate_onesided(parse_quat(o.q), parse_quat(o.x),
                                       o.map == "left" ? Side::left : Side::right, o.tol));
    } else if (o.map == "conj") {
        image = BiQuat(conjugate_rotation(parse_quat(o.q), parse_quat(o.x), o.tol));
    } else if (o.map == "psi") {
        image = psi_rotation(parse_biquat(o.q), parse_biquat(o.x), o.tol);
    } else if (o.map == "lorentz") {
        image = lorentz(parse_biquat(o.q), parse_biquat(o.x), o.tol);
    } else {
        image = mu_rotation(parse_biquat(o.q), parse_biquat(o.x), o.tol);
    }
    if (o.json) {
        Json j;
        j["map"] = o.map;
        j["image"] = biquat_json(image);
        out << j.dump(2) << "\n";
    } else {
        out << format_biquat(tidy(image)) << "\n";
    }
    return kSuccess;
}

int cmd_polar(const Options& o, std::ostream& out) {
    const BiQuat q = parse_biquat(o.q);
    if (is_real(q, 0.0)) {
        const PolarForm f = polar(q.real_part(), o.tol);
        if (o.json) {
            Json j;
            j["magnitude"] = f.magnitude;
            j["axis"] = f.axis;
            j["angle"] = f.angle;
            j["degenerate_axis"] = f.degenerate_axis;
            out << j.dump(2) << "\n";
        } else {
            out << "magnitude: " << format_double(f.magnitude) << "\n"
                << "axis: " << format_double(f.axis[0]) << ", " << format_double(f.axis[1])
                << ", " << format_double(f.axis[2]) << (f.degenerate_axis ? " (degenerate)" : "")
                << "\n"
                << "angle: " << format_double(f.angle) << "\n";
        }
        return kSuccess;
    }
    const PolarFormC f = polar_c(q, o.tol);
    if (o.json) {
        Json j;
        j["magnitude"] = {f.magnitude.real(), f.magnitude.imag()};
        j["axis"] = biquat_json(f.axis);
        j["angle"] = {f.angle.real(), f.angle.imag()};
        j["degenerate_axis"] = f.degenerate_axis;
        out << j.dump(2) << "\n";
    } else {
        out << "magnitude: " << format_complex(tidy(f.magnitude)) << "\n"
            << "axis: " << format_biquat(tidy(f.axis)) << (f.degenerate_axis ? " (degenerate)" : "")
            << "\n"
            << "angle: " << format_complex(tidy(f.angle)) << "\n";
    }
    return kSuccess;
}

int cmd_verify_theorem(const Options& o, std::ostream& out) {
    const auto report = verify::verify_theorem(o.samples, o.seed, o.law_tol);
    out << (o.json ? verify::to_json(report) + "\n" : verify::to_text(report));
    return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_verify_examples(const Options& o, std::ostream& out) {
    const auto report = verify::verify_examples();
    out << (o.json ? verify::to_json(report) + "\n" : verify::to_text(report));
    if (o.strict && !report.passed(true)) {
        out << "strict mode: not every example matches its expected value exactly\n";
        return kVerificationFailed;
    }
    return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.out_path.empty()) {
        write_sweep(o.grid, o.case_id, out);
        return kSuccess;
    }
    std::ofstream file(o.out_path);
    if (!file) {
        err << "error: cannot open " << o.out_path << " for writing\n";
        return kUsageError;
    }
    write_sweep(o.grid, o.case_id, file);
    out << "wrote " << static_cast<long long>(o.grid) * o.grid * o.grid * o.grid << " rows to "
        << o.out_path << "\n";
    return kSuccess;
}

} // namespace

void write_sweep(int grid, int case_id, std::ostream& out) {
    if (grid < 1) {
        throw DomainError("sweep grid must be at least 1");
    }
    if (case_id < 1 || case_id > 8) {
        throw DomainError("sweep case must be in 1..8");
    }
    const verify::TheoremCase& tc = verify::theorem_cases()[static_cast<std::size_t>(case_id - 1)];
    auto quarter = [grid](int k) {
        return grid == 1 ? std::numbers::pi / 4 : k * (std::numbers::pi / 2) / (grid - 1);
    };
    auto phase = [grid](int k) { return k * (2 * std::numbers::pi) / grid; };

    out << kSweepHeader << "\n";
    for (int ic = 0; ic < grid; ++ic) {
        for (int ia = 0; ia < grid; ++ia) {
            for (int ib = 0; ib < grid; ++ib) {
                for (int ip = 0; ip < grid; ++ip) {
                    const Complex alpha = std::polar(std::cos(quarter(ic)), phase(ia));
                    const Complex beta = std::polar(std::sin(quarter(ic)), phase(ib));
                    const double ai = std::cos(quarter(ip));
                    const double aj = std::sin(quarter(ip));
                    std::array<double, 4> pc{};
                    pc[tc.p_support.first - 1] = ai;
                    pc[tc.p_support.second - 1] = aj;
                    const Quat p(pc[0], pc[1], pc[2], pc[3]);
                    const BiQuat q = embed_state({alpha, beta, tc.q_variant}, 1e-12);
                    const double c = concurrence(lambda_map(p, q, 1e-12), 1e-12);
                    out << case_id << ',' << format_double(alpha.real()) << ','
                        << format_double(alpha.imag()) << ',' << format_double(beta.real()) << ','
                        << format_double(beta.imag()) << ',' << format_double(ai) << ','
                        << format_double(aj) << ',' << format_double(c) << ','
                        << (c >= 1.0 - 1e-9 ? 1 : 0) << '\n';
                }
            }
        }
    }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    Options o;
    CLI::App app{"Biquaternion entanglement toolkit"};
    app.name("bqent");
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_option("--tol", o.tol, "Absolute tolerance for predicates")->check(CLI::PositiveNumber);

    auto* ent = app.add_subcommand("entangle", "Apply Lambda(q) = p q p under R1-R3");
    ent->add_option("--p", o.p, "Real unit rotation quaternion")->required();
    ent->add_option("--q", o.q, "Normalised biquaternion state")->required();

    auto* conc = app.add_subcommand("concurrence", "Concurrence 2|q1 q4 - q2 q3|");
    conc->add_option("state", o.q, "Biquaternion, or - to read stdin")->required();
    conc->add_flag("--normalize", o.normalize, "Normalise the state first");

    auto* check = app.add_subcommand("check", "Evaluate restrictions R1-R3 (exit 2 on failure)");
    check->add_option("--p", o.p, "Real unit rotation quaternion")->required();
    check->add_option("--q", o.q, "Normalised biquaternion state")->required();

    auto* rot = app.add_subcommand("rotate", "Apply a rotation map");
    rot->add_option("--map", o.map, "left | right | conj | psi | lorentz | mu")
        ->check(CLI::IsMember({"left", "right", "conj", "psi", "lorentz", "mu"}));
    rot->add_option("--q", o.q, "Rotation (quaternion or biquaternion)")->required();
    rot->add_option("--x", o.x, "Argument")->required();

    auto* pol = app.add_subcommand("polar", "Polar form of a quaternion or biquaternion");
    pol->add_option("value", o.q, "Quaternion")->required();

    auto* vt = app.add_subcommand("verify-theorem", "Check the eight entanglement cases (exit 3 on failure)");
    vt->add_option("--samples", o.samples, "Random points per case")->check(CLI::PositiveNumber);
    vt->add_option("--seed", o.seed, "Generator seed");
    vt->add_option("--law-tol", o.law_tol, "Tolerance for the concurrence law")
        ->check(CLI::NonNegativeNumber);

    auto* ve = app.add_subcommand("verify-examples", "Recompute the worked examples (exit 3 on failure)");
    ve->add_flag("--strict", o.strict, "Require an exact match for every example");

    auto* sw = app.add_subcommand("sweep", "CSV sweep over amplitudes, phases and p angle");
    sw->add_option("--grid", o.grid, "Points per axis; N^4 rows, pi/4 included for odd N")
        ->check(CLI::PositiveNumber);
    sw->add_option("--case", o.case_id, "Theorem case 1..8")->check(CLI::Range(1, 8));
    sw->add_option("--out", o.out_path, "CSV path (stdout when omitted)");

    for (auto* sub : {ent, conc, check, rot, pol, vt, ve, sw}) {
        sub->fallthrough();
    }

    std::vector<const char*> argv{"bqent"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (ent->parsed()) return cmd_entangle(o, out);
        if (conc->parsed()) return cmd_concurrence(o, in, out);
        if (check->parsed()) return cmd_check(o, out);
        if (rot->parsed()) return cmd_rotate(o, out);
        if (pol->parsed()) return cmd_polar(o, out);
        if (vt->parsed()) return cmd_verify_theorem(o, out);
        if (ve->parsed()) return cmd_verify_examples(o, out);
        if (sw->parsed()) return cmd_sweep(o, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

} // namespace bq::cli
