// Command-line front end: constructions, certificates and verification.
#include "inob/bodies.hpp"
#include "inob/poly.hpp"
#include "inob/sections.hpp"
#include "inob/toric.hpp"
#include "inob/valuation.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace {

using namespace inob;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<std::string> degrees;
    std::optional<int> n;
    std::string t;
    std::uint64_t seed = 0;
    std::string format;
    std::string output;
    std::string poly;
    std::string flag = "identity";
    std::vector<std::string> point;
    int deg = 0;
};

Rat rational_arg(const std::string& option, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw ParseError(option + ": " + e.message(), e.position());
    }
}

std::vector<Rat> rationals_arg(const std::string& option, const std::vector<std::string>& texts) {
    std::vector<Rat> out;
    for (const auto& s : texts) out.push_back(rational_arg(option, s));
    return out;
}

std::vector<Rat> positive_degrees(const RunConfig& cfg, std::size_t min_count) {
    if (cfg.degrees.size() < min_count) {
        throw UsageError("--d needs at least " + std::to_string(min_count) + " degree(s)");
    }
    std::vector<Rat> d = rationals_arg("--d", cfg.degrees);
    for (const Rat& x : d) {
        if (x <= 0) throw UsageError("--d: degrees must be positive, got " + to_string(x));
    }
    return d;
}

std::vector<Rat> exact_degrees(const RunConfig& cfg, std::size_t count) {
    if (cfg.degrees.size() != count) throw UsageError("--d needs exactly " + std::to_string(count) + " degrees");
    return positive_degrees(cfg, count);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw UsageError("--format " + format + " is not available here (choose from " + list + ")");
}

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string render_body(const CandidateBody& body, const RunConfig& cfg) {
    const std::string format = format_or(cfg, "json");
    require_format(format, {"json", "text", "off", "svg"});
    if (format == "off") {
        if (body.body.dim() != 3) throw UsageError("--format off needs a 3-dimensional body");
        return to_off(body);
    }
    if (format == "svg") {
        if (body.body.dim() != 2) throw UsageError("--format svg needs a 2-dimensional body");
        return to_svg(body);
    }
    if (format == "json") return dump(to_json(body));
    std::string out;
    for (const QVector& v : body.body.vertices()) out += to_string(v) + "\n";
    out += "volume " + to_string(volume(body.body)) + "\n";
    return out;
}

std::string render_certificates(const std::vector<MembershipCertificate>& certs, const RunConfig& cfg) {
    const std::string format = format_or(cfg, "json");
    require_format(format, {"json", "text"});
    if (format == "text") {
        std::string out;
        for (const auto& c : certs) out += to_string(c.point) + "\n";
        return out;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : certs) arr.push_back(to_json(c));
    return dump(arr);
}

HomoPoly poly_arg(const RunConfig& cfg) {
    try {
        return parse_poly(cfg.poly, cfg.n.value_or(0));
    } catch (const ParseError& e) {
        throw ParseError("--poly: " + e.message(), e.position());
    }
}

struct Outcome {
    std::string text;
    int code = kExitOk;
};

Outcome run(const std::string& command, const RunConfig& cfg) {
    if (command == "simplex") {
        if (!cfg.n) throw UsageError("simplex needs --n");
        return {render_body(simplex_body(*cfg.n), cfg)};
    }
    if (command == "trapezoid") {
        const auto d = exact_degrees(cfg, 2);
        return {render_body(trapezoid_body(d[0], d[1]), cfg)};
    }
    if (command == "threefold") {
        const auto d = exact_degrees(cfg, 3);
        return {render_body(threefold_body(d[0], d[1], d[2]), cfg)};
    }
    if (command == "toric-slice") {
        const ToricSliceDivisor div(positive_degrees(cfg, 2), rational_arg("--t", cfg.t));
        const std::string format = format_or(cfg, "json");
        require_format(format, {"json", "text"});
        const Polytope p = divisor_polytope_translated(div);
        if (format == "text") {
            std::string out;
            for (const QVector& v : p.vertices()) out += to_string(v) + "\n";
            return {out + "volume " + to_string(volume(p)) + "\n"};
        }
        return {dump({{"t", to_string(div.t())}, {"polytope", to_json(p)}, {"volume", to_string(volume(p))}})};
    }
    if (command == "slice-volume") {
        require_format(format_or(cfg, "text"), {"text"});
        return {to_string(slice_volume(ToricSliceDivisor(positive_degrees(cfg, 2), rational_arg("--t", cfg.t)))) + "\n"};
    }
    if (command == "integral") {
        require_format(format_or(cfg, "text"), {"text"});
        return {to_string(volume_integral(positive_degrees(cfg, 2))) + "\n"};
    }
    if (command == "slice-table") {
        require_format(format_or(cfg, "csv"), {"csv"});
        return {slice_volume_csv(positive_degrees(cfg, 2))};
    }
    if (command == "valuate") {
        const HomoPoly p = poly_arg(cfg);
        if (p.is_zero()) throw UsageError("--poly: the zero polynomial has no valuation");
        Rng rng(cfg.seed);
        const LinearFlag flag = cfg.flag == "random" ? LinearFlag::random(p.nvars(), rng) : LinearFlag::identity(p.nvars());
        const ValuationVector v = flag_valuation(p, flag);
        const std::string format = format_or(cfg, "text");
        require_format(format, {"text", "json"});
        if (format == "text") return {to_string(v) + "\n"};
        nlohmann::json m = nlohmann::json::array();
        for (Eigen::Index r = 0; r < flag.matrix().rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < flag.matrix().cols(); ++c) row.push_back(to_string(flag.matrix()(r, c)));
            m.push_back(row);
        }
        return {dump({{"poly", to_string(p)}, {"valuation", v.components()}, {"flag", m}, {"seed", cfg.seed}})};
    }
    if (command == "mult") {
        const auto coords = rationals_arg("--point", cfg.point);
        RunConfig sized = cfg;
        if (!sized.n) sized.n = static_cast<int>(coords.size());
        const HomoPoly p = poly_arg(sized);
        if (p.is_zero()) throw UsageError("--poly: the zero polynomial has no multiplicity");
        if (static_cast<int>(coords.size()) != p.nvars()) {
            throw UsageError("--point needs " + std::to_string(p.nvars()) + " coordinates");
        }
        require_format(format_or(cfg, "text"), {"text"});
        return {std::to_string(mult_at_point(p, make_vector(coords))) + "\n"};
    }
    if (command == "witnesses") {
        const auto d = exact_degrees(cfg, 3);
        return {render_certificates(threefold_witnesses(d[0], d[1], d[2], cfg.seed), cfg)};
    }
    if (command == "qd") {
        if (!cfg.n) throw UsageError("qd needs --n");
        if (cfg.deg < 1 || cfg.deg > *cfg.n) throw UsageError("qd needs 1 <= --deg <= --n");
        return {render_certificates({construct_Qd(*cfg.n, cfg.deg, cfg.seed).certificate}, cfg)};
    }
    if (command == "verify") {
        CandidateBody body = simplex_body(1);
        if (cfg.n) {
            if (!cfg.degrees.empty()) {
                const auto d = positive_degrees(cfg, 1);
                if (static_cast<int>(d.size()) != *cfg.n || std::any_of(d.begin(), d.end(), [](const Rat& x) { return x != 1; })) {
                    throw UsageError("--n selects the unit simplex; --d must be omitted or all ones");
                }
            }
            body = simplex_body(*cfg.n);
        } else {
            const auto d = positive_degrees(cfg, 1);
            const bool unit = std::all_of(d.begin(), d.end(), [](const Rat& x) { return x == 1; });
            if (d.size() == 2) {
                body = trapezoid_body(d[0], d[1]);
            } else if (d.size() == 3) {
                body = threefold_body(d[0], d[1], d[2]);
            } else if (unit) {
                body = simplex_body(static_cast<int>(d.size()));
            } else {
                throw UsageError("no candidate body is known for these degrees");
            }
        }
        require_format(format_or(cfg, "json"), {"json"});
        const VerificationReport report =
            verify_body(body, default_samples(body.degrees), default_certificates(body, cfg.seed));
        nlohmann::json j = to_json(report);
        j["body"] = body.provenance;
        j["seed"] = cfg.seed;
        return {dump(j), report.passed() ? kExitOk : kExitFailed};
    }
    throw UsageError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact convex bodies from flag valuations on box products"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
        sub->add_option("--format", cfg.format, "json, text, csv, off or svg");
        sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    };
    auto degrees = [&cfg](CLI::App* sub) {
        return sub->add_option("--d", cfg.degrees, "degrees d_1 ... d_n as integers or p/q")->expected(1, -1);
    };
    auto t_option = [&cfg](CLI::App* sub) { sub->add_option("--t", cfg.t, "slice parameter t")->required(); };

    auto* simplex = app.add_subcommand("simplex", "unit simplex body");
    simplex->add_option("--n", cfg.n, "dimension")->required();
    auto* trapezoid = app.add_subcommand("trapezoid", "trapezoid body for n = 2");
    degrees(trapezoid)->required();
    auto* threefold = app.add_subcommand("threefold", "body for n = 3");
    degrees(threefold)->required();
    auto* toric_slice = app.add_subcommand("toric-slice", "translated divisor polytope at t");
    degrees(toric_slice)->required();
    t_option(toric_slice);
    auto* slice_volume_cmd = app.add_subcommand("slice-volume", "volume of the nu1 = t slice");
    degrees(slice_volume_cmd)->required();
    t_option(slice_volume_cmd);
    auto* integral = app.add_subcommand("integral", "integral of the slice volumes");
    degrees(integral)->required();
    auto* slice_table = app.add_subcommand("slice-table", "slice volumes on the sample grid as CSV");
    degrees(slice_table)->required();
    auto* valuate = app.add_subcommand("valuate", "flag valuation of a polynomial");
    valuate->add_option("--poly", cfg.poly, "homogeneous polynomial, e.g. \"x1*x3 - x2^2\"")->required();
    valuate->add_option("--flag", cfg.flag, "identity or random")
        ->check(CLI::IsMember({"identity", "random"}))
        ->capture_default_str();
    valuate->add_option("--n", cfg.n, "number of variables (default: inferred)");
    auto* mult = app.add_subcommand("mult", "multiplicity at a point");
    mult->add_option("--poly", cfg.poly, "homogeneous polynomial")->required();
    mult->add_option("--point", cfg.point, "projective coordinates")->required()->expected(1, -1);
    mult->add_option("--n", cfg.n, "number of variables (default: point length)");
    auto* witnesses = app.add_subcommand("witnesses", "seven certified vertices for n = 3");
    degrees(witnesses)->required();
    auto* qd = app.add_subcommand("qd", "certificate for the vertex (d, d e_d) of the unit simplex");
    qd->add_option("--n", cfg.n, "dimension")->required();
    qd->add_option("--deg", cfg.deg, "d with 1 <= d <= n")->required();
    auto* verify = app.add_subcommand("verify", "verify a catalog body end to end");
    degrees(verify);
    verify->add_option("--n", cfg.n, "unit simplex of this dimension");

    for (CLI::App* sub : app.get_subcommands({})) common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Outcome outcome;
    try {
        outcome = run(command, cfg);
    } catch (const inob::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitFailed;
    }

    if (cfg.output.empty()) {
        std::cout << outcome.text;
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out || !(out << outcome.text)) {
            std::cerr << "error: cannot write " << cfg.output << "\n";
            return kExitFailed;
        }
    }
    return outcome.code;
}
