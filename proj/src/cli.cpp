#include "flagrep/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "flagrep/highrep.hpp"
#include "flagrep/infchar.hpp"
#include "flagrep/matsuki_sl2.hpp"
#include "flagrep/serialize.hpp"
#include "flagrep/weyl.hpp"

namespace flagrep::cli {

namespace {

class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CartanMatrix resolve_cartan(const std::string& source) {
    try {
        return CartanMatrix::from_label(source);
    } catch (const Error&) {
        // not a label; fall through to file lookup
    }
    std::error_code ec;
    if (!std::filesystem::is_regular_file(source, ec)) throw UsageError("unknown type label '" + source + "'");
    try {
        auto m = CartanMatrix::from_file(source);
        return m;
    } catch (const Error& e) {
        throw UsageError(std::string("bad Cartan matrix file: ") + e.what());
    }
}

Weight weight_arg(const std::string& text, const CartanMatrix& cartan, bool allow_rational, const std::string& what) {
    if (text.empty()) throw UsageError(what + " is required");
    Weight w(parse_coords(text));
    if (w.rank() != cartan.rank())
        throw UsageError(what + " has " + std::to_string(w.rank()) + " coordinates; rank is " +
                         std::to_string(cartan.rank()));
    if (!allow_rational && !w.is_integral()) throw UsageError(what + " must have integer coordinates");
    return w;
}

template <typename T>
T parse_unsigned(const std::string& text, const std::string& what) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
    return value;
}

std::string word_string(const WeylElement& w) {
    if (w.word().empty()) return "e";
    std::string s;
    for (auto i : w.word()) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
    return s;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void print_cohomology(std::ostream& out, const CohomologyResult& r) {
    if (!r.nonzero) {
        out << "vanishes\n";
        return;
    }
    out << "degree " << r.nonzero->degree << ", highest weight " << r.nonzero->highest_weight << ", dimension "
        << r.nonzero->dimension << '\n';
}

}  // namespace

std::vector<Rational> parse_coords(const std::string& text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty()) throw UsageError("malformed coordinate list '" + text + "'");
        try {
            coords.push_back(parse_rational(token));
        } catch (const Error&) {
            throw UsageError("malformed coordinate '" + token + "' in '" + text + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return coords;
}

CoordinateRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like lo..hi, got '" + text + "'");
    auto parse_end = [&](const std::string& s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw UsageError("range must look like lo..hi, got '" + text + "'");
        return v;
    };
    CoordinateRange r{parse_end(text.substr(0, dots)), parse_end(text.substr(dots + 2))};
    if (r.hi < r.lo) throw UsageError("empty range '" + text + "'");
    return r;
}

Command parse(const std::vector<std::string>& argv) {
    CLI::App app{"Root systems, Weyl groups, highest weights and Borel-Weil-Bott cohomology", "flagrep"};
    app.require_subcommand(1);

    std::string type, weight, coords, range, a, b, format_name;
    bool json = false, csv = false;
    std::string samples = "10000", seed = "42", threads = "1";

    auto add_type = [&](CLI::App* sub) {
        sub->add_option("type", type, "Type label (A2, G2, ...) or Cartan matrix file")->required();
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "JSON output"); };

    auto* roots = app.add_subcommand("roots", "Enumerate the root system");
    add_type(roots);
    add_json(roots);

    auto* order = app.add_subcommand("weyl-order", "Order of the Weyl group");
    add_type(order);
    add_json(order);

    auto* orb = app.add_subcommand("orbit", "Weyl group orbit of a weight");
    add_type(orb);
    orb->add_option("--weight", weight, "Comma-separated coordinates")->required();
    add_json(orb);

    auto* dim = app.add_subcommand("dim", "Dimension of an irreducible representation");
    add_type(dim);
    dim->add_option("coords", coords, "Highest weight, comma-separated")->required();
    add_json(dim);

    auto* weights = app.add_subcommand("weights", "Weights and multiplicities of an irreducible representation");
    add_type(weights);
    weights->add_option("coords", coords, "Highest weight, comma-separated")->required();
    add_json(weights);
    weights->add_flag("--csv", csv, "CSV output");

    auto* bwb_cmd = app.add_subcommand("bwb", "Borel-Weil-Bott cohomology of a line bundle");
    add_type(bwb_cmd);
    bwb_cmd->add_option("--weight", weight, "Comma-separated integer coordinates")->required();
    add_json(bwb_cmd);

    auto* table = app.add_subcommand("bwb-table", "Borel-Weil-Bott over a coordinate box");
    add_type(table);
    table->add_option("--range", range, "lo..hi, applied to every coordinate")->required();
    table->add_option("--format", format_name, "pretty, json or csv")->check(CLI::IsMember({"pretty", "json", "csv"}));
    table->add_option("--threads", threads, "Worker threads");

    auto* chi = app.add_subcommand("chi-equal", "Equality of infinitesimal characters");
    add_type(chi);
    chi->add_option("--a", a, "First weight (p/q allowed)")->required();
    chi->add_option("--b", b, "Second weight (p/q allowed)")->required();
    add_json(chi);

    auto* intdom = app.add_subcommand("int-dom", "Integral dominance");
    add_type(intdom);
    intdom->add_option("--weight", weight, "Weight (p/q allowed)")->required();
    add_json(intdom);

    auto* matsuki = app.add_subcommand("matsuki-sl2", "Matsuki duality for SU(1,1) on CP^1");
    matsuki->add_option("--samples", samples, "Samples per orbit intersection");
    matsuki->add_option("--seed", seed, "Generator seed");
    add_json(matsuki);

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Command cmd;
    if (const char* cap = std::getenv("FLAGREP_MAX_TABLE"))
        cmd.max_table = parse_unsigned<std::size_t>(cap, "FLAGREP_MAX_TABLE");
    cmd.format = json ? Format::Json : csv ? Format::Csv : Format::Pretty;

    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "matsuki-sl2") {
        cmd.verb = Verb::MatsukiSl2;
        cmd.samples = parse_unsigned<std::size_t>(samples, "--samples");
        if (cmd.samples == 0) throw UsageError("--samples must be at least 1");
        cmd.seed = parse_unsigned<std::uint64_t>(seed, "--seed");
        return cmd;
    }

    cmd.cartan = resolve_cartan(type);
    const CartanMatrix& cartan = *cmd.cartan;
    if (name == "roots") {
        cmd.verb = Verb::Roots;
    } else if (name == "weyl-order") {
        cmd.verb = Verb::WeylOrder;
    } else if (name == "orbit") {
        cmd.verb = Verb::Orbit;
        cmd.weights.push_back(weight_arg(weight, cartan, false, "--weight"));
    } else if (name == "dim") {
        cmd.verb = Verb::Dim;
        cmd.weights.push_back(weight_arg(coords, cartan, false, "highest weight"));
    } else if (name == "weights") {
        cmd.verb = Verb::Weights;
        cmd.weights.push_back(weight_arg(coords, cartan, false, "highest weight"));
    } else if (name == "bwb") {
        cmd.verb = Verb::Bwb;
        cmd.weights.push_back(weight_arg(weight, cartan, false, "--weight"));
    } else if (name == "bwb-table") {
        cmd.verb = Verb::BwbTable;
        cmd.range = parse_range(range);
        cmd.threads = parse_unsigned<unsigned>(threads, "--threads");
        if (cmd.threads == 0) throw UsageError("--threads must be at least 1");
        if (format_name == "json") cmd.format = Format::Json;
        if (format_name == "csv") cmd.format = Format::Csv;
    } else if (name == "chi-equal") {
        cmd.verb = Verb::ChiEqual;
        cmd.weights.push_back(weight_arg(a, cartan, true, "--a"));
        cmd.weights.push_back(weight_arg(b, cartan, true, "--b"));
    } else if (name == "int-dom") {
        cmd.verb = Verb::IntDom;
        cmd.weights.push_back(weight_arg(weight, cartan, true, "--weight"));
    } else {
        throw UsageError("unknown verb '" + name + "'");
    }
    return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        const bool as_json = cmd.format == Format::Json;
        if (cmd.verb == Verb::MatsukiSl2) {
            const auto report = sl2::verify_duality(cmd.samples, cmd.seed);
            const auto posets = sl2::closure_posets();
            if (as_json) {
                Json j = to_json(report, posets);
                j["samples"] = cmd.samples;
                j["seed"] = cmd.seed;
                print_json(out, j);
            } else {
                for (const auto& q : sl2::k_orbits())
                    out << sl2::to_string(q.name) << " <-> " << sl2::to_string(sl2::matsuki_dual(q).name) << '\n';
                for (const auto& c : report.pairs)
                    out << sl2::to_string(c.k_orbit.name) << " ∩ " << sl2::to_string(c.gr_orbit.name) << ": "
                        << sl2::to_string(c.observed) << (c.dual ? " (dual)" : "") << '\n';
                out << "poset reversal: " << (posets.reversal_certificate ? "yes" : "no") << '\n';
                out << "sample failures: " << report.failures.size() << '\n';
            }
            if (!report.passed() || !posets.reversal_certificate) {
                if (!report.passed()) sl2::require_passed(report);
                throw Error(ErrorCode::SampleFailure, "closure posets are not reversed by duality");
            }
            return kExitOk;
        }

        const RootSystem rs(*cmd.cartan);
        switch (cmd.verb) {
            case Verb::Roots: {
                if (as_json) {
                    print_json(out, to_json(rs));
                    break;
                }
                out << "type " << (rs.cartan().label().empty() ? "(custom)" : rs.cartan().label()) << ", rank "
                    << rs.rank() << ", " << rs.roots().size() << " roots\n";
                for (const auto& r : rs.roots()) {
                    out << (r.is_positive ? "+ " : "- ") << '[';
                    for (std::size_t i = 0; i < r.simple_coords.size(); ++i)
                        out << (i ? ", " : "") << r.simple_coords[i];
                    out << "]  " << r.weight_coords << '\n';
                }
                out << "rho " << rs.rho() << '\n';
                break;
            }
            case Verb::WeylOrder: {
                const BigInt n = weyl_order(rs);
                if (as_json) {
                    Json j;
                    j["weyl_order"] = to_json(n);
                    print_json(out, j);
                } else {
                    out << n << '\n';
                }
                break;
            }
            case Verb::Orbit: {
                const auto points = orbit(rs, cmd.weights[0]);
                if (as_json) {
                    Json j = Json::array();
                    for (const auto& p : points) j.push_back(to_json(p));
                    print_json(out, j);
                } else {
                    for (const auto& p : points) out << p << '\n';
                }
                break;
            }
            case Verb::Dim: {
                const BigInt d = weyl_dimension(rs, cmd.weights[0]);
                if (as_json) {
                    Json j;
                    j["highest_weight"] = to_json(cmd.weights[0]);
                    j["dimension"] = to_json(d);
                    print_json(out, j);
                } else {
                    out << d << '\n';
                }
                break;
            }
            case Verb::Weights: {
                const auto irrep = weight_system(rs, cmd.weights[0]);
                if (as_json) {
                    print_json(out, to_json(irrep));
                } else if (cmd.format == Format::Csv) {
                    write_csv(out, irrep);
                } else {
                    out << "highest weight " << irrep.highest_weight << ", dimension " << irrep.dimension << '\n';
                    for (const auto& [mu, m] : irrep.weights) out << mu << "  " << m << '\n';
                }
                break;
            }
            case Verb::Bwb: {
                const auto result = bwb(rs, cmd.weights[0]);
                if (as_json)
                    print_json(out, to_json(result));
                else
                    print_cohomology(out, result);
                break;
            }
            case Verb::BwbTable: {
                const auto table = bwb_table(rs, *cmd.range, {cmd.max_table, cmd.threads});
                if (cmd.format == Format::Csv) {
                    write_csv(out, rs.rank(), table);
                } else if (as_json) {
                    Json j = Json::array();
                    for (const auto& entry : table) {
                        Json row;
                        row["weight"] = to_json(entry.lambda);
                        const Json result = to_json(entry.result);
                        for (const auto& [k, v] : result.items()) row[k] = v;
                        j.push_back(std::move(row));
                    }
                    print_json(out, j);
                } else {
                    for (const auto& entry : table) {
                        out << entry.lambda << "  ";
                        print_cohomology(out, entry.result);
                    }
                }
                break;
            }
            case Verb::ChiEqual: {
                const auto ca = infinitesimal_character(rs, cmd.weights[0]);
                const auto cb = infinitesimal_character(rs, cmd.weights[1]);
                const bool equal = chi_equal(rs, cmd.weights[0], cmd.weights[1]);
                if (as_json) {
                    Json j;
                    j["equal"] = equal;
                    j["canonical_a"] = to_json(ca.canonical);
                    j["canonical_b"] = to_json(cb.canonical);
                    print_json(out, j);
                } else {
                    out << (equal ? "true" : "false") << '\n';
                }
                break;
            }
            case Verb::IntDom: {
                const bool dominant = integrally_dominant(rs, cmd.weights[0]);
                const auto conj = integrally_dominant_conjugate(rs, cmd.weights[0]);
                if (as_json) {
                    Json j;
                    j["integrally_dominant"] = dominant;
                    j["conjugate"] = to_json(conj.weight);
                    j["word"] = conj.w.word();
                    print_json(out, j);
                } else {
                    out << (dominant ? "true" : "false") << '\n';
                    if (!dominant) out << "conjugate " << conj.weight << " = " << word_string(conj.w) << " . lambda\n";
                }
                break;
            }
            case Verb::MatsukiSl2:
                break;
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
        return kExitDomainError;
    }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Command cmd;
    try {
        cmd = parse(argv);
    } catch (const HelpRequested& help) {
        out << help.what();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(cmd, out, err);
}

}  // namespace flagrep::cli
