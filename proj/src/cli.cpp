#include "a3res/cli.hpp"

#include "a3res/format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace a3res::cli {

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
        out.push_back(x);
    }
    if (!s.empty() && s.back() == ',') throw std::invalid_argument("trailing comma in '" + s + "'");
    return out;
}

namespace {

std::array<int, 3> parse_triple(const std::string& s) {
    const auto v = parse_ints(s);
    if (v.size() != 3) throw std::invalid_argument("expected three entries in '" + s + "'");
    for (int x : v)
        if (x < 0) throw std::invalid_argument("negative entry in '" + s + "'");
    return {v[0], v[1], v[2]};
}

}  // namespace

Multiplicities parse_mult(const std::string& s) {
    const auto v = parse_ints(s);
    if (v.size() != 6) throw std::invalid_argument("--mult needs six entries a,b,c,d,e,f");
    for (int x : v)
        if (x < 0) throw std::invalid_argument("multiplicities must be nonnegative");
    return Multiplicities{v[0], v[1], v[2], v[3], v[4], v[5]};
}

FlagData parse_flag(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("--flag needs the form b1,b2,b3/g1,g2,g3");
    return FlagData{parse_triple(s.substr(0, slash)), parse_triple(s.substr(slash + 1))};
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineInput {
    std::string mult;
    std::string flag;

    FlagData resolve() const {
        if (mult.empty() == flag.empty()) throw UsageError("give exactly one of --mult or --flag");
        return mult.empty() ? parse_flag(flag) : reineke_flag(parse_mult(mult));
    }
    Multiplicities multiplicities() const {
        const auto m = resolve().as_reineke();
        if (!m) throw UsageError("this command needs a Reineke flag; --flag " + flag + " is not one");
        return *m;
    }
};

void add_input(CLI::App* cmd, EngineInput& in) {
    cmd->add_option("--mult", in.mult, "multiplicities a,b,c,d,e,f of 0K0,0KK,KK0,KKK,K00,00K");
    cmd->add_option("--flag", in.flag, "flag data b1,b2,b3/g1,g2,g3 at (source1, source2, sink)");
}

ShiftConvention parse_shift(const std::string& s) {
    return s == "example" ? ShiftConvention::Example : ShiftConvention::Standard;
}

std::string plural(int n, const std::string& word) { return std::to_string(n) + " " + word + (n == 1 ? "" : "s"); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal free resolutions of A3 orbit closures (source1 -> sink <- source2)", "a3res"};
    app.require_subcommand(1);

    EngineInput input;
    std::string format = "text";
    std::string shift = "standard";
    int jobs = 1;
    std::optional<int> max_degree;
    auto add_common = [&](CLI::App* cmd, bool with_shift) {
        cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        if (with_shift)
            cmd->add_option("--shift", shift, "twist convention: standard (t) or example (t+N)")
                ->check(CLI::IsMember({"standard", "example"}));
        cmd->add_option("--jobs", jobs, "worker threads")->envname("QS_JOBS")->check(CLI::PositiveNumber);
    };

    auto* resolve = app.add_subcommand("resolve", "terms of the minimal free resolution");
    add_input(resolve, input);
    add_common(resolve, true);
    resolve->add_option("--max-degree", max_degree, "only homological degrees up to this bound");

    auto* generators = app.add_subcommand("generators", "determinantal minimal generators");
    add_input(generators, input);
    add_common(generators, false);

    auto* gorenstein = app.add_subcommand("gorenstein", "Gorenstein verdict from the top term");
    add_input(gorenstein, input);
    add_common(gorenstein, false);

    auto* normality = app.add_subcommand("normality", "normality and rational singularities audit");
    add_input(normality, input);
    add_common(normality, false);

    std::string weight;
    auto* bott = app.add_subcommand("bott", "normalize a GL weight by Bott exchanges");
    bott->add_option("--weight", weight, "comma-separated integers")->required()->allow_extra_args(false);

    std::string lambda, mu;
    int rows = -1;
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson expansion");
    lr->add_option("--lambda", lambda, "partition, comma-separated")->required();
    lr->add_option("--mu", mu, "partition, comma-separated")->required();
    lr->add_option("--rows", rows, "keep only nu with at most this many parts");
    add_common(lr, false);

    int max_mult = 1;
    std::string checks = "all";
    auto* scan_cmd = app.add_subcommand("scan", "batch checks over all multiplicities up to a bound");
    scan_cmd->add_option("--max", max_mult, "largest multiplicity")->required()->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--checks", checks, "all, or a list of bound,normality,gorenstein,duality,codim,f1,top");
    add_common(scan_cmd, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front(); sub)
            err << sub->help();
        return kUsage;
    }

    try {
        if (resolve->parsed()) {
            ResolutionOptions opts;
            opts.jobs = jobs;
            opts.max_degree = max_degree;
            const BettiTable tbl = compute_resolution(input.resolve(), opts);
            const Verdicts v = verdicts_for(tbl);
            if (format == "json") out << table_json(tbl, v).dump() << "\n";
            else if (format == "csv") out << render_csv(tbl, parse_shift(shift));
            else out << render_text(tbl, parse_shift(shift), v);
            return v.normal == std::optional<bool>(false) ? kCheckFailed : kOk;
        }
        if (generators->parsed()) {
            const auto m = input.multiplicities();
            const auto g = minimal_generators(m);
            if (format == "json") out << generators_json(m, g).dump() << "\n";
            else out << render_generators(m, g);
            return kOk;
        }
        if (gorenstein->parsed()) {
            const auto m = input.multiplicities();
            const auto rep = gorenstein_report(m, jobs);
            if (format == "json") {
                nlohmann::json j{{"input", {{"mult", m.to_array()}}},
                                 {"gorenstein", rep.gorenstein},
                                 {"top_degree", rep.top_degree},
                                 {"top_dim", big_json(rep.top_dim)},
                                 {"family", rep.family ? nlohmann::json(*rep.family) : nlohmann::json(nullptr)},
                                 {"reason", rep.reason}};
                out << j.dump() << "\n";
            } else {
                out << "Gorenstein: " << (rep.gorenstein ? "yes" : "no") << " (" << rep.reason << ")\n";
            }
            return rep.family && !rep.gorenstein ? kCheckFailed : kOk;
        }
        if (normality->parsed()) {
            ResolutionOptions opts;
            opts.jobs = jobs;
            const BettiTable tbl = compute_resolution(input.resolve(), opts);
            const auto rep = normality_report(tbl);
            if (format == "json") {
                const char* status = rep.status == NormalityStatus::Normal      ? "normal"
                                     : rep.status == NormalityStatus::Violation ? "violation"
                                                                                : "not applicable";
                out << nlohmann::json{{"status", status}, {"message", rep.message},
                                      {"triples", tbl.audit.triples_enumerated},
                                      {"bound_violations", tbl.audit.violation_count}}
                           .dump()
                    << "\n";
            } else {
                out << rep.message << "\n";
            }
            return rep.status == NormalityStatus::Violation ? kCheckFailed : kOk;
        }
        if (bott->parsed()) {
            const auto res = bott_normalize(parse_ints(weight));
            if (!res) out << "vanishes\n";
            else out << res->weight.to_string() << " after " << plural(res->exchanges, "exchange") << "\n";
            return kOk;
        }
        if (lr->parsed()) {
            const auto l = Partition(parse_ints(lambda));
            const auto m = Partition(parse_ints(mu));
            const auto expansion = lr_expand(l, m, rows);
            if (format == "json") {
                nlohmann::json terms = nlohmann::json::array();
                for (auto it = expansion.rbegin(); it != expansion.rend(); ++it)
                    terms.push_back({{"nu", it->first.parts()}, {"coefficient", it->second}});
                out << nlohmann::json{{"lambda", l.parts()}, {"mu", m.parts()}, {"terms", terms}}.dump() << "\n";
            } else {
                for (auto it = expansion.rbegin(); it != expansion.rend(); ++it)
                    out << it->first.to_string() << " " << it->second << "\n";
            }
            return kOk;
        }
        if (scan_cmd->parsed()) {
            const unsigned selected = parse_checks(checks);
            std::size_t records = 0, failed = 0;
            scan(max_mult, selected, jobs, [&](const ScanRecord& r) {
                ++records;
                if (!r.failures.empty()) ++failed;
                if (format == "json") out << scan_record_json(r).dump() << "\n";
                else out << render_scan_record(r) << "\n";
            });
            if (format != "json") out << "records: " << records << ", failures: " << failed << "\n";
            return failed ? kCheckFailed : kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace a3res::cli
