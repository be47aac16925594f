#include "macias/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "macias/homeo.hpp"
#include "macias/oracle.hpp"
#include "macias/spec_io.hpp"
#include "macias/topo.hpp"

namespace macias::cli {

namespace {

using json = nlohmann::json;
using numtheory::nat;
using numtheory::Natural;
using Clock = std::chrono::steady_clock;

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::int64_t elapsed_micros(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)
        .count();
}

std::string join_values(const std::vector<Natural>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? " " : "") << xs[i].value();
    return os.str();
}

json values_json(const std::vector<Natural>& xs) {
    json a = json::array();
    for (const auto& x : xs)
        a.push_back(x.value());
    return a;
}

const char* verdict_name(homeo::Verdict v) {
    switch (v) {
    case homeo::Verdict::Homeomorphism: return "Homeomorphism";
    case homeo::Verdict::NotHomeomorphism: return "NotHomeomorphism";
    default: return "Inconclusive";
    }
}

const char* status_name(homeo::CheckStatus s) {
    switch (s) {
    case homeo::CheckStatus::Pass: return "pass";
    case homeo::CheckStatus::Fail: return "fail";
    default: return "skip";
    }
}

int verdict_exit(homeo::Verdict v) {
    switch (v) {
    case homeo::Verdict::Homeomorphism: return kExitVerified;
    case homeo::Verdict::NotHomeomorphism: return kExitRefuted;
    default: return kExitInconclusive;
    }
}

std::vector<Natural> parse_csv_naturals(const std::string& csv) {
    std::vector<Natural> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw SpecError("empty entry in list '" + csv + "'");
        std::uint64_t v = 0;
        try {
            std::size_t pos = 0;
            v = std::stoull(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw SpecError("'" + item + "' is not a positive integer");
        }
        out.push_back(Natural{v});
    }
    if (out.empty())
        throw SpecError("list '" + csv + "' is empty");
    return out;
}

std::string render_cycles(const homeo::FinSuppBijection& h) {
    if (h.is_identity())
        return "()";
    std::ostringstream os;
    for (const auto& cycle : h.cycles()) {
        os << "(";
        for (std::size_t i = 0; i < cycle.size(); ++i)
            os << (i ? " " : "") << cycle[i].value();
        os << ")";
    }
    return os.str();
}

struct CheckOptions {
    std::string path;
    std::uint64_t window = 0; // 0: decide only
    bool as_json = false;
};

int run_check(const CheckOptions& opt, std::ostream& out, Clock::time_point start) {
    const BijectionSpecFile spec = load_spec_file(opt.path);
    const homeo::FinSuppBijection h = to_bijection(spec);

    homeo::VerificationReport report = homeo::decide_finitely_supported(h);
    if (opt.window != 0) {
        const auto necessary = homeo::check_necessary_conditions(h, Natural{opt.window});
        for (const auto& c : necessary.checks)
            report.checks.push_back(c);
    }

    if (opt.as_json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"name", c.name},
                                  {"status", status_name(c.status)},
                                  {"detail", c.detail}});
        json doc{{"command", "check"},
                 {"spec", opt.path},
                 {"verdict", verdict_name(report.verdict)},
                 {"checks", std::move(checks)},
                 {"witness", report.witness ? json(report.witness->value()) : json(nullptr)},
                 {"window", opt.window ? json(opt.window) : json(nullptr)},
                 {"elapsedMicros", elapsed_micros(start)}};
        out << canonical_dump(doc);
    } else {
        out << "verdict: " << verdict_name(report.verdict) << "\n";
        for (const auto& c : report.checks)
            out << "check " << c.name << ": " << status_name(c.status) << " ("
                << c.detail << ")\n";
        if (report.witness)
            out << "witness: " << report.witness->value() << "\n";
    }
    return verdict_exit(report.verdict);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();

    CLI::App app{"Toolkit for the coprimality (Macias) topology on the naturals: "
                 "sigma-set algebra, closures, connectivity witnesses and a "
                 "homeomorphism verifier/synthesizer."};
    app.name("macias");
    app.require_subcommand(1);

    // sigma <n> --limit <N> [--json]
    std::uint64_t sigma_n = 0, sigma_limit = 0;
    bool sigma_json = false;
    auto* sigma_cmd = app.add_subcommand("sigma", "Enumerate sigma_n up to a limit");
    sigma_cmd->add_option("n", sigma_n, "Index of the basic open")->required();
    sigma_cmd->add_option("--limit", sigma_limit, "Upper end of the window")->required();
    sigma_cmd->add_flag("--json", sigma_json, "Emit a JSON report");

    // closure <n> [--limit <N>] [--json]
    std::uint64_t closure_n = 0, closure_limit = 0;
    bool closure_json = false;
    auto* closure_cmd =
        app.add_subcommand("closure", "Closure of {n}: modulus and optional elements");
    closure_cmd->add_option("n", closure_n, "The singleton to close")->required();
    closure_cmd->add_option("--limit", closure_limit, "List elements up to this bound");
    closure_cmd->add_flag("--json", closure_json, "Emit a JSON report");

    // intersect <a> <b>
    std::uint64_t inter_a = 0, inter_b = 0;
    auto* inter_cmd =
        app.add_subcommand("intersect", "Key of sigma_a intersected with sigma_b");
    inter_cmd->add_option("a", inter_a, "First index")->required();
    inter_cmd->add_option("b", inter_b, "Second index")->required();

    // check <spec.json> [--window <N>] [--json]
    CheckOptions check_opt;
    auto* check_cmd = app.add_subcommand(
        "check", "Decide a bijection spec; --window adds the necessary-condition checks");
    check_cmd->add_option("spec", check_opt.path, "Bijection spec file")->required();
    check_cmd->add_option("--window", check_opt.window,
                          "Window for the necessary-condition checks");
    check_cmd->add_flag("--json", check_opt.as_json, "Emit a JSON report");

    // synth --prime p --cycle c1,c2 [...] --out file
    std::vector<std::uint64_t> synth_primes;
    std::vector<std::string> synth_cycles;
    std::string synth_out;
    auto* synth_cmd = app.add_subcommand(
        "synth", "Write a finite spec realizing a prime-power permutation");
    synth_cmd->add_option("--prime", synth_primes, "Prime base (repeatable)")->required();
    synth_cmd->add_option("--cycle", synth_cycles,
                          "Comma-separated cycle for the preceding prime (repeatable)")
        ->required();
    synth_cmd->add_option("--out", synth_out, "Output spec path")->required();

    // nonrigid --count k [--json]
    std::uint64_t nonrigid_count = 0;
    bool nonrigid_json = false;
    auto* nonrigid_cmd = app.add_subcommand(
        "nonrigid", "Emit verified non-identity homeomorphisms");
    nonrigid_cmd->add_option("--count", nonrigid_count, "How many examples")->required();
    nonrigid_cmd->add_flag("--json", nonrigid_json, "Emit a JSON report");

    // witness hyper|ultra <a> <b>
    auto* witness_cmd = app.add_subcommand("witness", "Connectivity witnesses");
    witness_cmd->require_subcommand(1);
    std::uint64_t hyper_a = 0, hyper_b = 0, ultra_a = 0, ultra_b = 0;
    auto* hyper_cmd =
        witness_cmd->add_subcommand("hyper", "Common point of sigma_a and sigma_b");
    hyper_cmd->add_option("a", hyper_a, "First index")->required();
    hyper_cmd->add_option("b", hyper_b, "Second index")->required();
    auto* ultra_cmd = witness_cmd->add_subcommand(
        "ultra", "Common point of the closures of {a} and {b}");
    ultra_cmd->add_option("a", ultra_a, "First singleton")->required();
    ultra_cmd->add_option("b", ultra_b, "Second singleton")->required();

    // dense --explicit list | --primes-up-to B, --rad-bound R
    std::string dense_explicit;
    std::uint64_t dense_primes_bound = 0, dense_rad_bound = 0;
    auto* dense_cmd =
        app.add_subcommand("dense", "Bounded density certificate for a set");
    auto* opt_explicit =
        dense_cmd->add_option("--explicit", dense_explicit, "Comma-separated members");
    auto* opt_primes = dense_cmd->add_option("--primes-up-to", dense_primes_bound,
                                             "Use the primes up to this bound");
    opt_explicit->excludes(opt_primes);
    dense_cmd->add_option("--rad-bound", dense_rad_bound,
                          "Check all squarefree modules up to this bound")
        ->required();

    // oracle sigma-equiv <spec> --window N | oracle closure <n> --window N --kbound K
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force window checks");
    oracle_cmd->require_subcommand(1);
    std::string osig_path;
    std::uint64_t osig_window = 0;
    auto* osig_cmd = oracle_cmd->add_subcommand(
        "sigma-equiv", "Definitional sigma-set transport check for a spec");
    osig_cmd->add_option("spec", osig_path, "Bijection spec file")->required();
    osig_cmd->add_option("--window", osig_window, "Window bound")->required();
    std::uint64_t oclo_n = 0, oclo_window = 0, oclo_kbound = 0;
    auto* oclo_cmd = oracle_cmd->add_subcommand(
        "closure", "Definitional closure scan cross-checked against the modulus");
    oclo_cmd->add_option("n", oclo_n, "The singleton to close")->required();
    oclo_cmd->add_option("--window", oclo_window, "Window bound")->required();
    oclo_cmd->add_option("--kbound", oclo_kbound,
                         "Separator bound; must reach the largest prime factor")
        ->required();

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size());
        for (const auto& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitVerified;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (sigma_cmd->parsed()) {
            const auto elements =
                topo::enumerate_sigma(Natural{sigma_n}, Natural{sigma_limit});
            if (sigma_json) {
                json doc{{"command", "sigma"},
                         {"n", sigma_n},
                         {"limit", sigma_limit},
                         {"elements", values_json(elements)},
                         {"elapsedMicros", elapsed_micros(start)}};
                out << canonical_dump(doc);
            } else {
                out << join_values(elements) << "\n";
            }
            return kExitVerified;
        }

        if (closure_cmd->parsed()) {
            const auto cl = topo::closure_singleton(Natural{closure_n});
            const std::uint64_t mod = cl.modulus.value().value();
            std::vector<Natural> elements;
            if (closure_limit != 0)
                for (std::uint64_t x = mod; x <= closure_limit; x += mod)
                    elements.push_back(Natural{x});
            if (closure_json) {
                json doc{{"command", "closure"},
                         {"n", closure_n},
                         {"modulus", mod},
                         {"limit", closure_limit ? json(closure_limit) : json(nullptr)},
                         {"elements",
                          closure_limit ? values_json(elements) : json(nullptr)},
                         {"elapsedMicros", elapsed_micros(start)}};
                out << canonical_dump(doc);
            } else {
                out << mod << "\n";
                if (closure_limit != 0)
                    out << join_values(elements) << "\n";
            }
            return kExitVerified;
        }

        if (inter_cmd->parsed()) {
            const auto meet = topo::intersect_basic(topo::basic_open(Natural{inter_a}),
                                                    topo::basic_open(Natural{inter_b}));
            out << meet.key.value().value() << "\n";
            return kExitVerified;
        }

        if (check_cmd->parsed())
            return run_check(check_opt, out, start);

        if (synth_cmd->parsed()) {
            if (synth_primes.size() != synth_cycles.size())
                throw SpecError("each --prime needs exactly one --cycle");
            homeo::PrimePowerPermSpec spec;
            for (std::size_t i = 0; i < synth_primes.size(); ++i) {
                homeo::PrimePowerPermSpec::Entry entry{Natural{synth_primes[i]}, {}};
                entry.cycles.push_back(parse_csv_naturals(synth_cycles[i]));
                spec.entries.push_back(std::move(entry));
            }
            const auto h = homeo::synthesize(spec);
            std::ofstream f(synth_out);
            if (!f)
                throw SpecError("cannot write to " + synth_out);
            f << serialize_spec_file(finite_spec_from(h));
            out << "wrote " << synth_out << " (" << h.moves().size()
                << " moved points)\n";
            return kExitVerified;
        }

        if (nonrigid_cmd->parsed()) {
            const auto examples = homeo::nonrigidity_examples(nonrigid_count);
            if (nonrigid_json) {
                json list = json::array();
                for (const auto& h : examples)
                    list.push_back(json::parse(serialize_spec_file(finite_spec_from(h))));
                json doc{{"command", "nonrigid"},
                         {"count", nonrigid_count},
                         {"bijections", std::move(list)},
                         {"elapsedMicros", elapsed_micros(start)}};
                out << canonical_dump(doc);
            } else {
                for (const auto& h : examples)
                    out << render_cycles(h) << "\n";
            }
            return kExitVerified;
        }

        if (hyper_cmd->parsed()) {
            const topo::FiniteUnionOpen u{{topo::basic_open(Natural{hyper_a})}};
            const topo::FiniteUnionOpen v{{topo::basic_open(Natural{hyper_b})}};
            out << topo::hyperconnected_witness(u, v).value() << "\n";
            return kExitVerified;
        }

        if (ultra_cmd->parsed()) {
            const auto w = topo::ultraconnected_witness(
                topo::closure_singleton(Natural{ultra_a}),
                topo::closure_singleton(Natural{ultra_b}));
            out << w.value() << "\n";
            return kExitVerified;
        }

        if (dense_cmd->parsed()) {
            topo::SetSpec set = topo::AllNaturals{};
            if (!dense_explicit.empty())
                set = topo::ExplicitSet::of(parse_csv_naturals(dense_explicit));
            else if (dense_primes_bound != 0)
                set = topo::PrimesUpTo{Natural{dense_primes_bound}};
            else
                throw SpecError("dense needs --explicit or --primes-up-to");
            const auto cert = topo::density_certificate(set, Natural{dense_rad_bound});
            if (cert.dense_up_to_bound) {
                out << "dense up to " << dense_rad_bound << "\n";
                return kExitVerified;
            }
            out << "not dense up to " << dense_rad_bound << ": witness "
                << cert.failure_witness->value() << "\n";
            return kExitRefuted;
        }

        if (osig_cmd->parsed()) {
            const auto h = to_bijection(load_spec_file(osig_path));
            const auto r =
                oracle::window_sigma_equivariance(h, oracle::Window{Natural{osig_window}});
            if (r.pass) {
                out << "pass: sigma sets transport on window " << osig_window << "\n";
                return kExitVerified;
            }
            out << "fail: k=" << r.witness->first.value()
                << " m=" << r.witness->second.value() << "\n";
            return kExitRefuted;
        }

        if (oclo_cmd->parsed()) {
            const auto scan = oracle::window_closure(
                Natural{oclo_n}, oracle::Window{Natural{oclo_window}}, Natural{oclo_kbound});
            const std::uint64_t mod =
                topo::closure_singleton(Natural{oclo_n}).modulus.value().value();
            std::vector<Natural> expected;
            for (std::uint64_t x = mod; x <= oclo_window; x += mod)
                expected.push_back(Natural{x});
            if (scan == expected) {
                out << "pass: " << scan.size() << " elements match multiples of " << mod
                    << "\n";
                out << join_values(scan) << "\n";
                return kExitVerified;
            }
            out << "fail: definitional closure disagrees with modulus " << mod << "\n";
            return kExitRefuted;
        }

        err << "usage error: no subcommand\n";
        return kExitUsage;
    } catch (const SpecError& e) {
        err << "spec error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
}

} // namespace macias::cli
