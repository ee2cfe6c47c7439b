// frieze-lab: command-line front end for the friezecore library.
//
// Machine output goes to stdout; diagnostics go to stderr. Exit codes:
//   0  success
//   1  usage, parse or domain errors
//   2  verification failure (the input is not a lambda-cycle)

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frieze/enumerate.hpp"
#include "frieze/frieze.hpp"
#include "frieze/reduce.hpp"
#include "frieze/serialize.hpp"

using namespace frieze;

namespace {

std::string trim_copy(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return {};
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(trim_copy(token));
    if (!text.empty() && text.back() == ',') out.push_back("");
    return out;
}

std::vector<RingElement> parse_entry_list(const Domain& domain, const std::string& text) {
    std::vector<RingElement> out;
    for (const auto& token : split_commas(text)) {
        if (token.empty()) throw ParseError("empty entry in cycle literal");
        out.push_back(RingElement::make(domain, token));
    }
    if (out.empty()) throw ParseError("empty cycle literal");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A cycle argument is either inline comma-separated literals or "@path"
// naming a JSON cycle document.
std::vector<RingElement> load_entries(const std::string& arg, const Domain& domain,
                                      bool domain_explicit) {
    if (!arg.empty() && arg.front() == '@') {
        QuiddityCycle c = cycle_from_json(read_file(arg.substr(1)));
        if (domain_explicit && c.domain() != domain)
            throw DomainError("file domain " + c.domain().str() +
                              " does not match --domain " + domain.str());
        return c.entries();
    }
    return parse_entry_list(domain, arg);
}

// "a..b" integer ranges are sugar over Z and Z/n; plain literals otherwise.
std::vector<RingElement> parse_candidates(const Domain& domain, const std::string& text) {
    std::vector<RingElement> out;
    for (const auto& token : split_commas(text)) {
        size_t dots = token.find("..");
        if (dots != std::string::npos) {
            if (domain.kind() != DomainKind::Integer && !domain.is_modular())
                throw ParseError("candidate ranges apply to Z and Z/n only");
            long lo = std::stol(token.substr(0, dots));
            long hi = std::stol(token.substr(dots + 2));
            if (lo > hi) throw ParseError("empty candidate range: " + token);
            for (long v = lo; v <= hi; ++v) out.push_back(RingElement::from_int(domain, v));
        } else {
            if (token.empty()) throw ParseError("empty candidate");
            out.push_back(RingElement::make(domain, token));
        }
    }
    if (out.empty()) throw ParseError("empty candidate list");
    return out;
}

SubsetSpec parse_subset(const Domain& domain, const std::string& text) {
    if (text == "ring") return SubsetSpec::whole_ring(domain);
    if (text == "nonneg") return SubsetSpec::nonnegative_integers();
    if (text == "pos") return SubsetSpec::positive_integers();
    if (text.rfind("list:", 0) == 0)
        return SubsetSpec::finite_list(domain, parse_entry_list(domain, text.substr(5)));
    if (text.rfind("norm:", 0) == 0)
        return SubsetSpec::norm_bounded(domain, mpz_class(text.substr(5), 10));
    throw ParseError("unknown subset '" + text +
                     "' (expected ring, nonneg, pos, list:<entries> or norm:<bound>)");
}

std::pair<size_t, size_t> parse_length_range(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        size_t m = static_cast<size_t>(std::stoul(text));
        return {m, m};
    }
    size_t lo = static_cast<size_t>(std::stoul(text.substr(0, dots)));
    size_t hi = static_cast<size_t>(std::stoul(text.substr(dots + 2)));
    if (lo > hi) throw ParseError("empty length range: " + text);
    return {lo, hi};
}

unsigned default_jobs() {
    if (const char* env = std::getenv("FRIEZE_LAB_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

std::string cycle_line(const QuiddityCycle& c) {
    return c.str() + " (lambda = " + std::to_string(c.lambda()) + ")";
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string expected;
    for (const char* a : allowed) expected += std::string(expected.empty() ? "" : ", ") + a;
    throw ParseError("unsupported format '" + format + "' (expected " + expected + ")");
}

void print_progress(const EnumerationStats& stats, bool final) {
    std::cerr << "progress: visited=" << stats.nodes_visited
              << " found=" << stats.cycles_found << (final ? " done" : "") << "\n";
}

struct Options {
    std::string domain_text = "Z";
    bool domain_explicit = false;
    std::string format = "text";
    std::string subset_text = "ring";
    std::string candidates_text;
    std::string length_text;
    std::optional<int> lambda_filter;
    bool no_dedup = false;
    bool progress = false;
    unsigned jobs = default_jobs();
    unsigned long gauss_k = 1;
    std::vector<std::string> cycle_args;
};

int run_verify(const Options& opt) {
    Domain domain = Domain::parse(opt.domain_text);
    std::vector<RingElement> entries;
    try {
        entries = load_entries(opt.cycle_args.at(0), domain, opt.domain_explicit);
    } catch (const NotACycleError&) {
        std::cout << "not a lambda-cycle\n";
        return 2;
    }
    auto lambda = verify_cycle(entries);
    if (!lambda) {
        std::cout << "not a lambda-cycle\n";
        return 2;
    }
    std::cout << "lambda = " << *lambda << "\n";
    return 0;
}

int run_sum(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Domain domain = Domain::parse(opt.domain_text);
    QuiddityCycle a{load_entries(opt.cycle_args.at(0), domain, opt.domain_explicit)};
    QuiddityCycle b{load_entries(opt.cycle_args.at(1), domain, opt.domain_explicit)};
    QuiddityCycle s = cycle_sum(a, b);
    if (opt.format == "json")
        std::cout << cycle_to_json(s) << "\n";
    else
        std::cout << cycle_line(s) << "\n";
    return 0;
}

int run_frieze(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Domain domain = Domain::parse(opt.domain_text);
    QuiddityCycle c{load_entries(opt.cycle_args.at(0), domain, opt.domain_explicit)};
    FriezePattern f = make_frieze(c);
    if (opt.format == "json") {
        std::cout << frieze_to_json(f) << "\n";
    } else {
        std::cout << render_text(f);
        std::cout << "lambda = " << f.lambda() << "\n";
        std::cout << "tame = " << (is_tame(f) ? "true" : "false") << "\n";
    }
    return 0;
}

int run_decompose(const Options& opt) {
    require_format(opt.format, {"text", "json", "dot"});
    Domain domain = Domain::parse(opt.domain_text);
    QuiddityCycle c{load_entries(opt.cycle_args.at(0), domain, opt.domain_explicit)};
    SubsetSpec subset = parse_subset(domain, opt.subset_text);
    DecompositionTree tree = decompose(c, subset);
    if (opt.format == "json")
        std::cout << tree_to_json(tree) << "\n";
    else if (opt.format == "dot")
        std::cout << tree_to_dot(tree);
    else
        std::cout << tree_to_text(tree);
    return 0;
}

int run_enumerate(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Domain domain = Domain::parse(opt.domain_text);
    std::vector<RingElement> candidates = parse_candidates(domain, opt.candidates_text);
    auto [lo, hi] = parse_length_range(opt.length_text);
    for (size_t m = lo; m <= hi; ++m) {
        EnumerationTask task(domain, candidates, m, opt.lambda_filter, !opt.no_dedup);
        EnumerationStats stats;
        std::vector<QuiddityCycle> cycles;
        if (opt.jobs > 1) {
            cycles = enumerate_all(task, opt.jobs, &stats);
        } else {
            enumerate_cycles(task, [&](const QuiddityCycle& c) { cycles.push_back(c); }, &stats,
                             opt.progress
                                 ? std::function<void(const EnumerationStats&)>(
                                       [](const EnumerationStats& s) { print_progress(s, false); })
                                 : std::function<void(const EnumerationStats&)>{});
        }
        if (opt.progress) print_progress(stats, true);
        if (opt.format == "json") {
            std::string sep;
            std::cout << "{\"m\":" << m << ",\"count\":" << cycles.size() << ",\"cycles\":[";
            for (const auto& c : cycles) {
                std::cout << sep << cycle_to_json(c);
                sep = ",";
            }
            std::cout << "]}\n";
        } else {
            std::cout << "# m = " << m << ", " << cycles.size()
                      << (opt.no_dedup ? " cycles" : " orbits") << "\n";
            for (const auto& c : cycles) std::cout << cycle_line(c) << "\n";
        }
    }
    return 0;
}

int run_classify(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    Domain domain = Domain::parse(opt.domain_text);
    std::vector<RingElement> candidates = parse_candidates(domain, opt.candidates_text);
    SubsetSpec subset = parse_subset(domain, opt.subset_text);
    auto [lo, hi] = parse_length_range(opt.length_text);
    bool first = true;
    for (size_t m = lo; m <= hi; ++m) {
        EnumerationTask task(domain, candidates, m, opt.lambda_filter, true);
        ClassificationReport report = classify(task, subset, opt.jobs);
        if (opt.format == "json") {
            std::cout << report_to_json(report) << "\n";
        } else {
            if (!first) std::cout << "\n";
            std::cout << report_to_text(report);
        }
        first = false;
    }
    return 0;
}

int run_gauss(const Options& opt) {
    require_format(opt.format, {"text", "json"});
    GaussFamilyReport report = verify_gauss_irreducible(opt.gauss_k);
    const unsigned long k = opt.gauss_k;
    FriezePattern f = make_frieze(report.cycle);
    RingElement marker = f.at(0, static_cast<long>(2 * k + 4));
    if (opt.format == "json") {
        std::string out = "{\"k\":" + std::to_string(k) +
                          ",\"cycle\":" + cycle_to_json(report.cycle) +
                          ",\"irreducible\":" + (report.irreducible ? "true" : "false") +
                          ",\"entries\":[";
        std::string sep;
        for (const auto& e : report.entries) {
            // entry coordinates are 1-based on the CLI surface
            out += sep + "{\"i\":" + std::to_string(e.i + 1) + ",\"j\":" +
                   std::to_string(e.j + 1) + ",\"value\":\"" + e.value.str() + "\"}";
            sep = ",";
        }
        out += "]}";
        std::cout << out << "\n";
    } else {
        std::cout << cycle_line(report.cycle) << "\n";
        std::cout << "irreducible over Z[i]: " << (report.irreducible ? "yes" : "no") << "\n";
        std::cout << "x[1," << 2 * k + 5 << "] = " << marker.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for lambda-quiddity cycles and tame friezes"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_subset) {
        cmd->add_option("-d,--domain", opt.domain_text, "coefficient domain: Z, Q, Z[i], Z/<n>")
            ->each([&](const std::string&) { opt.domain_explicit = true; });
        cmd->add_option("--format", opt.format, "output format")->default_str("text");
        if (with_subset)
            cmd->add_option("--subset", opt.subset_text,
                            "subset: ring, nonneg, pos, list:<entries>, norm:<bound>");
        return cmd;
    };

    CLI::App* verify = add_common(app.add_subcommand("verify", "check the cycle identity"), false);
    verify->add_option("cycle", opt.cycle_args, "entries or @file")->required()->expected(1);

    CLI::App* sum = add_common(app.add_subcommand("sum", "glue two cycles"), false);
    sum->add_option("cycles", opt.cycle_args, "two cycles")->required()->expected(2);

    CLI::App* frz = add_common(app.add_subcommand("frieze", "render the frieze pattern"), false);
    frz->add_option("cycle", opt.cycle_args)->required()->expected(1);

    CLI::App* dec =
        add_common(app.add_subcommand("decompose", "split into irreducible summands"), true);
    dec->add_option("cycle", opt.cycle_args)->required()->expected(1);

    CLI::App* enu = add_common(app.add_subcommand("enumerate", "search a candidate box"), false);
    enu->add_option("--candidates", opt.candidates_text, "entries, ranges a..b allowed")
        ->required();
    enu->add_option("-m,--length", opt.length_text, "length or range a..b")->required();
    enu->add_option("--lambda", opt.lambda_filter, "keep only this sign");
    enu->add_flag("--no-dedup", opt.no_dedup, "emit every sequence, not one per orbit");
    enu->add_flag("--progress", opt.progress, "report search progress on stderr");
    enu->add_option("--jobs", opt.jobs, "worker threads (default $FRIEZE_LAB_JOBS or 1)");

    CLI::App* cls = add_common(app.add_subcommand("classify", "census of irreducible orbits"), true);
    cls->add_option("--candidates", opt.candidates_text)->required();
    cls->add_option("-m,--length", opt.length_text)->required();
    cls->add_option("--lambda", opt.lambda_filter);
    cls->add_option("--jobs", opt.jobs);

    CLI::App* gau = add_common(app.add_subcommand("gauss", "Gaussian-integer family member"), false);
    gau->add_option("--k", opt.gauss_k, "family index k >= 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(sum)) return run_sum(opt);
        if (app.got_subcommand(frz)) return run_frieze(opt);
        if (app.got_subcommand(dec)) return run_decompose(opt);
        if (app.got_subcommand(enu)) return run_enumerate(opt);
        if (app.got_subcommand(cls)) return run_classify(opt);
        if (app.got_subcommand(gau)) return run_gauss(opt);
    } catch (const NotACycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
