#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "signed_spectra/oracle.hpp"
#include "signed_spectra/suites.hpp"

namespace signed_spectra {

namespace cli_detail {

/// Rounds a value to `digits` significant digits through its shortest
/// decimal form, so printed numbers are stable across runs.
inline double round_sig(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

inline std::string format_sig(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline std::string format_fixed2(double v) {
    if (std::abs(v) < 0.005) v = 0.0;  // avoid "-0.00"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline nlohmann::ordered_json spectrum_json_rounded(const Spectrum& s) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& g : s.groups())
        arr.push_back({{"value", round_sig(g.value)}, {"multiplicity", g.multiplicity}});
    return arr;
}

/// Parses "r1:s1,r2:s2,..." into biclique parts.
inline std::vector<std::pair<int, int>> parse_parts(const std::string& text) {
    std::vector<std::pair<int, int>> parts;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--parts expects 'r1:s1,r2:s2,...'");
        try {
            parts.emplace_back(std::stoi(token.substr(0, colon)), std::stoi(token.substr(colon + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("--parts expects 'r1:s1,r2:s2,...'");
        }
    }
    if (parts.empty()) throw std::invalid_argument("--parts expects 'r1:s1,r2:s2,...'");
    return parts;
}

inline std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) out.push_back(token);
    return out;
}

struct SpectrumArgs {
    int p = 0;
    int q = 0;
    std::string pattern;
    int r = 0;
    int s = 0;
    std::string parts;
    int path_r = 0;
    std::string h_file;
    std::uint64_t seed = kDefaultSeed;
    std::string method = "all";
    std::string format = "json";
};

inline NegativePattern pattern_from_args(const SpectrumArgs& a) {
    if (a.pattern == "biclique") {
        if (a.r == 0 || a.s == 0)
            throw std::invalid_argument("pattern 'biclique' needs --r and --s");
        return BicliquePattern{a.r, a.s};
    }
    if (a.pattern == "bicliques") {
        if (a.parts.empty()) throw std::invalid_argument("pattern 'bicliques' needs --parts");
        return BicliqueUnionPattern{parse_parts(a.parts)};
    }
    if (a.pattern == "path-even" || a.pattern == "path-odd-u" || a.pattern == "path-odd-v") {
        if (a.path_r == 0) throw std::invalid_argument("path patterns need --path-r");
        if (a.pattern == "path-even") return PathEvenPattern{a.path_r};
        if (a.pattern == "path-odd-u") return PathOddUPattern{a.path_r};
        return PathOddVPattern{a.path_r};
    }
    if (a.pattern == "regular") {
        if (a.h_file.empty()) throw std::invalid_argument("pattern 'regular' needs --h-file");
        std::ifstream in(a.h_file);
        if (!in) throw std::invalid_argument("cannot open h-file '" + a.h_file + "'");
        return read_h_edge_list(in);
    }
    if (a.pattern == "random") {
        std::mt19937_64 rng(a.seed);
        return ArbitraryPattern{random_sign_table(a.p, a.q, rng)};
    }
    throw std::invalid_argument("unknown pattern '" + a.pattern + "'");
}

inline int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
    const NegativePattern pattern = pattern_from_args(a);
    const auto g = build_from_pattern(a.p, a.q, pattern);

    std::set<Method> methods;
    if (a.method == "all") {
        methods = {Method::oracle, Method::reduction};
        if (has_closed_form(pattern)) methods.insert(Method::closedform);
    } else {
        methods.insert(method_from_name(a.method));
        if (methods.count(Method::closedform) && !has_closed_form(pattern))
            throw std::invalid_argument("no closed form for an arbitrary signing");
    }

    std::vector<std::pair<std::string, Spectrum>> spectra;
    for (Method m : methods) {
        switch (m) {
            case Method::oracle: spectra.emplace_back("oracle", full_spectrum(g)); break;
            case Method::reduction:
                spectra.emplace_back("reduction", spectrum_via_reduction(g));
                break;
            case Method::closedform:
                spectra.emplace_back("closedform",
                                     closed_form_spectrum(a.p, a.q, pattern).spectrum);
                break;
        }
    }

    double max_dev = 0.0;
    for (std::size_t i = 0; i < spectra.size(); ++i)
        for (std::size_t j = i + 1; j < spectra.size(); ++j)
            max_dev = std::max(max_dev, max_deviation(spectra[i].second, spectra[j].second));

    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = a.p;
        j["q"] = a.q;
        j["pattern"] = pattern_to_json(pattern);
        if (a.pattern == "random") j["seed"] = a.seed;
        auto ms = nlohmann::ordered_json::object();
        for (const auto& [name, spec] : spectra) ms[name] = spectrum_json_rounded(spec);
        j["methods"] = std::move(ms);
        if (spectra.size() > 1) j["max_deviation"] = round_sig(max_dev);
        out << j.dump(2) << "\n";
    } else if (a.format == "csv") {
        out << "method,value,multiplicity\n";
        for (const auto& [name, spec] : spectra)
            for (const auto& grp : spec.groups())
                out << name << "," << format_sig(grp.value) << "," << grp.multiplicity << "\n";
    } else {
        for (const auto& [name, spec] : spectra) {
            out << "method: " << name << "\n";
            out << "  value  mult\n";
            for (const auto& grp : spec.groups())
                out << "  " << format_fixed2(grp.value) << "  x" << grp.multiplicity << "\n";
        }
        if (spectra.size() > 1)
            out << "max deviation: " << format_sig(max_dev, 3) << "\n";
    }

    return (spectra.size() > 1 && max_dev >= kRouteTol) ? 3 : 0;
}

inline int cmd_verify(const std::string& suite, int trials, std::uint64_t seed,
                      std::ostream& out) {
    bool all = true;
    if (suite == "golden" || suite == "all") all &= run_golden_suite(out);
    if (suite == "properties" || suite == "all") all &= run_property_suite(trials, seed, out);
    out << (all ? "verification passed" : "verification FAILED") << "\n";
    return all ? 0 : 1;
}

struct SweepRow {
    int p, q;
    std::string pattern;
    std::string params;
    double mu_max;
    int nullity;
    int bound;
    bool pass;
};

inline int cmd_sweep(int p_max, int q_max, const std::string& patterns_text,
                     const std::string& out_file, std::ostream& out) {
    if (p_max < 1 || q_max < p_max)
        throw std::invalid_argument("need 1 <= --p-max <= --q-max");
    const auto kinds = split_csv(patterns_text);
    for (const auto& k : kinds)
        if (k != "biclique" && k != "path-even" && k != "path-odd-u" && k != "path-odd-v")
            throw std::invalid_argument("sweep supports patterns biclique, path-even, path-odd-u, path-odd-v");

    std::vector<SweepRow> rows;
    bool all_pass = true;
    for (int p = 1; p <= p_max; ++p)
        for (int q = p; q <= q_max; ++q)
            for (const auto& kind : kinds) {
                std::vector<NegativePattern> instances;
                if (kind == "biclique") {
                    for (int r = 1; r <= p; ++r)
                        for (int s = 1; s <= q; ++s) instances.push_back(BicliquePattern{r, s});
                } else if (kind == "path-even") {
                    for (int r = 1; r <= p && r <= q; ++r) instances.push_back(PathEvenPattern{r});
                } else if (kind == "path-odd-u") {
                    for (int r = 1; r + 1 <= p && r <= q; ++r)
                        instances.push_back(PathOddUPattern{r});
                } else {
                    for (int r = 1; r <= p && r + 1 <= q; ++r)
                        instances.push_back(PathOddVPattern{r});
                }
                for (const auto& pattern : instances) {
                    const auto g = build_from_pattern(p, q, pattern);
                    const auto oracle_spec = full_spectrum(g);
                    const auto cf = closed_form_spectrum(p, q, pattern);
                    const int nullity = oracle_spec.zero_multiplicity();
                    const int bound = nullity_lower_bound(g);
                    const bool pass =
                        max_deviation(cf.spectrum, oracle_spec) < kRouteTol && nullity >= bound;
                    all_pass = all_pass && pass;
                    rows.push_back({p, q, pattern_name(pattern), pattern_params(pattern),
                                    oracle_spec.max_value(), nullity, bound, pass});
                }
            }

    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.p, a.q, a.pattern, a.params) < std::tie(b.p, b.q, b.pattern, b.params);
    });

    std::ostringstream csv;
    csv << "p,q,pattern,params,mu_max,nullity,bound,pass\n";
    for (const auto& row : rows)
        csv << row.p << "," << row.q << "," << row.pattern << "," << row.params << ","
            << format_sig(row.mu_max) << "," << row.nullity << "," << row.bound << ","
            << (row.pass ? "true" : "false") << "\n";

    if (out_file.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(out_file);
        if (!f) throw std::runtime_error("cannot write '" + out_file + "'");
        f << csv.str();
    }
    return all_pass ? 0 : 1;
}

}  // namespace cli_detail

/// Command dispatch for the signed-spectra tool. Exit codes: 0 success,
/// 2 argument error, 3 route disagreement beyond tolerance, 1 other failure.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spectra of signed complete bipartite graphs"};
    app.require_subcommand(1);
    const std::uint64_t env_seed = seed_from_env_or(kDefaultSeed);

    cli_detail::SpectrumArgs sa;
    sa.seed = env_seed;
    auto* sp = app.add_subcommand("spectrum", "compute the spectrum of one instance");
    sp->add_option("--p", sa.p, "size of part U")->required();
    sp->add_option("--q", sa.q, "size of part V")->required();
    sp->add_option("--pattern", sa.pattern, "negative-edge pattern")
        ->required()
        ->check(CLI::IsMember({"biclique", "bicliques", "path-even", "path-odd-u", "path-odd-v",
                               "regular", "random"}));
    sp->add_option("--r", sa.r, "biclique rows");
    sp->add_option("--s", sa.s, "biclique columns");
    sp->add_option("--parts", sa.parts, "biclique parts 'r1:s1,r2:s2,...'");
    sp->add_option("--path-r", sa.path_r, "path parameter r");
    sp->add_option("--h-file", sa.h_file, "edge list for the regular pattern");
    sp->add_option("--seed", sa.seed, "seed for the random pattern");
    sp->add_option("--method", sa.method, "spectrum route")
        ->check(CLI::IsMember({"oracle", "reduction", "closedform", "all"}));
    sp->add_option("--format", sa.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    std::string suite;
    int trials = 200;
    std::uint64_t verify_seed = env_seed;
    auto* vf = app.add_subcommand("verify", "run the verification suites");
    vf->add_option("--suite", suite, "suite to run")
        ->required()
        ->check(CLI::IsMember({"golden", "properties", "all"}));
    vf->add_option("--trials", trials, "randomized trials")->check(CLI::PositiveNumber);
    vf->add_option("--seed", verify_seed, "seed for randomized trials");

    int p_max = 0, q_max = 0;
    std::string patterns_text, out_file;
    auto* sw = app.add_subcommand("sweep", "enumerate a parameter grid to CSV");
    sw->add_option("--p-max", p_max, "largest p")->required();
    sw->add_option("--q-max", q_max, "largest q")->required();
    sw->add_option("--patterns", patterns_text, "comma list of pattern kinds")->required();
    sw->add_option("--out", out_file, "CSV output file (stdout when omitted)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sp->parsed()) return cli_detail::cmd_spectrum(sa, out);
        if (vf->parsed()) return cli_detail::cmd_verify(suite, trials, verify_seed, out);
        return cli_detail::cmd_sweep(p_max, q_max, patterns_text, out_file, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace signed_spectra
