#include "hcent/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hcent/census.hpp"
#include "hcent/errors.hpp"
#include "hcent/graph.hpp"
#include "hcent/stratify.hpp"

namespace hcent::cli {

namespace {

constexpr double kVerifyTolerance = 1e-9;

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::text: break;
    }
    return "text";
}

std::string join(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// Configuration echo as "# key: value" lines.
void write_header(const CommandConfig& config, std::ostream& out) {
    const nlohmann::json echo = config_to_json(config);
    for (const auto& [key, value] : echo.items()) {
        out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

// Runs `body` with the report stream: the --output file when given, else `out`.
template <class Body>
int with_output(const CommandConfig& config, std::ostream& out, std::ostream& err, Body&& body) {
    if (config.output.empty()) return body(out);
    std::ofstream file(config.output);
    if (!file) {
        err << "error: cannot open output file '" << config.output << "'\n";
        return kUsageError;
    }
    return body(file);
}

nlohmann::json modes_json(const ModeSpectrum& spectrum) {
    nlohmann::json modes = nlohmann::json::array();
    for (const auto& m : spectrum.modes) {
        const double s = m.gamma < kZeroGamma ? 0.0 : entropy_from_nu(m.nu, spectrum.log_base);
        modes.push_back({{"gamma", round_significant(m.gamma)},
                         {"nu", round_significant(m.nu)},
                         {"degeneracy", m.degeneracy},
                         {"entropy", round_significant(s)}});
    }
    return modes;
}

void write_modes_table(const ModeSpectrum& spectrum, std::ostream& out, bool csv) {
    out << (csv ? "gamma,nu,degeneracy,entropy\n" : "modes (gamma, nu, degeneracy, entropy):\n");
    for (const auto& m : spectrum.modes) {
        const double s = m.gamma < kZeroGamma ? 0.0 : entropy_from_nu(m.nu, spectrum.log_base);
        if (csv) {
            out << format_real(m.gamma) << ',' << format_real(m.nu) << ',' << m.degeneracy << ','
                << format_real(s) << '\n';
        } else {
            out << "  " << format_real(m.gamma) << "  " << format_real(m.nu) << "  " << m.degeneracy
                << "  " << format_real(s) << '\n';
        }
    }
}

AnalyticScheme require_scheme(const CommandConfig& config) {
    auto scheme = parse_scheme(config.scheme);
    if (!scheme) throw ArgumentError("unknown scheme '" + config.scheme + "'");
    return *scheme;
}

std::string units(LogBase base) { return base == LogBase::two ? "bits" : "nats"; }

}  // namespace

std::optional<AnalyticScheme> parse_scheme(std::string_view name) {
    static const std::map<std::string_view, AnalyticScheme> kNames = {
        {"parity", AnalyticScheme::parity_cut},
        {"parity-cut", AnalyticScheme::parity_cut},
        {"identity-cut", AnalyticScheme::identity_cut},
        {"identity", AnalyticScheme::identity_cut},
        {"coordinate", AnalyticScheme::identity_cut},
        {"half-strata", AnalyticScheme::half_strata},
    };
    if (auto it = kNames.find(name); it != kNames.end()) return it->second;
    return std::nullopt;
}

std::string scheme_name(AnalyticScheme scheme) {
    switch (scheme) {
        case AnalyticScheme::half_strata: return "half-strata";
        case AnalyticScheme::identity_cut: return "identity-cut";
        case AnalyticScheme::parity_cut: break;
    }
    return "parity";
}

std::vector<int> parse_subset(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view token = text.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
            throw ArgumentError("malformed subset entry '" + std::string(token) + "'");
        }
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

nlohmann::json config_to_json(const CommandConfig& config) {
    nlohmann::json j = {{"command", config.command}};
    const auto& c = config.command;
    if (c == "entropy" || c == "census") j["graph"] = config.graph;
    if (c == "analytic" || c == "verify" || c == "spectrum") j["d"] = config.d;
    if (c != "spectrum") j["g"] = round_significant(config.g);
    if (c == "analytic" || c == "verify") j["scheme"] = config.scheme;
    if (c == "entropy") j["subset"] = config.subset;
    if (c == "census") {
        j["tolerance"] = round_significant(config.tolerance);
        j["threads"] = config.threads;
        j["sample"] = config.sample;
        if (config.sample > 0) j["seed"] = config.seed;
    }
    if (c != "spectrum") j["logBase"] = log_base_name(config.log_base);
    j["format"] = format_name(config.format);
    if (!config.output.empty()) j["output"] = config.output;
    return j;
}

int run_entropy(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    if (config.subset.empty()) {
        err << "error: --subset is required\n";
        return kUsageError;
    }
    const Graph graph = graph_from_uri(config.graph);
    const Bipartition cut = Bipartition::from_side(graph.vertex_count(), config.subset);
    const Matrix v = potential_matrix(graph, config.g).matrix();

    const double oracle = entropy_oracle_symplectic(v, cut.side_a(), config.log_base);
    const ModeSpectrum modes = gamma_spectrum(v, cut, config.log_base);
    const double svd = modes.total_entropy();
    const double diff = std::abs(oracle - svd);
    const int code = diff <= kVerifyTolerance ? kSuccess : kVerificationFailure;

    return with_output(config, out, err, [&](std::ostream& os) {
        if (config.format == OutputFormat::json) {
            nlohmann::json j = {{"config", config_to_json(config)},
                                {"entropyOracle", round_significant(oracle)},
                                {"entropySvd", round_significant(svd)},
                                {"difference", round_significant(diff)},
                                {"cutEdges", cut_edge_count(graph, cut)},
                                {"modes", modes_json(modes)}};
            os << j.dump(2) << '\n';
        } else {
            write_header(config, os);
            if (config.format == OutputFormat::text) {
                os << "entropy (symplectic oracle): " << format_real(oracle) << ' ' << units(config.log_base) << '\n'
                   << "entropy (whitened SVD):      " << format_real(svd) << ' ' << units(config.log_base) << '\n'
                   << "difference: " << format_real(diff) << '\n'
                   << "cut edges: " << cut_edge_count(graph, cut) << '\n';
            }
            write_modes_table(modes, os, config.format == OutputFormat::csv);
        }
        return code;
    });
}

int run_census(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    const Graph graph = graph_from_uri(config.graph);
    CensusOptions options;
    options.tolerance = config.tolerance;
    options.log_base = config.log_base;
    options.threads = config.threads;
    options.sample_size = config.sample;
    options.seed = config.seed;
    const CensusReport report = entropy_census(graph, config.g, options);
    const auto extremes = extremal_partitions(report);

    std::ostringstream summary;
    summary << report.classes.size() << " classes / " << report.evaluated_partitions << " partitions";
    if (report.sampled) summary << " (sampled from " << report.total_partitions << ")";
    auto extreme = [&](const char* label, std::size_t cls, const std::vector<std::vector<int>>& sets) {
        summary << '\n' << label << " entropy " << format_real(report.classes[cls].entropy) << ':';
        for (const auto& s : sets) summary << " {" << join(s, ",") << '}';
    };
    extreme("max", report.max_class, extremes.max);
    extreme("min", report.min_class, extremes.min);
    summary << '\n';
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';

    const int code = with_output(config, out, err, [&](std::ostream& os) {
        switch (config.format) {
            case OutputFormat::json: {
                nlohmann::json j = to_json(report);
                j["config"] = config_to_json(config);
                os << j.dump(2) << '\n';
                break;
            }
            case OutputFormat::csv:
                write_header(config, os);
                write_csv(report, os);
                break;
            case OutputFormat::text:
                write_header(config, os);
                os << summary.str();
                for (std::size_t i = 0; i < report.classes.size(); ++i) {
                    const auto& cls = report.classes[i];
                    os << "class " << i << ": entropy " << format_real(cls.entropy) << " x" << cls.multiplicity;
                    for (const auto& s : cls.representatives) os << " {" << join(s, ",") << '}';
                    os << '\n';
                }
                break;
        }
        return kSuccess;
    });
    // Stdout stays machine-readable unless the report went to a file.
    if (code == kSuccess && !config.output.empty()) out << summary.str();
    return code;
}

int run_analytic(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    const AnalyticScheme scheme = require_scheme(config);
    const double total = analytic_entropy(scheme, config.d, config.g, config.log_base);
    ModeSpectrum modes;
    modes.log_base = config.log_base;
    if (config.g > 0.0) modes = analytic_modes(scheme, config.d, config.g, config.log_base);

    return with_output(config, out, err, [&](std::ostream& os) {
        if (config.format == OutputFormat::json) {
            nlohmann::json j = {{"config", config_to_json(config)},
                                {"entropy", round_significant(total)},
                                {"modes", modes_json(modes)}};
            os << j.dump(2) << '\n';
        } else {
            write_header(config, os);
            if (config.format == OutputFormat::text) {
                os << "entropy (" << scheme_name(scheme) << "): " << format_real(total) << ' '
                   << units(config.log_base) << '\n';
            }
            write_modes_table(modes, os, config.format == OutputFormat::csv);
        }
        return kSuccess;
    });
}

int run_verify(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    const AnalyticScheme scheme = require_scheme(config);
    const double closed_form = analytic_entropy(scheme, config.d, config.g, config.log_base);
    const Bipartition cut = named_bipartition(config.d, named_cut_for(scheme));
    const Matrix v = potential_matrix(hypercube_graph(config.d), config.g).matrix();
    const double oracle = entropy_oracle_symplectic(v, cut.side_a(), config.log_base);
    const double diff = std::abs(closed_form - oracle);
    const bool ok = diff <= kVerifyTolerance;

    return with_output(config, out, err, [&](std::ostream& os) {
        if (config.format == OutputFormat::json) {
            nlohmann::json j = {{"config", config_to_json(config)},
                                {"analytic", round_significant(closed_form)},
                                {"oracle", round_significant(oracle)},
                                {"difference", round_significant(diff)},
                                {"pass", ok}};
            os << j.dump(2) << '\n';
        } else {
            write_header(config, os);
            os << "analytic: " << format_real(closed_form) << '\n'
               << "oracle:   " << format_real(oracle) << '\n'
               << "difference: " << format_real(diff) << '\n'
               << (ok ? "PASS" : "FAIL") << '\n';
        }
        return ok ? kSuccess : kVerificationFailure;
    });
}

int run_spectrum(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    const BlockTable blocks = block_table(config.d);
    const SpectrumTable spectrum = hypercube_spectrum(config.d);

    return with_output(config, out, err, [&](std::ostream& os) {
        switch (config.format) {
            case OutputFormat::json: {
                nlohmann::json jb = nlohmann::json::array();
                for (const auto& b : blocks) jb.push_back({{"dim", b.dim}, {"degeneracy", b.degeneracy}});
                nlohmann::json js = nlohmann::json::array();
                for (const auto& s : spectrum) js.push_back({{"eigenvalue", s.eigenvalue}, {"multiplicity", s.multiplicity}});
                os << nlohmann::json{{"config", config_to_json(config)}, {"blocks", jb}, {"spectrum", js}}.dump(2)
                   << '\n';
                break;
            }
            case OutputFormat::csv:
                write_header(config, os);
                os << "kind,value,count\n";
                for (const auto& b : blocks) os << "block," << b.dim << ',' << b.degeneracy << '\n';
                for (const auto& s : spectrum) os << "eigenvalue," << format_real(s.eigenvalue) << ',' << s.multiplicity << '\n';
                break;
            case OutputFormat::text:
                write_header(config, os);
                os << "stratification blocks (dim x degeneracy):\n";
                for (const auto& b : blocks) os << "  " << b.dim << " x " << b.degeneracy << '\n';
                os << "adjacency spectrum (eigenvalue: multiplicity):\n";
                for (const auto& s : spectrum) os << "  " << format_real(s.eigenvalue) << ": " << s.multiplicity << '\n';
                break;
        }
        return kSuccess;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement entropy of harmonic oscillator networks on hypercubes", "hcent"};
    app.require_subcommand(1);

    CommandConfig config;
    std::string subset_text;
    std::string log_base_text = "2";
    std::string format_text = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--output", config.output, "Write the report to this file");
    };
    auto add_physics = [&](CLI::App* sub) {
        sub->add_option("--g", config.g, "Coupling strength g");
        sub->add_option("--log-base", log_base_text, "Entropy logarithm base")
            ->check(CLI::IsMember({"2", "e"}));
    };

    auto* entropy = app.add_subcommand("entropy", "Entropy of one bipartition (both engines)");
    entropy->add_option("--graph", config.graph, "hypercube:<d> or file:<path>");
    entropy->add_option("--subset", subset_text, "Comma-separated side-A vertices")->required();
    add_physics(entropy);
    add_common(entropy);

    auto* census = app.add_subcommand("census", "Entropy classes of all equal bipartitions");
    census->add_option("--graph", config.graph, "hypercube:<d> or file:<path>");
    census->add_option("--tolerance", config.tolerance, "Class grouping tolerance");
    census->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
    census->add_option("--sample", config.sample, "Sample this many bipartitions instead of enumerating");
    census->add_option("--seed", config.seed, "Sampling seed");
    add_physics(census);
    add_common(census);

    auto* analytic = app.add_subcommand("analytic", "Closed-form modes and entropy of a hypercube cut");
    auto* verify = app.add_subcommand("verify", "Compare closed form against the symplectic oracle");
    for (auto* sub : {analytic, verify}) {
        sub->add_option("--scheme", config.scheme, "parity | identity-cut | half-strata")->required();
        sub->add_option("--d", config.d, "Hypercube dimension")->required();
        add_physics(sub);
        add_common(sub);
    }

    auto* spectrum = app.add_subcommand("spectrum", "Stratification blocks and adjacency spectrum of H(d,2)");
    spectrum->add_option("--d", config.d, "Hypercube dimension")->required();
    add_common(spectrum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.log_base = log_base_text == "e" ? LogBase::e : LogBase::two;
    config.format = format_text == "json" ? OutputFormat::json
                    : format_text == "csv" ? OutputFormat::csv
                                           : OutputFormat::text;

    try {
        if (!subset_text.empty()) config.subset = parse_subset(subset_text);
        if (config.command == "entropy") return run_entropy(config, out, err);
        if (config.command == "census") return run_census(config, out, err);
        if (config.command == "analytic") return run_analytic(config, out, err);
        if (config.command == "verify") return run_verify(config, out, err);
        return run_spectrum(config, out, err);
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const SchemeError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const SizeError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    }
}

}  // namespace hcent::cli
