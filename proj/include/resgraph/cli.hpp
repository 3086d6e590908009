// Command-line front-end: file loading, report rendering (text and JSON),
// and the command dispatcher. Exit codes: 0 success, 1 usage/parse/script
// error, 2 when the requested analysis needs a contractible configuration
// and the matrix is not negative definite (or no family member was found).

#ifndef RESGRAPH_CLI_HPP
#define RESGRAPH_CLI_HPP

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "resgraph/blowup.hpp"
#include "resgraph/classify.hpp"
#include "resgraph/cycles.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/io.hpp"
#include "resgraph/linalg.hpp"
#include "resgraph/rational.hpp"
#include "resgraph/topology.hpp"

namespace resgraph {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline const char* yn(bool b) { return b ? "yes" : "no"; }

inline std::string join_ints(const IntVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += to_string(v[i]);
    }
    return s;
}

inline std::string join_rationals(const QVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += to_string(v[i]);
    }
    return s;
}

/// Integers are emitted as JSON numbers when they fit, exact strings
/// otherwise; rationals are always exact strings ("p/q" or "p").
inline ordered_json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max()) {
        return static_cast<long long>(v);
    }
    return to_string(v);
}

inline ordered_json json_int_vector(const IntVector& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

inline ordered_json json_rational_vector(const QVector& v) {
    ordered_json a = ordered_json::array();
    for (const Rational& x : v) a.push_back(to_string(x));
    return a;
}

}  // namespace detail

/// JSON rendering of the full report. Fields whose hypotheses failed are
/// omitted entirely, never defaulted. Key order is fixed.
inline ordered_json report_to_json(const SingularityReport& r) {
    ordered_json doc;
    doc["connected"] = r.connected;
    doc["negative_definite"] = r.negative_definite;
    doc["non_minimal_resolution"] = r.non_minimal_resolution;
    if (r.certificate) doc["certificate"] = detail::json_rational_vector(*r.certificate);
    if (r.fundamental_cycle) {
        doc["fundamental_cycle"] = detail::json_int_vector(r.fundamental_cycle->coefficients());
    }
    if (r.chi_fund) doc["chi_fund"] = detail::json_int(*r.chi_fund);
    if (r.discrepancy_vector) {
        doc["discrepancies"] = detail::json_rational_vector(r.discrepancy_vector->values);
    }
    if (r.min_discrepancy) doc["min_discrepancy"] = to_string(*r.min_discrepancy);
    if (r.classification) doc["classification"] = to_string(*r.classification);
    ordered_json flags;
    if (r.rational) flags["rational"] = *r.rational;
    if (r.minimally_elliptic) flags["minimally_elliptic"] = *r.minimally_elliptic;
    if (r.log_terminal) flags["log_terminal"] = *r.log_terminal;
    if (r.log_canonical) flags["log_canonical"] = *r.log_canonical;
    if (r.canonical) flags["canonical"] = *r.canonical;
    if (r.numerically_gorenstein) flags["numerically_gorenstein"] = *r.numerically_gorenstein;
    if (!flags.empty()) doc["flags"] = std::move(flags);
    ordered_json link;
    if (r.qhs_link) link["qhs_link"] = *r.qhs_link;
    if (r.h1_bound) link["h1_bound"] = detail::json_int(*r.h1_bound);
    if (!link.empty()) doc["link"] = std::move(link);
    return doc;
}

inline void report_to_text(const SingularityReport& r, std::ostream& out) {
    using detail::yn;
    out << "connected: " << yn(r.connected) << "\n";
    out << "negative definite: " << yn(r.negative_definite) << "\n";
    if (r.non_minimal_resolution) {
        out << "warning: non-minimal resolution (a genus-0 curve has self-intersection -1)\n";
    }
    if (r.certificate) {
        out << "certificate (positivity of -A): " << detail::join_rationals(*r.certificate)
            << "\n";
    }
    if (r.fundamental_cycle) {
        out << "fundamental cycle: " << detail::join_ints(r.fundamental_cycle->coefficients())
            << "\n";
    }
    if (r.chi_fund) out << "chi(fundamental cycle): " << to_string(*r.chi_fund) << "\n";
    if (r.discrepancy_vector) {
        out << "discrepancies: " << detail::join_rationals(r.discrepancy_vector->values) << "\n";
    }
    if (r.min_discrepancy) out << "min discrepancy: " << to_string(*r.min_discrepancy) << "\n";
    if (r.classification) out << "classification: " << to_string(*r.classification) << "\n";
    if (r.rational) out << "rational: " << yn(*r.rational) << "\n";
    if (r.minimally_elliptic) out << "minimally elliptic: " << yn(*r.minimally_elliptic) << "\n";
    if (r.log_terminal) out << "log terminal: " << yn(*r.log_terminal) << "\n";
    if (r.log_canonical) out << "log canonical: " << yn(*r.log_canonical) << "\n";
    if (r.canonical) out << "canonical: " << yn(*r.canonical) << "\n";
    if (r.numerically_gorenstein) {
        out << "numerically Gorenstein: " << yn(*r.numerically_gorenstein) << "\n";
    }
    if (r.qhs_link) out << "qhs link: " << yn(*r.qhs_link) << "\n";
    if (r.h1_bound) out << "h1 bound: " << to_string(*r.h1_bound) << "\n";
}

inline ordered_json graph_to_json(const ResolutionGraph& g) {
    ordered_json doc;
    ordered_json vertices = ordered_json::array();
    for (const CurveVertex& v : g.vertices()) {
        ordered_json one;
        one["name"] = v.name;
        one["genus"] = v.genus;
        one["self"] = v.self_intersection;
        vertices.push_back(std::move(one));
    }
    doc["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges()) {
        ordered_json one;
        one["a"] = g.vertex(e.i).name;
        one["b"] = g.vertex(e.j).name;
        one["mult"] = e.multiplicity;
        edges.push_back(std::move(one));
    }
    doc["edges"] = std::move(edges);
    return doc;
}

namespace detail {

inline void emit(const ordered_json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

inline int cmd_analyze(const ResolutionGraph& g, bool json, std::ostream& out) {
    const SingularityReport r = full_report(g);
    if (json) {
        emit(report_to_json(r), out);
    } else {
        report_to_text(r, out);
    }
    return r.negative_definite ? 0 : 2;
}

inline int cmd_check_definite(const ResolutionGraph& g, bool want_certificate, bool json,
                              std::ostream& out) {
    const IntersectionMatrix a = build_matrix(g);
    const bool definite = is_negative_definite(a);
    ordered_json doc;
    doc["negative_definite"] = definite;
    std::ostringstream text;
    text << "negative definite: " << yn(definite) << "\n";
    if (want_certificate) {
        const CertificateSearch search = find_certificate(to_rational_matrix(a).negated());
        if (search.found()) {
            doc["certificate"] = json_rational_vector(search.vector);
            doc["certificate_verified"] =
                verify_certificate(to_rational_matrix(a).negated(), search.vector);
            text << "certificate (positivity of -A): " << join_rationals(search.vector) << "\n";
            text << "certificate verified: yes\n";
        } else {
            const char* reason = search.status == CertificateSearch::Status::singular
                                     ? "singular"
                                     : "solution not positive";
            doc["certificate_diagnostic"] = reason;
            text << "no certificate: " << reason << "\n";
        }
    }
    if (json) {
        emit(doc, out);
    } else {
        out << text.str();
    }
    return definite ? 0 : 2;
}

inline int cmd_fundamental_cycle(const ResolutionGraph& g, bool json, std::ostream& out) {
    const Cycle z = fundamental_cycle(g);
    const Int chi_z = chi(z, g);
    if (json) {
        ordered_json doc;
        doc["fundamental_cycle"] = json_int_vector(z.coefficients());
        doc["chi_fund"] = json_int(chi_z);
        emit(doc, out);
    } else {
        out << "fundamental cycle: " << join_ints(z.coefficients()) << "\n";
        out << "chi(fundamental cycle): " << to_string(chi_z) << "\n";
    }
    return 0;
}

inline int cmd_chi(const ResolutionGraph& g, const std::string& cycle_spec, bool json,
                   std::ostream& out) {
    IntVector coefficients;
    std::istringstream in(cycle_spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            coefficients.push_back(v);
        } catch (const std::exception&) {
            throw Error("invalid cycle coefficient '" + item + "'");
        }
    }
    if (coefficients.size() != g.size()) {
        throw Error("cycle has " + std::to_string(coefficients.size()) + " coefficients, graph has " +
                    std::to_string(g.size()) + " vertices");
    }
    const Cycle z{coefficients};
    if (!z.is_effective()) throw Error("cycle must be effective (all coefficients >= 0)");
    const Int chi_z = chi(z, g);
    if (json) {
        ordered_json doc;
        doc["cycle"] = json_int_vector(z.coefficients());
        doc["chi"] = json_int(chi_z);
        emit(doc, out);
    } else {
        out << "chi: " << to_string(chi_z) << "\n";
    }
    return 0;
}

inline int cmd_discrepancies(const ResolutionGraph& g, bool json, std::ostream& out) {
    const DiscrepancyVector d = discrepancies(g);
    if (json) {
        ordered_json doc;
        doc["discrepancies"] = json_rational_vector(d.values);
        doc["min_discrepancy"] = to_string(d.min());
        doc["numerically_gorenstein"] = is_numerically_gorenstein(d);
        emit(doc, out);
    } else {
        out << "discrepancies: " << join_rationals(d.values) << "\n";
        out << "min discrepancy: " << to_string(d.min()) << "\n";
        out << "numerically Gorenstein: " << yn(is_numerically_gorenstein(d)) << "\n";
    }
    return 0;
}

inline int cmd_classify(const ResolutionGraph& g, bool json, std::ostream& out) {
    const DiscrepancyVector d = discrepancies(g);
    const Classification c = classify_discrepancies(d);
    const Rational m = d.min();
    if (json) {
        ordered_json doc;
        doc["classification"] = to_string(c);
        doc["min_discrepancy"] = to_string(m);
        ordered_json flags;
        flags["canonical"] = (m >= 0);
        flags["log_terminal"] = (m > -1);
        flags["log_canonical"] = (m >= -1);
        flags["numerically_gorenstein"] = is_numerically_gorenstein(d);
        doc["flags"] = std::move(flags);
        emit(doc, out);
    } else {
        out << "classification: " << to_string(c) << "\n";
        out << "min discrepancy: " << to_string(m) << "\n";
        out << "canonical: " << yn(m >= 0) << "\n";
        out << "log terminal: " << yn(m > -1) << "\n";
        out << "log canonical: " << yn(m >= -1) << "\n";
        out << "numerically Gorenstein: " << yn(is_numerically_gorenstein(d)) << "\n";
    }
    return 0;
}

inline int cmd_link(const ResolutionGraph& g, bool json, std::ostream& out, std::ostream& err) {
    const bool definite = is_negative_definite(build_matrix(g));
    ordered_json doc;
    doc["first_betti"] = first_betti(g);
    doc["h1_structure_sheaf"] = h1_structure_sheaf(g);
    doc["rational_tree"] = is_rational_tree(g);
    std::ostringstream text;
    text << "first betti: " << first_betti(g) << "\n";
    text << "h1 of reduced configuration: " << h1_structure_sheaf(g) << "\n";
    text << "rational tree: " << yn(is_rational_tree(g)) << "\n";
    if (definite) {
        doc["qhs_link"] = is_qhs_link(g);
        text << "qhs link: " << yn(is_qhs_link(g)) << "\n";
        if (is_connected(g)) {
            const Int bound = pg_lower_bound(g, fundamental_cycle(g));
            doc["h1_bound"] = json_int(bound);
            text << "h1 bound: " << to_string(bound) << "\n";
        }
    }
    if (json) {
        emit(doc, out);
    } else {
        out << text.str();
    }
    if (!definite) {
        err << "matrix is not negative definite: the configuration is not "
               "contractible, so it has no singularity link\n";
        return 2;
    }
    return 0;
}

inline int cmd_blowup(const std::string& script_text, bool emit_graph, bool json,
                      std::ostream& out) {
    const ResolutionGraph g = run_script(parse_blowup_script(script_text));
    if (emit_graph) {
        out << serialize_graph(g);
    } else if (json) {
        emit(graph_to_json(g), out);
    } else {
        out << "resulting graph: " << g.size() << " vertices, " << g.edges().size()
            << " edges\n";
        out << serialize_graph(g);
    }
    return 0;
}

inline int cmd_search_star(long long genus, long long max_d, bool json, std::ostream& out,
                           std::ostream& err) {
    const std::size_t leaves = static_cast<std::size_t>(genus) + 3;
    long long minimal_d = 0;
    for (long long d = 1; d <= max_d; ++d) {
        if (is_negative_definite(build_matrix(make_star_graph(leaves, -2, -d)))) {
            minimal_d = d;
            break;
        }
    }
    QVector v(leaves + 1, Rational(1));
    v[0] = Rational(genus + 2);
    const long long bound_d = genus + 3;

    ordered_json doc;
    doc["genus"] = genus;
    doc["max_d"] = max_d;
    std::ostringstream text;
    text << "genus: " << genus << "\n";
    text << "max d searched: " << max_d << "\n";
    if (minimal_d == 0) {
        doc["minimal_d"] = nullptr;
        text << "minimal d: none found\n";
    } else {
        const bool valid_at_minimal = verify_certificate(
            to_rational_matrix(build_matrix(make_star_graph(leaves, -2, -minimal_d))).negated(),
            v);
        doc["minimal_d"] = minimal_d;
        doc["certificate"] = json_rational_vector(v);
        doc["certificate_valid_at_minimal_d"] = valid_at_minimal;
        text << "minimal d: " << minimal_d << "\n";
        text << "certificate v: " << join_rationals(v) << "\n";
        text << "certificate valid at minimal d: " << yn(valid_at_minimal) << "\n";
    }
    const bool valid_at_bound = verify_certificate(
        to_rational_matrix(build_matrix(make_star_graph(leaves, -2, -bound_d))).negated(), v);
    doc["certificate_bound_d"] = bound_d;
    doc["certificate_valid_at_bound"] = valid_at_bound;
    text << "certificate bound: d = " << bound_d << "\n";
    text << "certificate valid at bound: " << yn(valid_at_bound) << "\n";

    if (json) {
        emit(doc, out);
    } else {
        out << text.str();
    }
    if (minimal_d == 0) {
        err << "no negative definite member with d <= " << max_d << "\n";
        return 2;
    }
    return 0;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code; all output goes to the given streams.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic analyzer for dual resolution graphs of normal "
                 "complex surface singularities"};
    app.name("resgraph");
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    add_format(&app);

    std::string file;
    const auto add_file = [&file](CLI::App* cmd) {
        cmd->add_option("file", file, "graph file")->required();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full singularity report");
    add_file(analyze);
    add_format(analyze);

    CLI::App* check = app.add_subcommand("check-definite", "negative definiteness test");
    add_file(check);
    add_format(check);
    bool want_certificate = false;
    check->add_flag("--certificate", want_certificate, "also compute the positivity certificate");

    CLI::App* fundamental =
        app.add_subcommand("fundamental-cycle", "minimal nonzero effective anti-nef cycle");
    add_file(fundamental);
    add_format(fundamental);

    CLI::App* chi_cmd = app.add_subcommand("chi", "Euler characteristic of a cycle");
    add_file(chi_cmd);
    add_format(chi_cmd);
    std::string cycle_spec;
    chi_cmd->add_option("--cycle", cycle_spec, "comma-separated coefficients")->required();

    CLI::App* discrepancies_cmd =
        app.add_subcommand("discrepancies", "discrepancy vector from the canonical system");
    add_file(discrepancies_cmd);
    add_format(discrepancies_cmd);

    CLI::App* classify_cmd = app.add_subcommand("classify", "singularity classification");
    add_file(classify_cmd);
    add_format(classify_cmd);

    CLI::App* link_cmd = app.add_subcommand("link", "link topology of the singularity");
    add_file(link_cmd);
    add_format(link_cmd);

    CLI::App* blowup_cmd = app.add_subcommand("blowup", "run a blowup script");
    std::string script_file;
    blowup_cmd->add_option("script", script_file, "blowup script file")->required();
    add_format(blowup_cmd);
    bool emit_graph = false;
    blowup_cmd->add_flag("--emit-graph", emit_graph, "print the result in the graph file format");

    CLI::App* search_cmd =
        app.add_subcommand("search-star", "minimal leaf weight making a star contractible");
    add_format(search_cmd);
    long long genus = 0;
    search_cmd->add_option("--genus", genus, "genus parameter of the family")
        ->required()
        ->check(CLI::NonNegativeNumber);
    long long max_d = 100;
    search_cmd->add_option("--max-d", max_d, "largest d to try")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 1;
    }

    const bool json = (format == "json");
    try {
        if (*analyze) return detail::cmd_analyze(parse_graph(detail::read_file(file)), json, out);
        if (*check) {
            return detail::cmd_check_definite(parse_graph(detail::read_file(file)),
                                              want_certificate, json, out);
        }
        if (*fundamental) {
            return detail::cmd_fundamental_cycle(parse_graph(detail::read_file(file)), json, out);
        }
        if (*chi_cmd) {
            return detail::cmd_chi(parse_graph(detail::read_file(file)), cycle_spec, json, out);
        }
        if (*discrepancies_cmd) {
            return detail::cmd_discrepancies(parse_graph(detail::read_file(file)), json, out);
        }
        if (*classify_cmd) {
            return detail::cmd_classify(parse_graph(detail::read_file(file)), json, out);
        }
        if (*link_cmd) {
            return detail::cmd_link(parse_graph(detail::read_file(file)), json, out, err);
        }
        if (*blowup_cmd) {
            return detail::cmd_blowup(detail::read_file(script_file), emit_graph, json, out);
        }
        if (*search_cmd) return detail::cmd_search_star(genus, max_d, json, out, err);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const ScriptError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const NotContractible& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DisconnectedGraph& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no command given\n";
    return 1;
}

}  // namespace resgraph

#endif  // RESGRAPH_CLI_HPP
