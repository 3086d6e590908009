// Text formats: the graph file format, its serializer (round-trip safe),
// and the blowup script format. `#` starts a comment anywhere on a line.
//
// Graph files:
//     vertex <name> genus=<int> self=<int>
//     edge <name> <name> [mult=<int>]
//
// Blowup scripts:
//     start <name> g=<int> e=<int>
//     blowup_on <curve> -> <name>
//     blowup_at <c1> <c2> -> <name>
//     select <name> <name> ...

#ifndef RESGRAPH_IO_HPP
#define RESGRAPH_IO_HPP

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "resgraph/blowup.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"

namespace resgraph {
namespace detail {

inline std::vector<std::string> tokenize_line(const std::string& line) {
    const std::size_t hash = line.find('#');
    std::istringstream in(hash == std::string::npos ? line : line.substr(0, hash));
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(std::move(token));
    return tokens;
}

inline long long parse_integer(const std::string& text, std::size_t line,
                               const std::string& what) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer for " + what + ", got '" + text + "'");
    }
}

/// Parses `key=<int>` where key is one of the two expected names; each key
/// must appear exactly once across the attribute tokens.
inline std::pair<long long, long long> parse_two_attributes(
    const std::vector<std::string>& tokens, std::size_t first, std::size_t line,
    const std::string& key1, const std::string& key2) {
    bool seen1 = false;
    bool seen2 = false;
    long long value1 = 0;
    long long value2 = 0;
    for (std::size_t t = first; t < tokens.size(); ++t) {
        const std::string& token = tokens[t];
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos) {
            throw ParseError(line, "expected key=value attribute, got '" + token + "'");
        }
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == key1 && !seen1) {
            value1 = parse_integer(value, line, key1);
            seen1 = true;
        } else if (key == key2 && !seen2) {
            value2 = parse_integer(value, line, key2);
            seen2 = true;
        } else {
            throw ParseError(line, "unexpected or repeated attribute '" + key + "'");
        }
    }
    if (!seen1 || !seen2) {
        throw ParseError(line, "need both " + key1 + "= and " + key2 + "= attributes");
    }
    return {value1, value2};
}

inline void check_name(const std::string& name, std::size_t line) {
    if (name.empty() || name.find('=') != std::string::npos) {
        throw ParseError(line, "invalid name '" + name + "'");
    }
}

}  // namespace detail

/// Parses the graph text format. Vertices must be declared before edges use
/// them; errors carry 1-based line numbers.
inline ResolutionGraph parse_graph(const std::string& text) {
    std::vector<CurveVertex> vertices;
    std::vector<Edge> edges;
    std::set<std::string> names;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = detail::tokenize_line(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "vertex") {
            if (tokens.size() != 4) {
                throw ParseError(line_no, "vertex needs: vertex <name> genus=<int> self=<int>");
            }
            detail::check_name(tokens[1], line_no);
            if (!names.insert(tokens[1]).second) {
                throw ParseError(line_no, "duplicate vertex name '" + tokens[1] + "'");
            }
            const auto [genus, self] =
                detail::parse_two_attributes(tokens, 2, line_no, "genus", "self");
            if (genus < 0) throw ParseError(line_no, "genus must be non-negative");
            vertices.push_back({tokens[1], static_cast<int>(genus), self});
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 3 && tokens.size() != 4) {
                throw ParseError(line_no, "edge needs: edge <name> <name> [mult=<int>]");
            }
            for (std::size_t t = 1; t <= 2; ++t) {
                detail::check_name(tokens[t], line_no);
                if (!names.count(tokens[t])) {
                    throw ParseError(line_no, "unknown vertex '" + tokens[t] + "'");
                }
            }
            if (tokens[1] == tokens[2]) {
                throw ParseError(line_no, "edge endpoints must be distinct");
            }
            long long mult = 1;
            if (tokens.size() == 4) {
                const std::string& token = tokens[3];
                if (token.rfind("mult=", 0) != 0) {
                    throw ParseError(line_no, "expected mult=<int>, got '" + token + "'");
                }
                mult = detail::parse_integer(token.substr(5), line_no, "mult");
                if (mult < 1) throw ParseError(line_no, "mult must be >= 1");
            }
            edges.push_back({tokens[1], tokens[2], mult});
        } else {
            throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (vertices.empty()) throw ParseError(line_no, "graph has no vertices");
    return ResolutionGraph(std::move(vertices), edges);
}

/// Canonical serialization; parse_graph(serialize_graph(g)) == g.
inline std::string serialize_graph(const ResolutionGraph& g) {
    std::ostringstream out;
    for (const CurveVertex& v : g.vertices()) {
        out << "vertex " << v.name << " genus=" << v.genus << " self=" << v.self_intersection
            << "\n";
    }
    for (const auto& e : g.edges()) {
        out << "edge " << g.vertex(e.i).name << " " << g.vertex(e.j).name;
        if (e.multiplicity != 1) out << " mult=" << e.multiplicity;
        out << "\n";
    }
    return out.str();
}

/// Parses the blowup script format; errors carry 1-based line numbers.
/// Semantic validation (names existing, curves meeting) happens when the
/// script runs.
inline BlowupScript parse_blowup_script(const std::string& text) {
    BlowupScript script;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = detail::tokenize_line(line);
        if (tokens.empty()) continue;
        ScriptInstruction ins;
        if (tokens[0] == "start") {
            if (tokens.size() != 4) {
                throw ParseError(line_no, "start needs: start <name> g=<int> e=<int>");
            }
            detail::check_name(tokens[1], line_no);
            ins.kind = ScriptInstruction::Kind::start;
            ins.result = tokens[1];
            const auto [genus, self] = detail::parse_two_attributes(tokens, 2, line_no, "g", "e");
            if (genus < 0) throw ParseError(line_no, "g must be non-negative");
            ins.genus = static_cast<int>(genus);
            ins.self_intersection = self;
        } else if (tokens[0] == "blowup_on") {
            if (tokens.size() != 4 || tokens[2] != "->") {
                throw ParseError(line_no, "blowup_on needs: blowup_on <curve> -> <name>");
            }
            detail::check_name(tokens[1], line_no);
            detail::check_name(tokens[3], line_no);
            ins.kind = ScriptInstruction::Kind::blowup_on;
            ins.target = tokens[1];
            ins.result = tokens[3];
        } else if (tokens[0] == "blowup_at") {
            if (tokens.size() != 5 || tokens[3] != "->") {
                throw ParseError(line_no, "blowup_at needs: blowup_at <c1> <c2> -> <name>");
            }
            for (std::size_t t : {std::size_t{1}, std::size_t{2}, std::size_t{4}}) {
                detail::check_name(tokens[t], line_no);
            }
            ins.kind = ScriptInstruction::Kind::blowup_at;
            ins.target = tokens[1];
            ins.other = tokens[2];
            ins.result = tokens[4];
        } else if (tokens[0] == "select") {
            if (tokens.size() < 2) {
                throw ParseError(line_no, "select needs at least one curve name");
            }
            ins.kind = ScriptInstruction::Kind::select;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                detail::check_name(tokens[t], line_no);
                ins.selection.push_back(tokens[t]);
            }
        } else {
            throw ParseError(line_no, "unknown instruction '" + tokens[0] + "'");
        }
        script.instructions.push_back(std::move(ins));
    }
    return script;
}

}  // namespace resgraph

#endif  // RESGRAPH_IO_HPP
