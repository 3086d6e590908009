// Blowup calculus: bookkeeping of self-intersections and pairwise
// intersection counts of a curve configuration under point blowups, plus a
// small script interpreter that builds configurations and exports selected
// subconfigurations as resolution graphs.

#ifndef RESGRAPH_BLOWUP_HPP
#define RESGRAPH_BLOWUP_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"

namespace resgraph {

/// A collection of curves on some smooth ambient surface: names, genera,
/// self-intersections, and the symmetric table of pairwise intersection
/// counts (diagonal kept at zero; self-intersections live on the curves).
class Configuration {
public:
    struct Curve {
        std::string name;
        int genus = 0;
        long long self_intersection = 0;
    };

    Configuration() = default;

    /// Builds a configuration from explicit data: curves plus a symmetric
    /// pairwise intersection table with zero diagonal.
    static Configuration from_table(std::vector<Curve> curves,
                                    std::vector<std::vector<long long>> table) {
        Configuration c;
        if (table.size() != curves.size()) {
            throw DimensionMismatch("table size does not match curve count");
        }
        for (std::size_t i = 0; i < curves.size(); ++i) {
            if (table[i].size() != curves.size()) {
                throw DimensionMismatch("table is not square");
            }
            if (table[i][i] != 0) throw GraphError("table diagonal must be zero");
            for (std::size_t j = 0; j < i; ++j) {
                if (table[i][j] != table[j][i]) throw GraphError("table must be symmetric");
                if (table[i][j] < 0) throw GraphError("intersection counts must be >= 0");
            }
            c.add_disjoint_curve(curves[i].name, curves[i].genus, curves[i].self_intersection);
        }
        c.table_ = std::move(table);
        return c;
    }

    std::size_t size() const { return curves_.size(); }
    const Curve& curve(std::size_t i) const { return curves_.at(i); }
    const std::vector<Curve>& curves() const { return curves_; }

    std::size_t require_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) {
            throw UnknownCurve("unknown curve '" + name + "'");
        }
        return it->second;
    }

    long long pairwise(std::size_t i, std::size_t j) const {
        if (i == j) return 0;
        return table_.at(i).at(j);
    }

    /// Adds a curve meeting nothing (the `start` instruction).
    void add_disjoint_curve(const std::string& name, int genus, long long self) {
        if (genus < 0) throw GraphError("curve '" + name + "' has negative genus");
        add_curve(name, genus, self);
    }

    /// Blows up a point lying on exactly one curve: that curve's
    /// self-intersection drops by 1 and a new (-1)-curve appears meeting it
    /// once and nothing else.
    void blowup_on(const std::string& curve, const std::string& new_name) {
        const std::size_t i = require_index(curve);
        curves_[i].self_intersection -= 1;
        const std::size_t e = add_curve(new_name, 0, -1);
        table_[i][e] = 1;
        table_[e][i] = 1;
    }

    /// Blows up a transverse intersection point of exactly two curves: both
    /// self-intersections drop by 1, the pair meets one time fewer, and the
    /// new (-1)-curve meets each of the two once.
    void blowup_at(const std::string& c1, const std::string& c2,
                   const std::string& new_name) {
        const std::size_t i = require_index(c1);
        const std::size_t j = require_index(c2);
        if (i == j) throw NotIntersecting("blowup_at needs two distinct curves");
        if (table_[i][j] < 1) {
            throw NotIntersecting("curves '" + c1 + "' and '" + c2 + "' do not meet");
        }
        curves_[i].self_intersection -= 1;
        curves_[j].self_intersection -= 1;
        table_[i][j] -= 1;
        table_[j][i] -= 1;
        const std::size_t e = add_curve(new_name, 0, -1);
        table_[i][e] = table_[e][i] = 1;
        table_[j][e] = table_[e][j] = 1;
    }

private:
    std::size_t add_curve(const std::string& name, int genus, long long self) {
        auto [it, fresh] = index_.emplace(name, curves_.size());
        if (!fresh) throw GraphError("duplicate curve name '" + name + "'");
        curves_.push_back({name, genus, self});
        for (auto& row : table_) row.push_back(0);
        table_.emplace_back(curves_.size(), 0);
        return curves_.size() - 1;
    }

    std::vector<Curve> curves_;
    std::vector<std::vector<long long>> table_;
    std::map<std::string, std::size_t> index_;
};

inline Configuration apply_blowup_on(Configuration c, const std::string& curve,
                                     const std::string& new_name) {
    c.blowup_on(curve, new_name);
    return c;
}

inline Configuration apply_blowup_at(Configuration c, const std::string& c1,
                                     const std::string& c2, const std::string& new_name) {
    c.blowup_at(c1, c2, new_name);
    return c;
}

/// Restricts the configuration to the named curves (in the given order) and
/// packages the result as a resolution graph.
inline ResolutionGraph extract_graph(const Configuration& c,
                                     const std::vector<std::string>& names) {
    if (names.empty()) throw GraphError("selection is empty");
    std::vector<std::size_t> picked;
    picked.reserve(names.size());
    std::vector<CurveVertex> vertices;
    vertices.reserve(names.size());
    for (const std::string& name : names) {
        const std::size_t i = c.require_index(name);
        picked.push_back(i);
        const Configuration::Curve& cv = c.curve(i);
        vertices.push_back({cv.name, cv.genus, cv.self_intersection});
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < picked.size(); ++a) {
        for (std::size_t b = a + 1; b < picked.size(); ++b) {
            const long long m = c.pairwise(picked[a], picked[b]);
            if (m > 0) edges.push_back({names[a], names[b], m});
        }
    }
    // ResolutionGraph constructor rejects duplicate selection names.
    return ResolutionGraph(std::move(vertices), edges);
}

/// One script instruction. `start` introduces a disjoint curve with the
/// given genus and self-intersection; the blowup instructions transform the
/// configuration; `select` names the curves to export and must come last.
struct ScriptInstruction {
    enum class Kind { start, blowup_on, blowup_at, select };

    Kind kind = Kind::start;
    std::string target;               // blowup_on / blowup_at first curve
    std::string other;                // blowup_at second curve
    std::string result;               // start / blowup result name
    int genus = 0;                    // start only
    long long self_intersection = 0;  // start only
    std::vector<std::string> selection;
};

struct BlowupScript {
    std::vector<ScriptInstruction> instructions;
};

/// Executes the instructions in order and exports the selection. All
/// failures carry the index of the offending instruction.
inline ResolutionGraph run_script(const BlowupScript& s) {
    Configuration config;
    for (std::size_t idx = 0; idx < s.instructions.size(); ++idx) {
        const ScriptInstruction& ins = s.instructions[idx];
        const bool last = (idx + 1 == s.instructions.size());
        try {
            switch (ins.kind) {
                case ScriptInstruction::Kind::start:
                    config.add_disjoint_curve(ins.result, ins.genus, ins.self_intersection);
                    break;
                case ScriptInstruction::Kind::blowup_on:
                    config.blowup_on(ins.target, ins.result);
                    break;
                case ScriptInstruction::Kind::blowup_at:
                    config.blowup_at(ins.target, ins.other, ins.result);
                    break;
                case ScriptInstruction::Kind::select:
                    if (!last) {
                        throw ScriptError(idx, "select must be the final instruction");
                    }
                    return extract_graph(config, ins.selection);
            }
        } catch (const ScriptError&) {
            throw;
        } catch (const Error& e) {
            throw ScriptError(idx, e.what());
        }
    }
    throw ScriptError(s.instructions.empty() ? 0 : s.instructions.size() - 1,
                      "script must end with a select instruction");
}

}  // namespace resgraph

#endif  // RESGRAPH_BLOWUP_HPP
