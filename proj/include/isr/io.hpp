#pragma once

#include "isr/graph.hpp"
#include "isr/instance.hpp"
#include "isr/subdivision.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace isr {

/// Malformed input; `line` is 1-based, 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string & what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
        , line(line)
    {
    }

    int line;
};

namespace detail {

    struct Line {
        int number;
        std::vector<std::string> words;
    };

    /// Non-empty, non-comment lines split on whitespace.
    inline auto tokenize(std::istream & in) -> std::vector<Line>
    {
        std::vector<Line> out;
        std::string text;
        for (int number = 1; std::getline(in, text); ++number) {
            if (auto hash = text.find('#'); hash != std::string::npos)
                text.erase(hash);
            std::istringstream words(text);
            Line line{number, {}};
            for (std::string w; words >> w;)
                line.words.push_back(w);
            if (! line.words.empty())
                out.push_back(std::move(line));
        }
        return out;
    }

    inline auto to_int(const Line & line, std::size_t k) -> int
    {
        if (k >= line.words.size())
            throw ParseError(line.number, "expected more fields");
        auto & w = line.words[k];
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(w, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != w.size() || w.empty())
            throw ParseError(line.number, "expected an integer, got '" + w + "'");
        return value;
    }

    inline auto expect(const Line & line, const std::string & keyword, std::size_t fields) -> void
    {
        if (line.words[0] != keyword)
            throw ParseError(line.number, "expected '" + keyword + "', got '" + line.words[0] + "'");
        if (line.words.size() != fields)
            throw ParseError(line.number, "'" + keyword + "' takes " + std::to_string(fields - 1) + " fields, got "
                + std::to_string(line.words.size() - 1));
    }

    inline auto vertex(const Line & line, std::size_t k, int n) -> Vertex
    {
        int v = to_int(line, k);
        if (v < 0 || v >= n)
            throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
        return v;
    }

    inline auto ids(const Line & line, int n) -> TokenSet
    {
        TokenSet out;
        for (std::size_t k = 1; k < line.words.size(); ++k)
            out.push_back(vertex(line, k, n));
        return out;
    }

    inline auto join(const TokenSet & s) -> std::string
    {
        std::string out;
        for (auto v : s)
            out += " " + std::to_string(v);
        return out;
    }

    inline auto open_in(const std::string & path) -> std::ifstream
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError(0, "cannot open " + path);
        return in;
    }

}

/// "isr n m k", m lines "e u v", "I ...", "J ...".
inline auto parse_instance(std::istream & in) -> Instance
{
    auto lines = detail::tokenize(in);
    if (lines.empty())
        throw ParseError(0, "empty instance");
    auto & head = lines[0];
    detail::expect(head, "isr", 4);
    int n = detail::to_int(head, 1), m = detail::to_int(head, 2), k = detail::to_int(head, 3);
    if (n < 0 || m < 0 || k < 0)
        throw ParseError(head.number, "negative count in header");
    if (static_cast<int>(lines.size()) != m + 3)
        throw ParseError(lines.back().number, "expected " + std::to_string(m) + " edge lines plus I and J, got "
            + std::to_string(lines.size()) + " lines in total");

    std::vector<Edge> edges;
    for (int e = 1; e <= m; ++e) {
        detail::expect(lines[e], "e", 3);
        Vertex u = detail::vertex(lines[e], 1, n), v = detail::vertex(lines[e], 2, n);
        if (u == v)
            throw ParseError(lines[e].number, "self loop on " + std::to_string(u));
        Edge e_uv{std::min(u, v), std::max(u, v)};
        if (std::find(edges.begin(), edges.end(), e_uv) != edges.end())
            throw ParseError(lines[e].number, "repeated edge " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back(e_uv);
    }
    Graph g;
    try {
        g = Graph(n, edges);
    }
    catch (const GraphError & err) {
        throw ParseError(0, err.what());
    }

    TokenSet sets[2];
    for (int s = 0; s < 2; ++s) {
        auto & line = lines[m + 1 + s];
        auto name = s == 0 ? "I" : "J";
        if (line.words[0] != name)
            throw ParseError(line.number, std::string("expected '") + name + "'");
        sets[s] = detail::ids(line, n);
        if (static_cast<int>(sets[s].size()) != k)
            throw ParseError(line.number, std::string(name) + " has " + std::to_string(sets[s].size())
                + " vertices, header says " + std::to_string(k));
        if (normalized(sets[s]).size() != sets[s].size())
            throw ParseError(line.number, std::string(name) + " repeats a vertex");
        if (! is_independent(g, sets[s]))
            throw ParseError(line.number, std::string(name) + " is not independent");
    }
    return make_instance(std::move(g), sets[0], sets[1]);
}

inline auto parse_instance(const std::string & text) -> Instance
{
    std::istringstream in(text);
    return parse_instance(in);
}

inline auto read_instance(const std::string & path) -> Instance
{
    auto in = detail::open_in(path);
    return parse_instance(in);
}

inline auto render_instance(const Instance & inst) -> std::string
{
    auto edges = inst.graph.edges();
    std::ostringstream out;
    out << "isr " << inst.graph.size() << " " << edges.size() << " " << inst.source.size() << "\n";
    for (auto [u, v] : edges)
        out << "e " << u << " " << v << "\n";
    out << "I" << detail::join(inst.source) << "\n";
    out << "J" << detail::join(inst.target) << "\n";
    return out.str();
}

/// A sequence file: the moves start from `start`, and `end` is the set the
/// file declares on its last line.
struct SequenceFile {
    Rule rule = Rule::ts;
    SlideSequence sequence;
    TokenSet end;
};

inline auto parse_sequence(std::istream & in, const TokenSet & start) -> SequenceFile
{
    auto lines = detail::tokenize(in);
    if (lines.empty())
        throw ParseError(0, "empty sequence");
    auto & head = lines[0];
    detail::expect(head, "seq", 3);
    SequenceFile out;
    if (head.words[1] == "ts")
        out.rule = Rule::ts;
    else if (head.words[1] == "tj")
        out.rule = Rule::tj;
    else
        throw ParseError(head.number, "rule must be ts or tj, got '" + head.words[1] + "'");
    int len = detail::to_int(head, 2);
    if (len < 0 || static_cast<int>(lines.size()) != len + 2)
        throw ParseError(head.number, "header announces " + std::to_string(len) + " moves, file has "
            + std::to_string(static_cast<int>(lines.size()) - 2));

    out.sequence.start = normalized(start);
    auto kind = out.rule == Rule::ts ? MoveKind::slide : MoveKind::jump;
    for (int k = 1; k <= len; ++k) {
        auto & line = lines[k];
        if (line.words.size() != 3 || line.words[1] != "->")
            throw ParseError(line.number, "expected '<from> -> <to>'");
        out.sequence.moves.push_back(Move{kind, detail::to_int(line, 0), detail::to_int(line, 2)});
    }
    auto & last = lines.back();
    if (last.words[0] != "end")
        throw ParseError(last.number, "expected 'end'");
    for (std::size_t k = 1; k < last.words.size(); ++k)
        out.end.push_back(detail::to_int(last, k));
    out.end = normalized(out.end);
    return out;
}

inline auto parse_sequence(const std::string & text, const TokenSet & start) -> SequenceFile
{
    std::istringstream in(text);
    return parse_sequence(in, start);
}

inline auto read_sequence(const std::string & path, const TokenSet & start) -> SequenceFile
{
    auto in = detail::open_in(path);
    return parse_sequence(in, start);
}

inline auto render_sequence(const SlideSequence & seq, Rule rule) -> std::string
{
    std::ostringstream out;
    out << "seq " << to_string(rule) << " " << seq.length() << "\n";
    for (auto & m : seq.moves)
        out << m.from << " -> " << m.to << "\n";
    out << "end" << detail::join(seq.final_set()) << "\n";
    return out.str();
}

/// Sidecar for a subdivided instance: "submap n m t", then per original edge
/// "s u v" followed by the t segment vertices listed from u.
inline auto render_submap(const SubdivisionMap & m) -> std::string
{
    std::ostringstream out;
    out << "submap " << m.original.size() << " " << m.edges.size() << " " << m.t << "\n";
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        out << "s " << m.edges[e].first << " " << m.edges[e].second;
        for (auto s : m.segments[e])
            out << " " << s;
        out << "\n";
    }
    return out.str();
}

/// Rebuilds the map and checks that the segment ids are the ones subdivide uses.
inline auto parse_submap(std::istream & in) -> SubdivisionMap
{
    auto lines = detail::tokenize(in);
    if (lines.empty())
        throw ParseError(0, "empty subdivision map");
    auto & head = lines[0];
    detail::expect(head, "submap", 4);
    int n = detail::to_int(head, 1), m = detail::to_int(head, 2), t = detail::to_int(head, 3);
    if (n < 0 || m < 0)
        throw ParseError(head.number, "negative count in header");
    if (static_cast<int>(lines.size()) != m + 1)
        throw ParseError(head.number, "header announces " + std::to_string(m) + " segments");
    std::vector<Edge> edges;
    for (int e = 1; e <= m; ++e) {
        detail::expect(lines[e], "s", static_cast<std::size_t>(t) + 3);
        edges.emplace_back(detail::vertex(lines[e], 1, n), detail::vertex(lines[e], 2, n));
    }
    SubdivisionMap out;
    try {
        out = subdivide(Graph(n, edges), t);
    }
    catch (const GraphError & err) {
        throw ParseError(head.number, err.what());
    }
    for (int e = 1; e <= m; ++e) {
        auto & line = lines[e];
        Vertex u = detail::to_int(line, 1), v = detail::to_int(line, 2);
        auto seg = out.path_from(u, v);
        for (int k = 0; k < t; ++k)
            if (detail::to_int(line, 3 + k) != seg[k])
                throw ParseError(line.number, "segment ids differ from the canonical subdivision");
    }
    return out;
}

inline auto read_submap(const std::string & path) -> SubdivisionMap
{
    auto in = detail::open_in(path);
    return parse_submap(in);
}

/// Bare edge list ("u v" per line, '#' comments) into an instance. The vertex
/// count is the larger of `n` and the largest id plus one.
inline auto convert_edge_list(std::istream & in, const TokenSet & i, const TokenSet & j, int n = 0) -> Instance
{
    std::vector<Edge> edges;
    for (auto & line : detail::tokenize(in)) {
        if (line.words.size() != 2)
            throw ParseError(line.number, "expected '<u> <v>'");
        Vertex u = detail::to_int(line, 0), v = detail::to_int(line, 1);
        if (u < 0 || v < 0 || u == v)
            throw ParseError(line.number, "bad edge " + std::to_string(u) + " " + std::to_string(v));
        n = std::max({n, u + 1, v + 1});
        edges.emplace_back(u, v);
    }
    for (auto v : i)
        n = std::max(n, v + 1);
    for (auto v : j)
        n = std::max(n, v + 1);
    std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) {
        return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
    });
    edges.erase(std::unique(edges.begin(), edges.end(), [](Edge a, Edge b) {
        return std::minmax(a.first, a.second) == std::minmax(b.first, b.second);
    }), edges.end());
    if (i.size() != j.size())
        throw ParseError(0, "I and J differ in size");
    return make_instance(Graph(n, edges), i, j);
}

inline auto write_file(const std::string & path, const std::string & text) -> void
{
    std::ofstream out(path);
    if (! out || ! (out << text))
        throw std::runtime_error("cannot write " + path);
}

}
