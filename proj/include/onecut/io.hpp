#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "onecut/errors.hpp"
#include "onecut/graph.hpp"
#include "onecut/instance.hpp"

namespace onecut {

/// Largest accepted sum of absolute edge weights. Keeps all downstream
/// arithmetic (doubled matching rewards, shifted path costs) comfortably
/// inside 64/128-bit ranges.
constexpr std::int64_t kWeightBudget = std::int64_t{1} << 60;

namespace detail {

inline std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::int64_t parse_int(std::string_view tok, int line, const std::string& what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, what + " is not a 64-bit integer: '" + std::string(tok) + "'");
    return v;
}

}  // namespace detail

/// Text format, one record per line:
///   c <comment>
///   p 1planar <n> <m> <k>
///   e <edge_id> <u> <v> <weight>     edge_id strictly 1..m in order
///   x <edge_id_1> <edge_id_2>
/// Node and edge ids are 1-based on disk, 0-based in memory. The parsed
/// instance has already passed validate().
inline EmbeddedInstance parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    std::int64_t n = 0, m = 0, k = 0;
    std::int64_t seen_edges = 0, seen_crossings = 0;
    std::int64_t weight_spent = 0;
    EmbeddedInstance inst;

    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = detail::tokens(raw);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (toks.size() != 5 || toks[1] != "1planar")
                throw ParseError(line_no, "header must read 'p 1planar <n> <m> <k>'");
            n = detail::parse_int(toks[2], line_no, "node count");
            m = detail::parse_int(toks[3], line_no, "edge count");
            k = detail::parse_int(toks[4], line_no, "crossing count");
            if (n < 0 || m < 0 || k < 0) throw ParseError(line_no, "negative count in header");
            if (n > (std::int64_t{1} << 30) || m > (std::int64_t{1} << 30) || k > (std::int64_t{1} << 30))
                throw ParseError(line_no, "count in header exceeds supported range");
            inst.graph = WeightedGraph(static_cast<NodeId>(n));
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "record before 'p' header");
        if (toks[0] == "e") {
            if (toks.size() != 5) throw ParseError(line_no, "edge line must read 'e <id> <u> <v> <w>'");
            std::int64_t id = detail::parse_int(toks[1], line_no, "edge id");
            std::int64_t u = detail::parse_int(toks[2], line_no, "endpoint");
            std::int64_t v = detail::parse_int(toks[3], line_no, "endpoint");
            std::int64_t w = detail::parse_int(toks[4], line_no, "weight");
            if (seen_edges >= m) throw ParseError(line_no, "more edge lines than the header promised");
            if (id != seen_edges + 1)
                throw ParseError(line_no, "edge ids must run 1.." + std::to_string(m) + " in order");
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "endpoint out of range");
            if (w <= -kWeightBudget || w >= kWeightBudget)
                throw ParseError(line_no, "weight magnitude exceeds supported range");
            std::int64_t mag = w < 0 ? -w : w;
            if (mag > kWeightBudget - weight_spent)
                throw ParseError(line_no, "total weight magnitude exceeds supported range");
            weight_spent += mag;
            inst.graph.add_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), w);
            ++seen_edges;
            continue;
        }
        if (toks[0] == "x") {
            if (toks.size() != 3) throw ParseError(line_no, "crossing line must read 'x <e1> <e2>'");
            std::int64_t a = detail::parse_int(toks[1], line_no, "edge id");
            std::int64_t b = detail::parse_int(toks[2], line_no, "edge id");
            if (seen_crossings >= k) throw ParseError(line_no, "more crossing lines than the header promised");
            if (a < 1 || a > (std::int64_t{1} << 30) || b < 1 || b > (std::int64_t{1} << 30))
                throw ParseError(line_no, "crossing edge id out of supported range");
            inst.crossings.list.emplace_back(static_cast<EdgeId>(a - 1), static_cast<EdgeId>(b - 1));
            ++seen_crossings;
            continue;
        }
        throw ParseError(line_no, "unknown record type '" + std::string(toks[0]) + "'");
    }
    if (!have_header) throw ParseError(line_no, "missing 'p' header");
    if (seen_edges != m)
        throw ParseError(line_no, "header promised " + std::to_string(m) + " edges, found " +
                                      std::to_string(seen_edges));
    if (seen_crossings != k)
        throw ParseError(line_no, "header promised " + std::to_string(k) + " crossings, found " +
                                      std::to_string(seen_crossings));
    if (auto err = validate(inst)) throw *err;
    return inst;
}

/// Canonical text form: edges ascending by id, re-indexed 1..m; crossings in
/// list order with re-indexed ids, smaller first. Expects dense node ids
/// 0..n-1; parse(serialize(i)) == i whenever edge ids are also the dense
/// 0..m-1 range (generator and parser output always are).
inline std::string serialize(const EmbeddedInstance& inst) {
    std::ostringstream out;
    const auto& g = inst.graph;
    std::map<EdgeId, std::int64_t> file_id;
    std::int64_t next = 1;
    for (const Edge& e : g.edges()) file_id[e.id] = next++;
    out << "p 1planar " << g.node_count() << ' ' << g.edge_count() << ' ' << inst.crossings.size()
        << '\n';
    for (const Edge& e : g.edges())
        out << "e " << file_id.at(e.id) << ' ' << (e.u + 1) << ' ' << (e.v + 1) << ' ' << e.w << '\n';
    for (const Crossing& x : inst.crossings.list) {
        std::int64_t a = file_id.at(x.first), b = file_id.at(x.second);
        out << "x " << std::min(a, b) << ' ' << std::max(a, b) << '\n';
    }
    return out.str();
}

}  // namespace onecut
