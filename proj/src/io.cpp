#include "cubemorse/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cubemorse::io {

using bigraph::BlockId;
using bigraph::ModularSpec;
using bigraph::MorseGraph;
using bigraph::Side;

namespace {
const Int kSafeMax = (Int(1) << 53);
}

Json int_to_json(const Int& v) {
    if (abs(v) < kSafeMax) return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    throw std::runtime_error("expected an integer or a decimal string");
}

Json spec_to_json(const ModularSpec& spec) {
    Json j;
    j["rank"] = spec.rank;
    j["modulus"] = int_to_json(spec.modulus);
    Json sig = Json::object();
    auto edges = bigraph::template_edges(spec.rank);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Json residues = Json::array();
        for (const Int& r : spec.sigma[i]) residues.push_back(int_to_json(r));
        sig[bigraph::to_string(edges[i].a) + "|" + bigraph::to_string(edges[i].b)] = residues;
    }
    j["sigma"] = sig;
    return j;
}

ModularSpec spec_from_json(const Json& j) {
    ModularSpec spec;
    spec.rank = j.at("rank").get<int>();
    if (spec.rank < 1) throw std::runtime_error("rank must be positive");
    spec.modulus = int_from_json(j.at("modulus"));
    auto edges = bigraph::template_edges(spec.rank);
    const Json& sig = j.at("sigma");
    spec.sigma.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string key = bigraph::to_string(edges[i].a) + "|" + bigraph::to_string(edges[i].b);
        if (!sig.contains(key)) throw std::runtime_error("sigma is missing block pair " + key);
        for (const Json& r : sig.at(key))
            spec.sigma[i].push_back(mod_reduce(int_from_json(r), spec.modulus));
        if (spec.sigma[i].empty()) throw std::runtime_error("empty residue set for " + key);
    }
    return spec;
}

Json graph_to_json(const MorseGraph& g) {
    Json j;
    j["rank"] = g.rank;
    Json blocks = Json::object();
    for (const auto& [block, verts] : g.blocks) {
        Json names = Json::array();
        for (int v : verts) names.push_back(g.vertex_names[v]);
        blocks[bigraph::to_string(block)] = names;
    }
    j["blocks"] = blocks;
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges)
        edges.push_back(Json::array({g.vertex_names[a], g.vertex_names[b]}));
    j["edges"] = edges;
    return j;
}

MorseGraph graph_from_json(const Json& j) {
    MorseGraph g;
    g.rank = j.at("rank").get<int>();
    if (g.rank < 1) throw std::runtime_error("rank must be positive");
    std::map<std::string, int> by_name;
    for (const auto& [key, names] : j.at("blocks").items()) {
        auto block = bigraph::parse_block(key);
        if (!block) throw std::runtime_error("bad block name " + key);
        if (block->index > g.rank) throw std::runtime_error("block index above rank: " + key);
        for (const Json& name : names) {
            std::string s = name.get<std::string>();
            if (by_name.count(s)) throw std::runtime_error("duplicate vertex name " + s);
            by_name[s] = g.add_vertex(*block, s);
        }
    }
    for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::runtime_error("edges must be name pairs");
        auto a = by_name.find(e[0].get<std::string>());
        auto b = by_name.find(e[1].get<std::string>());
        if (a == by_name.end() || b == by_name.end())
            throw std::runtime_error("edge mentions an unknown vertex");
        g.add_edge(a->second, b->second);
    }
    g.finalize();
    return g;
}

Json voltage_to_json(const cover::VoltageCover& c) {
    Json j;
    j["n"] = c.n;
    j["p"] = int_to_json(c.p);
    Json volt = Json::object();
    for (int i = 0; i < c.side_size(); ++i)
        for (int k = 0; k < c.side_size(); ++k)
            volt[c.base_label(i) + "|" + c.base_label(k)] = int_to_json(c.voltage[i][k]);
    j["voltage"] = volt;
    return j;
}

cover::VoltageCover voltage_from_json(const Json& j) {
    cover::VoltageCover c;
    c.n = j.at("n").get<int>();
    if (c.n < 2) throw std::runtime_error("need n >= 2");
    c.p = int_from_json(j.at("p"));
    c.voltage.assign(c.side_size(), std::vector<Int>(c.side_size(), 0));
    for (int i = 0; i < c.side_size(); ++i)
        for (int k = 0; k < c.side_size(); ++k) {
            std::string key = c.base_label(i) + "|" + c.base_label(k);
            if (!j.at("voltage").contains(key))
                throw std::runtime_error("voltage table is missing edge " + key);
            c.voltage[i][k] = mod_reduce(int_from_json(j.at("voltage").at(key)), c.p);
        }
    return c;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // translate the byte offset into a line:column diagnostic
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                 ": malformed JSON: " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace cubemorse::io
