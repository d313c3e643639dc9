#include "acypart/io.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace acypart {
namespace {

Hypergraph build_checked(int n, int r, std::vector<Hyperedge> edges) {
    try {
        return make_hypergraph(n, r, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid hypergraph: ") + e.what());
    }
}

}  // namespace

Hypergraph parse_hypergraph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("json: top-level value must be an object");
    for (const char* field : {"n", "r"}) {
        if (!doc.contains(field) || !doc[field].is_number_integer())
            throw ParseError(std::string("json: field '") + field + "' must be an integer");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("json: field 'edges' must be an array");
    std::vector<Hyperedge> edges;
    edges.reserve(doc["edges"].size());
    std::size_t index = 0;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array())
            throw ParseError("json: edges[" + std::to_string(index) + "] must be an array");
        Hyperedge e;
        e.reserve(item.size());
        for (const auto& v : item) {
            if (!v.is_number_integer())
                throw ParseError("json: edges[" + std::to_string(index) +
                                 "] must contain only integers");
            e.push_back(v.get<int>());
        }
        edges.push_back(std::move(e));
        ++index;
    }
    return build_checked(doc["n"].get<int>(), doc["r"].get<int>(), std::move(edges));
}

Hypergraph parse_hypergraph_txt(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, r = 0;
    std::vector<Hyperedge> edges;

    auto tokenize = [](const std::string& s) {
        std::vector<std::string> out;
        std::istringstream ls(s);
        std::string tok;
        while (ls >> tok) out.push_back(tok);
        return out;
    };
    auto to_int = [](const std::string& tok, int lineno_) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("line " + std::to_string(lineno_) + ": invalid integer '" + tok + "'");
        return value;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": expected header 'n r'");
            n = to_int(toks[0], lineno);
            r = to_int(toks[1], lineno);
            have_header = true;
            continue;
        }
        Hyperedge e;
        e.reserve(toks.size());
        for (const auto& tok : toks) e.push_back(to_int(tok, lineno));
        edges.push_back(std::move(e));
    }
    if (!have_header) throw ParseError("empty input: expected header 'n r'");
    return build_checked(n, r, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_hypergraph_json(text) : parse_hypergraph_txt(text);
    }
    throw ParseError("empty input");
}

std::string serialize_json(const Hypergraph& h) {
    std::string out = "{\"n\":" + std::to_string(h.n) + ",\"r\":" + std::to_string(h.r) +
                      ",\"edges\":[";
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < h.edges[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(h.edges[i][j]);
        }
        out += ']';
    }
    out += "]}\n";
    return out;
}

std::string serialize_txt(const Hypergraph& h) {
    std::string out = std::to_string(h.n) + " " + std::to_string(h.r) + "\n";
    for (const auto& e : h.edges) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(e[j]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace acypart
