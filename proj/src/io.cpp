#include "chromastar/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chromastar {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw std::invalid_argument("expected integer, got empty string");
    size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("trailing junk after integer: '" + s + "'");
    return v;
}

// "[3,2^2,1^3]" -> parts with exponents expanded
std::vector<int> parse_bracket_list(const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("expected [...] list: '" + text + "'");
    std::string inner = strip(t.substr(1, t.size() - 2));
    std::vector<int> parts;
    if (inner.empty()) return parts;
    for (const std::string& item : split(inner, ',')) {
        std::string it = strip(item);
        size_t caret = it.find('^');
        if (caret == std::string::npos) {
            parts.push_back(parse_int(it));
        } else {
            int value = parse_int(it.substr(0, caret));
            int mult = parse_int(it.substr(caret + 1));
            if (mult < 1) throw std::invalid_argument("exponent must be positive: '" + item + "'");
            for (int i = 0; i < mult; ++i) parts.push_back(value);
        }
    }
    return parts;
}

} // namespace

Forest parse_forest(const std::string& text) {
    std::string t = strip(text);
    if (!t.empty() && t[0] == 'C') return caterpillar(parse_bracket_list(t.substr(1)));
    size_t semi = t.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("tree format is 'n; u-v, ...' or 'C[a1,...]': '" + text + "'");
    int n = parse_int(t.substr(0, semi));
    std::string rhs = strip(t.substr(semi + 1));
    std::vector<Edge> edges;
    if (!rhs.empty()) {
        for (const std::string& item : split(rhs, ',')) {
            std::string e = strip(item);
            size_t dash = e.find('-');
            if (dash == std::string::npos) throw std::invalid_argument("expected u-v edge: '" + item + "'");
            edges.push_back(make_edge(parse_int(e.substr(0, dash)), parse_int(e.substr(dash + 1))));
        }
    }
    return Forest(n, std::move(edges));
}

std::string format_forest(const Forest& f) {
    std::string out = std::to_string(f.vertex_count()) + ";";
    bool first = true;
    for (const auto& [u, v] : f.edges()) {
        out += first ? " " : ", ";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

Partition parse_partition(const std::string& text) { return Partition(parse_bracket_list(text)); }

std::string format_partition(const Partition& p) { return p.to_string(); }

StarPoly parse_starpoly_text(const std::string& text) {
    std::vector<std::pair<Partition, i64>> terms;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty()) continue;
        size_t star = t.find('*');
        if (star == std::string::npos) throw std::invalid_argument("expected 'c * st[...]': '" + line + "'");
        std::string cs = strip(t.substr(0, star));
        if (!cs.empty() && cs[0] == '+') cs = cs.substr(1);
        i64 coeff = std::stoll(cs);
        std::string rest = strip(t.substr(star + 1));
        if (rest.rfind("st", 0) != 0) throw std::invalid_argument("expected st[...]: '" + line + "'");
        terms.emplace_back(parse_partition(rest.substr(2)), coeff);
    }
    if (terms.empty()) throw std::invalid_argument("empty star polynomial text");
    StarPoly f(terms.front().first.weight());
    for (auto& [key, c] : terms) f.add_term(key, c);
    return f;
}

std::string format_starpoly_text(const StarPoly& f) {
    std::string out;
    for (const auto& [key, c] : f.terms()) {
        out += std::to_string(c) + " * st" + key.to_string() + "\n";
    }
    return out;
}

nlohmann::json starpoly_to_json(const StarPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : f.terms())
        terms.push_back({{"partition", key.parts()}, {"coeff", c}});
    return {{"degree", f.degree()}, {"terms", terms}};
}

StarPoly starpoly_from_json(const nlohmann::json& j) {
    StarPoly f(j.at("degree").get<int>());
    for (const auto& term : j.at("terms"))
        f.add_term(Partition(term.at("partition").get<std::vector<int>>()), term.at("coeff").get<i64>());
    return f;
}

std::string forest_to_dot(const Forest& f) {
    std::string out = "graph tree {\n";
    for (int v = 0; v < f.vertex_count(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (const auto& [u, v] : f.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

} // namespace chromastar
