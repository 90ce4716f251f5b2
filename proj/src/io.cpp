// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gammaq/ideal.hpp"

namespace gammaq {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

/// Parse a (possibly signed) integer occupying the whole token; `where` is
/// the position of the token in the enclosing input, used in errors.
int parse_int_token(const std::string& token, std::size_t where) {
    const std::string t = trimmed(token);
    std::size_t used = 0;
    try {
        const int value = std::stoi(t, &used);
        if (used == t.size() && !t.empty()) return value;
    } catch (const std::exception&) {
        // fall through to the shared error below
    }
    throw ConfigError("quiver syntax error at position " + std::to_string(where) +
                      ": expected an integer, got '" + token + "'");
}

/// Default arrow ids in the style of the built-in quivers: "a1_2" for the
/// first arrow 1 -> 2, with a counting suffix for parallel copies.
std::string default_arrow_id(int from, int to, int copy) {
    std::string id = "a" + std::to_string(from) + "_" + std::to_string(to);
    if (copy > 1) id += "_" + std::to_string(copy);
    return id;
}

Quiver quiver_from_arrow_list(const std::string& input) {
    std::vector<int> vertices;
    std::vector<Arrow> arrows;
    std::map<std::pair<int, int>, int> copies;
    auto note_vertex = [&](int v) {
        if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
            vertices.push_back(v);
    };

    std::size_t pos = 0;
    while (pos <= input.size()) {
        std::size_t comma = input.find(',', pos);
        if (comma == std::string::npos) comma = input.size();
        const std::string segment = input.substr(pos, comma - pos);
        if (trimmed(segment).empty())
            throw ConfigError("quiver syntax error at position " + std::to_string(pos) +
                              ": empty arrow description");
        // a segment is a chain v0 -> v1 -> ... -> vk, k >= 1
        std::vector<int> chain;
        std::size_t at = 0;
        while (true) {
            std::size_t arrow = segment.find("->", at);
            const std::string token =
                segment.substr(at, (arrow == std::string::npos ? segment.size() : arrow) - at);
            chain.push_back(parse_int_token(token, pos + at));
            if (arrow == std::string::npos) break;
            at = arrow + 2;
        }
        if (chain.size() < 2)
            throw ConfigError("quiver syntax error at position " + std::to_string(pos) +
                              ": expected 'from->to'");
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            note_vertex(chain[k]);
            note_vertex(chain[k + 1]);
            const int copy = ++copies[{chain[k], chain[k + 1]}];
            arrows.push_back(
                Arrow{default_arrow_id(chain[k], chain[k + 1], copy), chain[k], chain[k + 1]});
        }
        pos = comma + 1;
        if (comma == input.size()) break;
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

/// "A3", "D4", "E6", "Kronecker2" / "Kronecker(2)".
Quiver builtin_quiver(const std::string& name) {
    auto tail_int = [&](std::size_t from, std::size_t to) -> int {
        const std::string digits = name.substr(from, to - from);
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw ConfigError("unknown quiver name '" + name + "'");
        return std::stoi(digits);
    };
    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D' || name[0] == 'E')) {
        const int n = tail_int(1, name.size());
        if (name[0] == 'A') return Quiver::type_a(n);
        if (name[0] == 'D') return Quiver::type_d(n);
        return Quiver::type_e(n);
    }
    const std::string kron = "Kronecker";
    if (name.rfind(kron, 0) == 0) {
        std::size_t from = kron.size(), to = name.size();
        if (from < to && name[from] == '(' && name[to - 1] == ')') { ++from; --to; }
        return Quiver::kronecker(tail_int(from, to));
    }
    throw ConfigError("unknown quiver name '" + name + "'");
}

ordered_json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(what + ": " + e.what());
    }
}

} // namespace

void RunConfig::validate() const {
    if (weight_bound < 4)
        throw ConfigError("weight bound must be at least 4 (got " +
                          std::to_string(weight_bound) + ")");
    if (degree_min > degree_max)
        throw ConfigError("degree window is empty: " + std::to_string(degree_min) + ":" +
                          std::to_string(degree_max));
    if (degree_min > -2 || degree_max < 2)
        throw ConfigError("degree window must contain [-2, 2] (got " +
                          std::to_string(degree_min) + ":" + std::to_string(degree_max) + ")");
    if (jobs < 1)
        throw ConfigError("parallelism degree must be at least 1");
    field();  // parses, throws on bad field text
    quiver(); // parses, throws on bad quiver text
}

Field RunConfig::field() const { return Field::parse(field_text); }

Quiver RunConfig::quiver() const { return parse_quiver(quiver_text); }

TwistOptions RunConfig::twist_options() const {
    TwistOptions opt;
    opt.weight_bound = weight_bound;
    opt.jobs = jobs;
    return opt;
}

ordered_json RunConfig::describe() const {
    return ordered_json{{"quiver", quiver_text},
                        {"field", field().describe()},
                        {"weight_bound", weight_bound},
                        {"degree_window", {degree_min, degree_max}},
                        {"jobs", jobs},
                        {"version", kVersion}};
}

std::pair<int, int> parse_degree_window(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw ConfigError("degree window must look like 'lo:hi', got '" + text + "'");
    int lo, hi;
    try {
        std::size_t used = 0;
        const std::string left = trimmed(text.substr(0, colon));
        const std::string right = trimmed(text.substr(colon + 1));
        lo = std::stoi(left, &used);
        if (used != left.size()) throw std::invalid_argument(left);
        hi = std::stoi(right, &used);
        if (used != right.size()) throw std::invalid_argument(right);
    } catch (const std::exception&) {
        throw ConfigError("degree window must look like 'lo:hi', got '" + text + "'");
    }
    if (lo > hi)
        throw ConfigError("degree window is empty: '" + text + "'");
    return {lo, hi};
}

Quiver parse_quiver(const std::string& input) {
    const std::string text = trimmed(input);
    if (text.empty()) throw ConfigError("empty quiver description");
    if (text.front() == '{')
        return quiver_from_json(parse_json_text(text, "quiver JSON"));
    if (text.size() > 5 && text.compare(text.size() - 5, 5, ".json") == 0)
        return quiver_from_json(parse_json_text(read_text_file(text), "quiver file " + text));
    if (text.find("->") != std::string::npos) return quiver_from_arrow_list(text);
    return builtin_quiver(text);
}

ordered_json quiver_to_json(const Quiver& q) {
    ordered_json arrows = ordered_json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back(ordered_json{{"id", a.id}, {"from", a.from}, {"to", a.to}});
    return ordered_json{
        {"name", q.name()}, {"vertices", q.vertices()}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const ordered_json& j) {
    try {
        std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
        std::vector<Arrow> arrows;
        std::map<std::pair<int, int>, int> copies;
        for (const auto& a : j.value("arrows", ordered_json::array())) {
            Arrow arrow;
            arrow.from = a.at("from").get<int>();
            arrow.to = a.at("to").get<int>();
            const int copy = ++copies[{arrow.from, arrow.to}];
            arrow.id = a.value("id", default_arrow_id(arrow.from, arrow.to, copy));
            arrows.push_back(std::move(arrow));
        }
        return Quiver(std::move(vertices), std::move(arrows), j.value("name", ""));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("quiver JSON: ") + e.what());
    }
}

ordered_json complex_to_json(const TwistedComplex& t) {
    const DoubleQuiver& dq = t.dq();
    ordered_json gens = ordered_json::array();
    for (const Generator& g : t.generators())
        gens.push_back(ordered_json{
            {"vertex", g.vertex}, {"shift", g.shift}, {"offset", g.weight_offset}});
    ordered_json delta = ordered_json::array();
    for (const auto& [rc, value] : t.delta_entries()) {
        if (value.is_zero()) continue;
        ordered_json terms = ordered_json::array();
        for (const auto& [path, coeff] : value.terms()) {
            ordered_json names = ordered_json::array();
            for (std::uint16_t letter : path.letters) names.push_back(dq.letter(letter).name);
            terms.push_back(ordered_json{{"coeff", coeff.str()}, {"path", std::move(names)}});
        }
        delta.push_back(ordered_json{
            {"row", rc.first}, {"col", rc.second}, {"terms", std::move(terms)}});
    }
    return ordered_json{{"generators", std::move(gens)}, {"delta", std::move(delta)}};
}

TwistedComplex complex_from_json(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                 const ordered_json& j) {
    std::map<std::string, int> letter_of;
    for (const Letter& l : dq->letters()) letter_of[l.name] = l.id;
    TwistedComplex t(dq, f);
    try {
        for (const auto& g : j.at("generators"))
            t.add_generator(g.at("vertex").get<int>(), g.at("shift").get<int>(),
                            g.value("offset", 0));
        for (const auto& entry : j.value("delta", ordered_json::array())) {
            const int r = entry.at("row").get<int>();
            const int c = entry.at("col").get<int>();
            if (r < 0 || r >= t.size() || c < 0 || c >= t.size())
                throw ConfigError("complex JSON: delta entry references generator " +
                                  std::to_string(std::max(r, c)) + " of a complex with " +
                                  std::to_string(t.size()) + " generators");
            AlgebraElement value(f);
            for (const auto& term : entry.at("terms")) {
                Path p = dq->trivial_path(t.generator(c).vertex);
                bool first = true;
                for (const auto& name : term.at("path")) {
                    const auto it = letter_of.find(name.get<std::string>());
                    if (it == letter_of.end())
                        throw ConfigError("complex JSON: unknown letter '" +
                                          name.get<std::string>() + "'");
                    const Path lp = dq->letter_path(it->second);
                    p = first ? lp : dq->compose(p, lp);
                    first = false;
                }
                value.add_term(p, Scalar::parse(f, term.at("coeff").get<std::string>()));
            }
            t.add_delta(r, c, value);
        }
        t.validate();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("complex JSON: ") + e.what());
    } catch (const InvalidDataError& e) {
        throw ConfigError(std::string("complex JSON is structurally invalid: ") + e.what());
    }
    return t;
}

std::vector<long> g_vector(const TwistedComplex& t) {
    const std::vector<int>& vertices = t.dq().quiver().vertices();
    std::vector<long> g(vertices.size(), 0);
    for (const Generator& gen : t.generators()) {
        const auto it = std::lower_bound(vertices.begin(), vertices.end(), gen.vertex);
        const std::size_t idx = static_cast<std::size_t>(it - vertices.begin());
        g[idx] += (gen.shift % 2 == 0) ? 1 : -1;
    }
    return g;
}

std::string g_vector_str(const SiltingObject& m) {
    std::string out;
    for (std::size_t b = 0; b < m.blocks.size(); ++b) {
        if (b) out += ",";
        const std::vector<long> g = g_vector(m.blocks[b]);
        out += "(";
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(g[k]);
        }
        out += ")";
    }
    return out;
}

std::string poset_dot(const SiltingPoset& p) {
    std::ostringstream out;
    out << "digraph silting {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        const PosetNode& node = p.nodes[i];
        const std::string word = node.provenance.empty() ? "Γ" : node.provenance;
        out << "  n" << i << " [label=\"" << word << "\\n"
            << g_vector_str(node.object) << "\"];\n";
    }
    for (const PosetEdge& e : p.edges)
        out << "  n" << e.from << " -> n" << e.to << " [label=\"mu" << (e.block + 1)
            << "\"];\n";
    out << "}\n";
    return out.str();
}

ordered_json poset_to_json(const SiltingPoset& p) {
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        const PosetNode& node = p.nodes[i];
        ordered_json gvs = ordered_json::array();
        ordered_json blocks = ordered_json::array();
        for (const TwistedComplex& b : node.object.blocks) {
            gvs.push_back(g_vector(b));
            blocks.push_back(complex_to_json(b));
        }
        nodes.push_back(ordered_json{{"id", i},
                                     {"provenance", node.provenance},
                                     {"g_vectors", std::move(gvs)},
                                     {"blocks", std::move(blocks)}});
    }
    ordered_json edges = ordered_json::array();
    for (const PosetEdge& e : p.edges)
        edges.push_back(ordered_json{{"from", e.from}, {"to", e.to}, {"block", e.block}});
    return ordered_json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::map<std::pair<int, int>, long> algebra_cohomology(
    std::shared_ptr<const DoubleQuiver> dq, Field f, int weight_bound) {
    std::map<std::pair<int, int>, long> dims;
    const std::vector<int>& vertices = dq->quiver().vertices();
    for (int w = 0; w <= weight_bound; ++w) {
        for (int d = -(w / 2); d <= 0; ++d) {
            long h = 0;
            for (int s : vertices) {
                for (int t : vertices) {
                    const SliceKey key{d, w, s, t};
                    const long dim =
                        static_cast<long>(dq->slice(d, w, s, t).size());
                    if (dim == 0) continue;
                    const long rank_out = ambient_differential(*dq, f, key).rank();
                    const long rank_in =
                        ambient_differential(*dq, f, SliceKey{d - 1, w, s, t}).rank();
                    h += dim - rank_out - rank_in;
                }
            }
            if (h != 0) dims[{d, w}] = h;
        }
    }
    return dims;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file '" + path + "'");
    out << content;
    if (!out) throw ConfigError("cannot write file '" + path + "'");
}

} // namespace gammaq
