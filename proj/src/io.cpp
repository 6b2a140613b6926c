#include "pathhom/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pathhom {

using nlohmann::json;

namespace {

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

[[noreturn]] void parse_error(size_t line, const std::string& what) {
    throw InputError("ParseError(line " + std::to_string(line) + "): " + what);
}

Rat parse_rat(const std::string& tok, size_t line) {
    try {
        std::string t = tok;
        if (!t.empty() && t[0] == '+') t = t.substr(1);
        return Rat(t);
    } catch (...) {
        parse_error(line, "bad coefficient '" + tok + "'");
    }
}

Form parse_terms(const std::string& body, const Digraph* g, bool allow_rational) {
    // split brackets into their own tokens
    std::string spaced;
    for (char c : body) {
        if (c == '[' || c == ']') {
            spaced += ' ';
            spaced += c;
            spaced += ' ';
        } else {
            spaced += c;
        }
    }
    std::istringstream is(spaced);
    std::string ln;
    std::vector<std::pair<Rat, ElemPath>> terms;
    int declared_dim = -1;
    size_t lineno = 0;
    std::vector<std::string> toks;
    {
        std::istringstream body_is(spaced);
        std::string raw;
        while (std::getline(body_is, raw)) {
            ++lineno;
            for (const auto& t : tokens_of(strip_comment(raw))) toks.push_back(t);
        }
    }
    size_t i = 0;
    while (i < toks.size()) {
        const std::string& t = toks[i];
        if (t == "form") {
            ++i;
            continue;
        }
        if (t.rfind("dim=", 0) == 0) {
            declared_dim = std::stoi(t.substr(4));
            ++i;
            continue;
        }
        Rat c = parse_rat(t, lineno);
        if (!allow_rational && boost::multiprecision::denominator(c) != 1)
            parse_error(lineno, "rational coefficient in integer chain");
        ++i;
        if (i >= toks.size() || toks[i] != "[") parse_error(lineno, "expected '[' after coefficient");
        ++i;
        ElemPath p;
        while (i < toks.size() && toks[i] != "]") p.push_back(toks[i++]);
        if (i >= toks.size()) parse_error(lineno, "unterminated '['");
        ++i;
        if (p.empty()) parse_error(lineno, "empty path");
        terms.push_back({c, p});
    }
    int dim = declared_dim;
    for (const auto& [c, p] : terms) {
        int d = (int)p.size() - 1;
        if (dim == -1) dim = d;
        if (d != dim) throw InputError("MixedDimensions: paths of length " + std::to_string(dim) +
                                       " and " + std::to_string(d));
        if (g)
            for (const auto& v : p)
                if (!g->has_vertex(v)) throw InputError("UnknownVertex: " + v);
    }
    if (dim == -1) throw InputError("ParseError(line 1): empty chain with no dim declaration");
    Form out(dim);
    for (const auto& [c, p] : terms) out.add(p, c);
    return out;
}

template <class C>
std::string terms_text(const BasicChain<C>& c) {
    std::ostringstream os;
    os << "dim=" << c.dim;
    for (const auto& [p, k] : c.terms) {
        os << " " << (k > 0 ? "+" : "") << k << " [";
        for (size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
        os << "]";
    }
    return os.str();
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Digraph parse_digraph_text(const std::string& body, const std::string& fallback_name) {
    std::istringstream is(body);
    std::string raw, name = fallback_name;
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(raw));
        if (toks.empty()) continue;
        if (toks[0] == "digraph") {
            if (toks.size() != 2) parse_error(lineno, "digraph header needs a name");
            name = toks[1];
        } else if (toks[0] == "vertex") {
            if (toks.size() != 2) parse_error(lineno, "vertex line needs one identifier");
            vs.push_back(toks[1]);
        } else if (toks.size() == 3 && toks[1] == "->") {
            es.push_back({toks[0], toks[2]});
        } else {
            parse_error(lineno, "unrecognized line '" + raw + "'");
        }
    }
    return Digraph::validate(name, vs, es);
}

Digraph parse_digraph_json(const std::string& body) {
    json j;
    try {
        j = json::parse(body);
    } catch (const std::exception& e) {
        throw InputError(std::string("ParseError(line 1): ") + e.what());
    }
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (const auto& v : j.value("vertices", json::array())) vs.push_back(v.get<std::string>());
    for (const auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("ParseError(line 1): edge entries must be 2-arrays");
        es.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
    return Digraph::validate(j.value("name", "digraph"), vs, es);
}

Digraph load_digraph(const std::string& path) {
    std::string body = read_file(path);
    if (ends_with(path, ".json")) return parse_digraph_json(body);
    return parse_digraph_text(body, stem_of(path));
}

std::string digraph_to_text(const Digraph& g) {
    std::ostringstream os;
    os << "digraph " << (g.name().empty() ? "G" : g.name()) << "\n";
    std::set<Vertex> covered;
    for (const auto& [u, v] : g.edges()) {
        covered.insert(u);
        covered.insert(v);
    }
    for (const auto& v : g.vertices())
        if (!covered.count(v)) os << "vertex " << v << "\n";
    for (const auto& [u, v] : g.edges()) os << u << " -> " << v << "\n";
    return os.str();
}

std::string digraph_to_json(const Digraph& g) {
    json j;
    j["name"] = g.name();
    j["vertices"] = g.vertices();
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump(2) + "\n";
}

Chain parse_chain_text(const std::string& body, const Digraph* g) {
    Form f = parse_terms(body, g, false);
    Chain out(f.dim);
    for (const auto& [p, c] : f.terms) out.add(p, boost::multiprecision::numerator(c));
    return out;
}

Chain load_chain(const std::string& path, const Digraph& g) {
    std::string body = read_file(path);
    if (ends_with(path, ".json")) {
        json j;
        try {
            j = json::parse(body);
        } catch (const std::exception& e) {
            throw InputError(std::string("ParseError(line 1): ") + e.what());
        }
        std::ostringstream text;
        text << "dim=" << j.value("dim", -1);
        for (const auto& t : j.value("terms", json::array())) {
            text << " " << (t["c"].is_string() ? t["c"].get<std::string>()
                                               : std::to_string(t["c"].get<long>()));
            text << " [";
            for (const auto& v : t["path"]) text << " " << v.get<std::string>();
            text << " ]";
        }
        return parse_chain_text(text.str(), &g);
    }
    return parse_chain_text(body, &g);
}

Form load_form(const std::string& path, const Digraph& g) {
    std::string body = read_file(path);
    if (ends_with(path, ".json")) {
        json j = json::parse(body);
        std::ostringstream text;
        text << "dim=" << j.value("dim", -1);
        for (const auto& t : j.value("terms", json::array())) {
            text << " " << t["c"].get<std::string>() << " [";
            for (const auto& v : t["path"]) text << " " << v.get<std::string>();
            text << " ]";
        }
        return parse_terms(text.str(), &g, true);
    }
    return parse_terms(body, &g, true);
}

std::string chain_to_text(const Chain& c) { return terms_text(c) + "\n"; }
std::string chain_to_text(const QChain& c) { return terms_text(c) + "\n"; }

std::string chain_to_json(const Chain& c) {
    json j;
    j["dim"] = c.dim;
    j["terms"] = json::array();
    for (const auto& [p, k] : c.terms) j["terms"].push_back({{"c", k.str()}, {"path", p}});
    return j.dump(2) + "\n";
}

std::string form_to_json(const Form& f) {
    json j;
    j["form"] = true;
    j["dim"] = f.dim;
    j["terms"] = json::array();
    for (const auto& [p, k] : f.terms) j["terms"].push_back({{"c", k.str()}, {"path", p}});
    return j.dump(2) + "\n";
}

VertexMap load_vertex_map(const std::string& path, const Digraph& source, const Digraph& target) {
    VertexMap m;
    m.source = source;
    m.target = target;
    std::istringstream is(read_file(path));
    std::string raw;
    size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(raw));
        if (toks.empty()) continue;
        if (toks.size() != 3 || toks[1] != "=>") parse_error(lineno, "expected '<src> => <dst>'");
        m.assignment[toks[0]] = toks[2];
    }
    m.check_total();
    return m;
}

HomotopyWitness load_homotopy(const std::string& path, const Digraph& source,
                              const Digraph& target) {
    HomotopyWitness w;
    std::istringstream is(read_file(path));
    std::string raw;
    size_t lineno = 0;
    int step = -1;
    std::map<int, std::map<Vertex, Vertex>> steps;
    while (std::getline(is, raw)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(raw));
        if (toks.empty()) continue;
        if (toks[0] == "line") {
            if (toks.size() != 2) parse_error(lineno, "line header needs an orientation string");
            w.line = toks[1];
        } else if (toks[0] == "step") {
            if (toks.size() != 2) parse_error(lineno, "step header needs an index");
            step = std::stoi(toks[1]);
        } else if (toks.size() == 3 && toks[1] == "=>") {
            if (step < 0) parse_error(lineno, "map line before any step header");
            steps[step][toks[0]] = toks[2];
        } else {
            parse_error(lineno, "unrecognized line '" + raw + "'");
        }
    }
    int n = (int)w.line.size();
    for (int k = 0; k <= n; ++k) {
        auto it = steps.find(k);
        if (it == steps.end()) throw InputError("homotopy file is missing step " + std::to_string(k));
        for (const auto& v : source.vertices()) {
            auto jt = it->second.find(v);
            if (jt == it->second.end())
                throw InputError("homotopy step " + std::to_string(k) + " is missing vertex " + v);
            w.F[{v, k}] = jt->second;
        }
    }
    w.f.source = source;
    w.f.target = target;
    w.g.source = source;
    w.g.target = target;
    for (const auto& v : source.vertices()) {
        w.f.assignment[v] = w.F[{v, 0}];
        w.g.assignment[v] = w.F[{v, n}];
    }
    return w;
}

std::string homology_report_json(const HomologyResult& h) {
    json j;
    j["reduced"] = h.reduced;
    j["degrees"] = json::array();
    for (const auto& d : h.degrees) {
        json t = json::array();
        for (const auto& k : d.torsion) t.push_back(k.str());
        j["degrees"].push_back({{"n", d.n}, {"betti", d.betti}, {"torsion", t}});
    }
    return j.dump(2) + "\n";
}

std::string structure_report_json(const StructureReport& r) {
    json j;
    j["s"] = r.s;
    j["e"] = r.e;
    j["n"] = r.n;
    j["pass"] = r.pass;
    j["violations"] = r.violations;
    json fa = json::object(), fb = json::object();
    for (const auto& [a, c] : r.family_a) fa[a] = chain_to_text(c);
    for (const auto& [b, c] : r.family_b) fb[b] = chain_to_text(c);
    j["family_a"] = fa;
    j["family_b"] = fb;
    if (r.family_c) j["family_c"] = chain_to_text(*r.family_c);
    return j.dump(2) + "\n";
}

std::string skew_report_json(const SkewReport& r) {
    json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["h_p"] = r.hp;
    j["h_q"] = r.hq;
    j["pass"] = r.pass;
    j["pairs"] = json::array();
    for (const auto& pr : r.pairs)
        j["pairs"].push_back({{"i", pr.i},
                              {"j", pr.j},
                              {"coboundary", pr.coboundary},
                              {"witness", terms_text(pr.witness)}});
    return j.dump(2) + "\n";
}

std::string mv_report_json(const MVReport& r) {
    json j;
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

}  // namespace pathhom
