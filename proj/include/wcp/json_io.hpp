#ifndef WCP_JSON_IO_HPP
#define WCP_JSON_IO_HPP

#include <wcp/laws.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wcp {

using json = nlohmann::json;

namespace jsonio {

inline std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

inline std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + escape(key); }
inline std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

inline const json& member(const json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_object()) throw ParseError(ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(at(ptr, key), "missing field");
    return *it;
}

inline std::string string_field(const json& j, const std::string& key, const std::string& ptr) {
    const json& v = member(j, key, ptr);
    if (!v.is_string()) throw ParseError(at(ptr, key), "expected a string");
    return v.get<std::string>();
}

inline Field parse_field(const json& j, const std::string& ptr) {
    try {
        if (j.is_number_integer()) {
            const long long p = j.get<long long>();
            return Field::prime(p < 0 ? 0 : static_cast<std::uint64_t>(p));
        }
        if (j.is_string()) {
            std::string s = j.get<std::string>();
            if (s == "Q") return Field::rationals();
            if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')')
                return Field::prime(std::stoull(s.substr(3, s.size() - 4)));
        }
    } catch (const FieldError& e) {
        throw ParseError(ptr, e.what());
    } catch (const std::logic_error&) {
    }
    throw ParseError(ptr, "field must be \"Q\", \"GF(p)\" or a prime");
}

inline json field_to_json(Field f) { return f.describe(); }

inline Scalar parse_scalar(Field f, const json& j, const std::string& ptr) {
    try {
        if (j.is_number_integer()) return Scalar(f, j.get<long long>());
        if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    } catch (const FieldError& e) {
        throw ParseError(ptr, e.what());
    }
    throw ParseError(ptr, "scalar must be an integer or a string \"a\" / \"a/b\"");
}

inline json scalar_to_json(const Scalar& s) {
    std::string t = s.to_string();
    if (t.find('/') == std::string::npos && t.size() < 18) return std::stoll(t);
    return t;
}

/// Row-major list of rows.
inline Mat parse_matrix(Field f, const json& j, std::size_t rows, std::size_t cols, const std::string& ptr) {
    if (!j.is_array()) throw ParseError(ptr, "expected an array of rows");
    if (j.size() != rows)
        throw ParseError(ptr, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Mat m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        const std::string rp = at(ptr, r);
        if (!row.is_array()) throw ParseError(rp, "expected a row array");
        if (row.size() != cols)
            throw ParseError(rp, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(f, row[c], at(rp, c));
    }
    return m;
}

inline json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace jsonio

/// Named data sharing one field. Entries refer to each other by name; a
/// monoid's name is also the name of its carrier factor.
///
///   field        "Q" | "GF(p)"
///   objects      {factor: dim}
///   monoids      {A: {unit: [[..]], mul: [[..]]}}
///   morphisms    {f: {dom: [factors], cod: [factors], matrix: [[..]]}}
///   quadruples   {q: {algebra, v: [factors], psi, sigma, preunit?}}
///   setups       {s: {qv, qw, delta, tau}}
///   laws         {l: {a, b, lambda}}
///   wreaths      {w: {a, b, lambda, tau, v}}
///   triples      {t: {kind: "dl" | "wdl", algebras: [S, T, D], laws: [l1, l2, l3]}}
///   brzezinski   {b: {quadruple, eta_v}}
///   dp           {d: {v, w, tau}}   (v, w name brzezinski entries)
struct Workspace {
    struct QuadEntry {
        std::string algebra, psi, sigma;
        FObj v;
        std::optional<std::string> preunit;
    };
    struct SetupEntry {
        std::string qv, qw, delta, tau;
    };
    struct LawEntry {
        std::string a, b, lambda;
    };
    struct WreathEntry {
        std::string a, b, lambda, tau, v;
    };
    struct TripleEntry {
        bool weak = false;
        std::string s, t, d, l1, l2, l3;
    };
    struct BrzEntry {
        std::string quadruple, eta_v;
    };
    struct DpEntry {
        std::string v, w, tau;
    };

    Field field;
    std::map<std::string, std::size_t> objects;
    std::map<std::string, MonoidData> monoids;
    std::map<std::string, FMor> morphisms;
    std::map<std::string, QuadEntry> quadruples;
    std::map<std::string, SetupEntry> setups;
    std::map<std::string, LawEntry> laws;
    std::map<std::string, WreathEntry> wreaths;
    std::map<std::string, TripleEntry> triples;
    std::map<std::string, BrzEntry> brzezinski;
    std::map<std::string, DpEntry> dp;

    // -- building

    void add_factor(const std::string& name, std::size_t dim, const std::string& ptr = "/objects") {
        auto [it, fresh] = objects.emplace(name, dim);
        if (!fresh && it->second != dim)
            throw ParseError(ptr, "factor '" + name + "' has dimension " + std::to_string(it->second) +
                                      " elsewhere, here " + std::to_string(dim));
    }
    void add_object(const FObj& x) {
        for (const auto& f : x.factors()) add_factor(f.name, f.dim);
    }
    void add_monoid(const MonoidData& m) {
        unique(m.name(), "/monoids");
        add_object(m.carrier);
        monoids[m.name()] = m;
    }
    void add_morphism(const std::string& name, const FMor& f) {
        unique(name, "/morphisms");
        add_object(f.dom);
        add_object(f.cod);
        morphisms[name] = f;
    }
    /// Adds q with its psi and sigma stored as "<name>.psi" / "<name>.sigma".
    void add_quadruple(const std::string& name, const Quadruple& q, const std::optional<Preunit>& nu = {}) {
        unique(name, "/quadruples");
        if (!monoids.count(q.algebra.name())) add_monoid(q.algebra);
        add_object(q.v);
        add_morphism(name + ".psi", q.psi);
        add_morphism(name + ".sigma", q.sigma);
        QuadEntry e{q.algebra.name(), name + ".psi", name + ".sigma", q.v, {}};
        if (nu) {
            add_morphism(name + ".nu", *nu);
            e.preunit = name + ".nu";
        }
        quadruples[name] = e;
    }

    // -- resolution

    const MonoidData& monoid(const std::string& n, const std::string& ptr) const {
        auto it = monoids.find(n);
        if (it == monoids.end()) throw ParseError(ptr, "no monoid named '" + n + "'");
        return it->second;
    }
    const FMor& morphism(const std::string& n, const std::string& ptr) const {
        auto it = morphisms.find(n);
        if (it == morphisms.end()) throw ParseError(ptr, "no morphism named '" + n + "'");
        return it->second;
    }
    Quadruple quadruple(const std::string& n, const std::string& ptr) const {
        auto it = quadruples.find(n);
        if (it == quadruples.end()) throw ParseError(ptr, "no quadruple named '" + n + "'");
        const QuadEntry& e = it->second;
        const std::string base = jsonio::at("/quadruples", n);
        try {
            return Quadruple(monoid(e.algebra, jsonio::at(base, "algebra")), e.v,
                             morphism(e.psi, jsonio::at(base, "psi")), morphism(e.sigma, jsonio::at(base, "sigma")));
        } catch (const DimensionError& x) {
            throw ParseError(base, x.what());
        }
    }
    std::optional<Preunit> preunit(const std::string& q) const {
        const QuadEntry& e = quadruples.at(q);
        if (!e.preunit) return std::nullopt;
        const std::string ptr = jsonio::at(jsonio::at("/quadruples", q), "preunit");
        Preunit nu = morphism(*e.preunit, ptr);
        const FObj av = monoids.at(e.algebra).carrier * e.v;
        if (!(nu.dom == FObj::unit()) || !(nu.cod == av))
            throw ParseError(ptr, "preunit must be K -> " + av.to_string() + ", got " + nu.signature());
        return nu;
    }
    BrzezinskiData brz(const std::string& n, const std::string& ptr) const {
        auto it = brzezinski.find(n);
        if (it == brzezinski.end()) throw ParseError(ptr, "no brzezinski entry named '" + n + "'");
        const std::string base = jsonio::at("/brzezinski", n);
        Quadruple q = quadruple(it->second.quadruple, jsonio::at(base, "quadruple"));
        FMor eta = morphism(it->second.eta_v, jsonio::at(base, "eta_v"));
        if (!(eta.dom == FObj::unit()) || !(eta.cod == q.v))
            throw ParseError(jsonio::at(base, "eta_v"), "eta_v must be K -> " + q.v.to_string());
        return BrzezinskiData{q, eta};
    }
    LawTriple triple(const std::string& n) const {
        const TripleEntry& e = triples.at(n);
        const std::string base = jsonio::at("/triples", n);
        const std::string ap = jsonio::at(base, "algebras"), lp = jsonio::at(base, "laws");
        return LawTriple{monoid(e.s, jsonio::at(ap, 0)), monoid(e.t, jsonio::at(ap, 1)), monoid(e.d, jsonio::at(ap, 2)),
                         morphism(e.l1, jsonio::at(lp, 0)), morphism(e.l2, jsonio::at(lp, 1)),
                         morphism(e.l3, jsonio::at(lp, 2)), e.weak};
    }

private:
    void unique(const std::string& name, const std::string& section) const {
        bool taken = monoids.count(name) || morphisms.count(name) || quadruples.count(name) || setups.count(name) ||
                     laws.count(name) || wreaths.count(name) || triples.count(name) || brzezinski.count(name) ||
                     dp.count(name);
        if (taken) throw ParseError(jsonio::at(section, name), "name '" + name + "' is already used");
    }

    friend Workspace parse_workspace(const json&, std::optional<Field>);
};

namespace jsonio {

inline FObj parse_object(const Workspace& ws, const json& j, const std::string& ptr) {
    if (!j.is_array()) throw ParseError(ptr, "expected a list of factor names");
    std::vector<Factor> fs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw ParseError(at(ptr, i), "expected a factor name");
        std::string n = j[i].get<std::string>();
        auto it = ws.objects.find(n);
        if (it == ws.objects.end()) throw ParseError(at(ptr, i), "unknown factor '" + n + "'");
        fs.push_back({n, it->second});
    }
    return FObj(fs);
}

inline json object_to_json(const FObj& x) {
    json a = json::array();
    for (const auto& f : x.factors()) a.push_back(f.name);
    return a;
}

template <class F>
void each(const json& root, const std::string& section, F&& f) {
    auto it = root.find(section);
    if (it == root.end()) return;
    const std::string ptr = "/" + section;
    if (!it->is_object()) throw ParseError(ptr, "expected an object of named entries");
    for (auto e = it->begin(); e != it->end(); ++e) f(e.key(), e.value(), at(ptr, e.key()));
}

inline std::vector<std::string> name_list(const json& j, std::size_t n, const std::string& ptr) {
    if (!j.is_array() || j.size() != n) throw ParseError(ptr, "expected " + std::to_string(n) + " names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_string()) throw ParseError(at(ptr, i), "expected a name");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

} // namespace jsonio

/// `field` overrides the file's field descriptor when given.
inline Workspace parse_workspace(const json& root, std::optional<Field> field = std::nullopt) {
    using namespace jsonio;
    if (!root.is_object()) throw ParseError("", "workspace must be a JSON object");
    Workspace ws;
    if (field) ws.field = *field;
    else ws.field = parse_field(member(root, "field", ""), "/field");
    const Field f = ws.field;

    for (auto it = root.begin(); it != root.end(); ++it) {
        static const std::vector<std::string> known = {"field", "objects", "monoids", "morphisms", "quadruples",
                                                       "setups", "laws", "wreaths", "triples", "brzezinski", "dp"};
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw ParseError(at("", it.key()), "unknown section");
    }

    each(root, "objects", [&](const std::string& n, const json& v, const std::string& p) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) throw ParseError(p, "dimension must be positive");
        ws.add_factor(n, v.get<std::size_t>(), p);
    });
    each(root, "monoids", [&](const std::string& n, const json& v, const std::string& p) {
        const json& u = member(v, "unit", p);
        if (!u.is_array() || u.empty()) throw ParseError(at(p, "unit"), "expected a column of rows");
        const std::size_t d = u.size();
        Mat unit = parse_matrix(f, u, d, 1, at(p, "unit"));
        Mat mul = parse_matrix(f, member(v, "mul", p), d, d * d, at(p, "mul"));
        ws.unique(n, "/monoids");
        ws.add_factor(n, d, p);
        ws.monoids[n] = MonoidData::make(n, unit, mul);
    });
    each(root, "morphisms", [&](const std::string& n, const json& v, const std::string& p) {
        FObj dom = parse_object(ws, member(v, "dom", p), at(p, "dom"));
        FObj cod = parse_object(ws, member(v, "cod", p), at(p, "cod"));
        Mat m = parse_matrix(f, member(v, "matrix", p), cod.dim(), dom.dim(), at(p, "matrix"));
        ws.unique(n, "/morphisms");
        ws.morphisms[n] = FMor(dom, cod, m);
    });
    each(root, "quadruples", [&](const std::string& n, const json& v, const std::string& p) {
        Workspace::QuadEntry e{string_field(v, "algebra", p), string_field(v, "psi", p), string_field(v, "sigma", p),
                               parse_object(ws, member(v, "v", p), at(p, "v")), std::nullopt};
        if (v.contains("preunit")) e.preunit = string_field(v, "preunit", p);
        ws.unique(n, "/quadruples");
        ws.quadruples[n] = e;
        ws.quadruple(n, p);
        ws.preunit(n);
    });
    each(root, "setups", [&](const std::string& n, const json& v, const std::string& p) {
        Workspace::SetupEntry e{string_field(v, "qv", p), string_field(v, "qw", p), string_field(v, "delta", p),
                                string_field(v, "tau", p)};
        ws.quadruple(e.qv, at(p, "qv"));
        ws.quadruple(e.qw, at(p, "qw"));
        ws.morphism(e.delta, at(p, "delta"));
        ws.morphism(e.tau, at(p, "tau"));
        ws.unique(n, "/setups");
        ws.setups[n] = e;
    });
    each(root, "laws", [&](const std::string& n, const json& v, const std::string& p) {
        Workspace::LawEntry e{string_field(v, "a", p), string_field(v, "b", p), string_field(v, "lambda", p)};
        ws.monoid(e.a, at(p, "a"));
        ws.monoid(e.b, at(p, "b"));
        ws.morphism(e.lambda, at(p, "lambda"));
        ws.unique(n, "/laws");
        ws.laws[n] = e;
    });
    each(root, "wreaths", [&](const std::string& n, const json& v, const std::string& p) {
        Workspace::WreathEntry e{string_field(v, "a", p), string_field(v, "b", p), string_field(v, "lambda", p),
                                 string_field(v, "tau", p), string_field(v, "v", p)};
        ws.monoid(e.a, at(p, "a"));
        ws.monoid(e.b, at(p, "b"));
        for (const char* k : {"lambda", "tau", "v"}) ws.morphism(string_field(v, k, p), at(p, k));
        ws.unique(n, "/wreaths");
        ws.wreaths[n] = e;
    });
    each(root, "triples", [&](const std::string& n, const json& v, const std::string& p) {
        std::string kind = string_field(v, "kind", p);
        if (kind != "dl" && kind != "wdl") throw ParseError(at(p, "kind"), "kind must be \"dl\" or \"wdl\"");
        auto a = name_list(member(v, "algebras", p), 3, at(p, "algebras"));
        auto l = name_list(member(v, "laws", p), 3, at(p, "laws"));
        ws.unique(n, "/triples");
        ws.triples[n] = Workspace::TripleEntry{kind == "wdl", a[0], a[1], a[2], l[0], l[1], l[2]};
        ws.triple(n);
    });
    each(root, "brzezinski", [&](const std::string& n, const json& v, const std::string& p) {
        Workspace::BrzEntry e{string_field(v, "quadruple", p), string_field(v, "eta_v", p)};
        ws.unique(n, "/brzezinski");
        ws.brzezinski[n] = e;
        ws.brz(n, p);
    });
    each(root, "dp", [&](const std::string& n, const json& v, const std::string& p) {
        Workspace::DpEntry e{string_field(v, "v", p), string_field(v, "w", p), string_field(v, "tau", p)};
        ws.brz(e.v, at(p, "v"));
        ws.brz(e.w, at(p, "w"));
        ws.morphism(e.tau, at(p, "tau"));
        ws.unique(n, "/dp");
        ws.dp[n] = e;
    });
    return ws;
}

inline json to_json(const Workspace& ws) {
    using namespace jsonio;
    json root;
    root["field"] = field_to_json(ws.field);
    json objects = json::object();
    for (const auto& [n, d] : ws.objects)
        if (!ws.monoids.count(n)) objects[n] = d;
    root["objects"] = objects;
    json monoids = json::object();
    for (const auto& [n, m] : ws.monoids)
        monoids[n] = {{"unit", matrix_to_json(m.unit.mat)}, {"mul", matrix_to_json(m.mul.mat)}};
    root["monoids"] = monoids;
    json morphisms = json::object();
    for (const auto& [n, m] : ws.morphisms)
        morphisms[n] = {{"dom", object_to_json(m.dom)}, {"cod", object_to_json(m.cod)}, {"matrix", matrix_to_json(m.mat)}};
    root["morphisms"] = morphisms;
    auto section = [&](const char* key, const auto& map, auto&& row) {
        if (map.empty()) return;
        json s = json::object();
        for (const auto& [n, e] : map) s[n] = row(e);
        root[key] = s;
    };
    section("quadruples", ws.quadruples, [](const Workspace::QuadEntry& e) {
        json q = {{"algebra", e.algebra}, {"v", object_to_json(e.v)}, {"psi", e.psi}, {"sigma", e.sigma}};
        if (e.preunit) q["preunit"] = *e.preunit;
        return q;
    });
    section("setups", ws.setups, [](const Workspace::SetupEntry& e) {
        return json{{"qv", e.qv}, {"qw", e.qw}, {"delta", e.delta}, {"tau", e.tau}};
    });
    section("laws", ws.laws,
            [](const Workspace::LawEntry& e) { return json{{"a", e.a}, {"b", e.b}, {"lambda", e.lambda}}; });
    section("wreaths", ws.wreaths, [](const Workspace::WreathEntry& e) {
        return json{{"a", e.a}, {"b", e.b}, {"lambda", e.lambda}, {"tau", e.tau}, {"v", e.v}};
    });
    section("triples", ws.triples, [](const Workspace::TripleEntry& e) {
        return json{{"kind", e.weak ? "wdl" : "dl"}, {"algebras", {e.s, e.t, e.d}}, {"laws", {e.l1, e.l2, e.l3}}};
    });
    section("brzezinski", ws.brzezinski,
            [](const Workspace::BrzEntry& e) { return json{{"quadruple", e.quadruple}, {"eta_v", e.eta_v}}; });
    section("dp", ws.dp, [](const Workspace::DpEntry& e) { return json{{"v", e.v}, {"w", e.w}, {"tau", e.tau}}; });
    return root;
}

// -- reports

inline json witness_to_json(const Witness& w) {
    return {{"input", w.input}, {"output", w.output}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

inline json report_to_json(const Report& report) {
    Report r = report.sorted();
    json checks = json::array();
    for (const auto& c : r.checks()) {
        json j = {{"label", c.label}, {"pass", c.pass}};
        if (!c.part.empty()) j["part"] = c.part;
        if (!c.scope.empty()) j["scope"] = c.scope;
        if (c.witness) j["witness"] = witness_to_json(*c.witness);
        if (!c.note.empty()) j["note"] = c.note;
        checks.push_back(std::move(j));
    }
    json skipped = json::array();
    for (const auto& s : r.skipped()) {
        json j = {{"label", s.label}, {"reason", s.reason}};
        if (!s.scope.empty()) j["scope"] = s.scope;
        skipped.push_back(std::move(j));
    }
    return {{"pass", r.ok()}, {"checks", checks}, {"skipped", skipped}};
}

} // namespace wcp

#endif
