#ifndef WCP_CLI_HPP
#define WCP_CLI_HPP

#include <wcp/fixtures.hpp>
#include <wcp/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace wcp::cli {

/// One checked entity.
struct Outcome {
    std::string kind;
    std::string name;
    Report report;
    json info = json::object();

    Outcome(std::string k, std::string n, Report r = {}) : kind(std::move(k)), name(std::move(n)), report(std::move(r)) {}
    bool ok() const { return report.ok(); }
};

struct Run {
    std::vector<Outcome> outcomes;
    std::optional<Workspace> produced; // written by --out
};

struct Options {
    std::string command;
    std::string file;
    std::string name;
    std::string field;
    std::string out;
    bool json = false;
    // mine-wdl
    std::string dims = "2,2";
    std::uint64_t budget = 1u << 16;
    std::uint64_t seed = 0;
    bool exhaustive = false;
};

namespace detail {

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("", "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
}

inline std::optional<Field> field_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    json j = s;
    if (!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit)) j = std::stoull(s);
    return jsonio::parse_field(j, "--field");
}

/// Names to process: --name when given (must exist), else all, sorted.
template <class Map>
std::vector<std::string> pick(const Map& m, const std::string& name, const std::string& section) {
    if (!name.empty()) {
        if (!m.count(name)) throw ParseError("/" + section, "no entry named '" + name + "'");
        return {name};
    }
    std::vector<std::string> out;
    for (const auto& kv : m) out.push_back(kv.first);
    return out;
}

/// Runs `body`; a builder refusing its hypotheses becomes a failed report.
inline void guarded(Outcome& o, const std::function<void()>& body) {
    try {
        body();
    } catch (const PreconditionError& e) {
        o.report.merge(e.report());
        o.info["stopped"] = e.what();
    }
}

inline std::string index_list(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

inline std::string info_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

} // namespace detail

inline void render_text(std::ostream& os, const Options& o, const Run& run) {
    os << o.command << (o.file.empty() ? "" : " " + o.file) << "\n";
    std::size_t failed = 0, passed = 0, skipped = 0;
    for (const auto& oc : run.outcomes) {
        Report r = oc.report.sorted();
        os << "== " << oc.kind << " " << oc.name << "\n";
        auto head = [](const std::string& label, const std::string& part, const std::string& scope) {
            return label + (part.empty() ? "" : "/" + part) + (scope.empty() ? "" : " @" + scope);
        };
        std::size_t w = 0;
        for (const auto& c : r.checks()) w = std::max(w, head(c.label, c.part, c.scope).size());
        for (const auto& s : r.skipped()) w = std::max(w, head(s.label, "", s.scope).size());
        for (const auto& c : r.checks()) {
            std::string h = head(c.label, c.part, c.scope);
            os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << h;
            std::string tail;
            if (c.witness)
                tail = "input " + detail::index_list(c.witness->input) + " output " +
                       detail::index_list(c.witness->output) + " lhs " + c.witness->lhs + " rhs " + c.witness->rhs;
            if (!c.note.empty()) tail += (tail.empty() ? "" : "  ") + c.note;
            if (!tail.empty()) os << std::string(w - h.size() + 2, ' ') << tail;
            os << "\n";
            ++(c.pass ? passed : failed);
        }
        for (const auto& s : r.skipped()) {
            std::string h = head(s.label, "", s.scope);
            os << "  skip  " << h << std::string(w - h.size() + 2, ' ') << s.reason << "\n";
            ++skipped;
        }
        for (auto it = oc.info.begin(); it != oc.info.end(); ++it)
            os << "  info  " << it.key() << ": " << detail::info_value(it.value()) << "\n";
    }
    os << "summary: " << failed << " failed, " << passed << " passed, " << skipped << " skipped\n";
}

inline json render_json(const Options& o, const Run& run) {
    json results = json::array();
    bool all = true;
    for (const auto& oc : run.outcomes) {
        json j = report_to_json(oc.report);
        j["kind"] = oc.kind;
        j["name"] = oc.name;
        j["info"] = oc.info;
        all = all && oc.ok();
        results.push_back(std::move(j));
    }
    json root = {{"command", o.command}, {"pass", all}, {"results", results}};
    if (!o.file.empty()) root["file"] = o.file;
    return root;
}

// -- commands

namespace cmd {

inline Run check_quadruple(const Workspace& ws, const Options& o) {
    Run run;
    for (const auto& n : detail::pick(ws.quadruples, o.name, "quadruples")) {
        Quadruple q = ws.quadruple(n, "/quadruples");
        Outcome oc{"quadruple", n};
        oc.report = wcp::check_quadruple(q);
        oc.report.merge(check_derived_identities(q));
        oc.info["rank(nabla)"] = std::to_string(rank(q.nabla_cache.mat)) + " of " + std::to_string(q.av().dim());
        run.outcomes.push_back(std::move(oc));
    }
    return run;
}

inline Run build_wcp(const Workspace& ws, const Options& o) {
    Run run;
    Workspace outw;
    outw.field = ws.field;
    for (const auto& n : detail::pick(ws.quadruples, o.name, "quadruples")) {
        Quadruple q = ws.quadruple(n, "/quadruples");
        auto nu = ws.preunit(n);
        Outcome oc{"quadruple", n};
        detail::guarded(oc, [&] {
            CrossedProduct cp = build_crossed_product(q);
            oc.report.merge(cp.verification);
            oc.info["dim(AxV)"] = cp.small.dim();
            outw.add_morphism(n + ".mu", cp.mu_big);
            outw.add_morphism(n + ".inj", cp.inj);
            outw.add_morphism(n + ".proj", cp.proj);
            if (nu) {
                UnitalCrossedProduct u = build_unital(cp, *nu);
                oc.report.merge(u.verification);
                outw.add_monoid(u.small_monoid);
            } else {
                outw.add_morphism(n + ".mu_small", cp.mu_small);
            }
        });
        run.outcomes.push_back(std::move(oc));
    }
    run.produced = std::move(outw);
    return run;
}

inline Run check_preunit(const Workspace& ws, const Options& o) {
    Run run;
    for (const auto& n : detail::pick(ws.quadruples, o.name, "quadruples")) {
        Quadruple q = ws.quadruple(n, "/quadruples");
        auto nu = ws.preunit(n);
        if (!nu) {
            if (o.name.empty()) continue;
            throw ParseError(jsonio::at(jsonio::at("/quadruples", n), "preunit"), "missing field");
        }
        Outcome oc{"quadruple", n};
        detail::guarded(oc, [&] {
            CrossedProduct cp = build_crossed_product(q);
            Report pre = check_pre_system(cp, *nu);
            oc.report.merge(pre);
            if (!pre.ok()) return;
            UnitalCrossedProduct u = build_unital(cp, *nu);
            oc.report.merge(u.verification);
            derive_psi_sigma(q.algebra, q.v, cp.mu_big, *nu, &oc.report);
        });
        run.outcomes.push_back(std::move(oc));
    }
    return run;
}

struct SetupData {
    Quadruple qv, qw;
    FMor delta, tau;
    std::optional<Preunit> nu_v, nu_w;
};

inline SetupData setup(const Workspace& ws, const std::string& n) {
    const auto& e = ws.setups.at(n);
    const std::string base = jsonio::at("/setups", n);
    SetupData s{ws.quadruple(e.qv, jsonio::at(base, "qv")), ws.quadruple(e.qw, jsonio::at(base, "qw")),
                ws.morphism(e.delta, jsonio::at(base, "delta")), ws.morphism(e.tau, jsonio::at(base, "tau")),
                ws.preunit(e.qv), ws.preunit(e.qw)};
    return s;
}

inline Run check_link(const Workspace& ws, const Options& o) {
    Run run;
    for (const auto& n : detail::pick(ws.setups, o.name, "setups")) {
        SetupData s = setup(ws, n);
        run.outcomes.push_back({"setup", n, wcp::check_link(s.qv, s.qw, s.delta)});
    }
    return run;
}

inline Run check_twisting(const Workspace& ws, const Options& o) {
    Run run;
    for (const auto& n : detail::pick(ws.setups, o.name, "setups")) {
        SetupData s = setup(ws, n);
        Outcome oc{"setup", n, wcp::check_twisting(s.qv, s.qw, s.tau)};
        oc.report.merge(check_sigma_conditions(s.qv, s.qw, s.delta, s.tau));
        run.outcomes.push_back(std::move(oc));
    }
    return run;
}

/// All setups and triples (or the one named), as iteration inputs.
struct Target {
    std::string kind, name;
    SetupData data;
    std::optional<LawTriple> triple;
};

inline std::vector<Target> targets(const Workspace& ws, const Options& o) {
    std::vector<Target> out;
    const bool named = !o.name.empty();
    if (named && !ws.setups.count(o.name) && !ws.triples.count(o.name))
        throw ParseError("/setups", "no setup or triple named '" + o.name + "'");
    for (const auto& [n, e] : ws.setups)
        if (!named || n == o.name) out.push_back({"setup", n, setup(ws, n), std::nullopt});
    for (const auto& [n, e] : ws.triples)
        if (!named || n == o.name) {
            Target t{"triple", n, {}, ws.triple(n)};
            out.push_back(std::move(t));
        }
    return out;
}

/// Fills t.data from the triple; false (with the failing report) if the laws fail.
inline bool resolve(Target& t, Outcome& oc) {
    if (!t.triple) return true;
    Report laws = check_triple(*t.triple);
    oc.report.merge(laws);
    if (!laws.ok()) return false;
    TripleData d = triple_data(*t.triple);
    t.data = SetupData{d.qv, d.qw, d.delta, d.tau, d.nu_v, d.nu_w};
    return true;
}

inline Run iterate(const Workspace& ws, const Options& o) {
    Run run;
    Workspace outw;
    outw.field = ws.field;
    for (auto& t : targets(ws, o)) {
        Outcome oc{t.kind, t.name};
        detail::guarded(oc, [&] {
            if (!resolve(t, oc)) return;
            const SetupData& s = t.data;
            Report hyp = check_iteration_hypotheses(s.qv, s.qw, s.delta, s.tau);
            oc.report.merge(hyp);
            if (!hyp.ok()) return;
            IterSetup it = build_iterated(s.qv, s.qw, s.delta, s.tau);
            oc.report.merge(it.verification);
            oc.report.merge(check_derived_identities(it.qvw), "A_VW");
            if (t.triple) oc.report.merge(iterate_triple(*t.triple).closed_forms, "closed form");
            oc.info["rank(nabla)"] =
                std::to_string(rank(it.nabla_iter.mat)) + " of " + std::to_string(it.qvw.av().dim());
            outw.add_quadruple(t.name + ".vw", it.qvw);
        });
        run.outcomes.push_back(std::move(oc));
    }
    run.produced = std::move(outw);
    return run;
}

inline Run iterated_preunit(const Workspace& ws, const Options& o) {
    Run run;
    Workspace outw;
    outw.field = ws.field;
    for (auto& t : targets(ws, o)) {
        Outcome oc{t.kind, t.name};
        detail::guarded(oc, [&] {
            if (!resolve(t, oc)) return;
            const SetupData& s = t.data;
            if (!s.nu_v || !s.nu_w)
                throw ParseError(jsonio::at("/setups", t.name), "both quadruples need a preunit");
            IterSetup it = build_iterated(s.qv, s.qw, s.delta, s.tau);
            Report hyp = check_iterated_preunit_hypotheses(it, *s.nu_v, *s.nu_w);
            oc.report.merge(hyp);
            if (!hyp.ok()) return;
            IteratedPreunit ip = wcp::iterated_preunit(it, *s.nu_v, *s.nu_w);
            oc.report.merge(ip.verification);
            if (t.triple) oc.report.merge(iterate_triple(*t.triple).closed_forms, "closed form");
            outw.add_quadruple(t.name + ".vw", it.qvw, ip.nu_vw);
        });
        run.outcomes.push_back(std::move(oc));
    }
    run.produced = std::move(outw);
    return run;
}

inline Run iso(const Workspace& ws, const Options& o) {
    Run run;
    for (auto& t : targets(ws, o)) {
        Outcome oc{t.kind, t.name};
        detail::guarded(oc, [&] {
            if (!resolve(t, oc)) return;
            const SetupData& s = t.data;
            if (!s.nu_v || !s.nu_w)
                throw ParseError(jsonio::at("/setups", t.name), "both quadruples need a preunit");
            IterSetup it = build_iterated(s.qv, s.qw, s.delta, s.tau);
            Report newit = check_newit(it, *s.nu_v, *s.nu_w);
            oc.report.merge(newit);
            if (!newit.ok()) return;
            IsoBundle b = build_embeddings(it, *s.nu_v, *s.nu_w);
            build_omega(b);
            oc.report.merge(b.verification);
            oc.report.merge(verify_monoid_iso(b));
            oc.info["dim"] = b.omega.dom.dim();
        });
        run.outcomes.push_back(std::move(oc));
    }
    return run;
}

inline Run check_wreath(const Workspace& ws, const Options& o) {
    Run run;
    for (const auto& n : detail::pick(ws.wreaths, o.name, "wreaths")) {
        const auto& e = ws.wreaths.at(n);
        const std::string p = jsonio::at("/wreaths", n);
        try {
            run.outcomes.push_back({"wreath", n,
                                    wcp::check_wreath(ws.monoid(e.a, p), ws.monoid(e.b, p), ws.morphism(e.lambda, p),
                                                      ws.morphism(e.tau, p), ws.morphism(e.v, p))});
        } catch (const DimensionError& x) {
            throw ParseError(p, x.what());
        }
    }
    return run;
}

inline Run check_laws(const Workspace& ws, const Options& o, bool weak) {
    Run run;
    for (const auto& n : detail::pick(ws.laws, o.name, "laws")) {
        const auto& e = ws.laws.at(n);
        const std::string p = jsonio::at("/laws", n);
        const MonoidData& a = ws.monoid(e.a, jsonio::at(p, "a"));
        const MonoidData& b = ws.monoid(e.b, jsonio::at(p, "b"));
        const FMor& l = ws.morphism(e.lambda, jsonio::at(p, "lambda"));
        try {
            Outcome oc{"law", n, weak ? check_wdl(a, b, l) : check_distributive_law(a, b, l)};
            if (weak) {
                oc.info["rank(nabla)"] = std::to_string(rank(wdl_nabla(a, b, l).mat)) + " of " +
                                         std::to_string(a.dim() * b.dim());
            }
            run.outcomes.push_back(std::move(oc));
        } catch (const DimensionError& x) {
            throw ParseError(jsonio::at(p, "lambda"), x.what());
        }
    }
    return run;
}

inline Run check_brz(const Workspace& ws, const Options& o) {
    Run run;
    for (const auto& n : detail::pick(ws.brzezinski, o.name, "brzezinski"))
        run.outcomes.push_back({"brzezinski", n, check_brzezinski(ws.brz(n, "/brzezinski"))});
    return run;
}

inline Run check_dp(const Workspace& ws, const Options& o) {
    Run run;
    for (const auto& n : detail::pick(ws.dp, o.name, "dp")) {
        const auto& e = ws.dp.at(n);
        const std::string p = jsonio::at("/dp", n);
        BrzezinskiData bv = ws.brz(e.v, jsonio::at(p, "v"));
        BrzezinskiData bw = ws.brz(e.w, jsonio::at(p, "w"));
        const FMor& tau = ws.morphism(e.tau, jsonio::at(p, "tau"));
        try {
            run.outcomes.push_back({"dp", n, wcp::check_dp(bv, bw, tau)});
        } catch (const DimensionError& x) {
            throw ParseError(jsonio::at(p, "tau"), x.what());
        }
    }
    return run;
}

inline Run split(const Workspace& ws, const Options& o) {
    Run run;
    Workspace outw;
    outw.field = ws.field;
    for (const auto& n : detail::pick(ws.morphisms, o.name, "morphisms")) {
        const FMor& e = ws.morphism(n, "/morphisms");
        if (o.name.empty() && e.dom.dim() != e.cod.dim()) continue;
        Splitting s;
        Outcome oc{"morphism", n, check_splitting(e, &s)};
        if (oc.ok()) {
            oc.info["rank"] = s.rank;
            if (s.rank > 0) {
                FObj img(n + ".image", s.rank);
                outw.add_morphism(n + ".inj", FMor(img, e.cod, s.inj));
                outw.add_morphism(n + ".proj", FMor(e.dom, img, s.proj));
            }
        }
        run.outcomes.push_back(std::move(oc));
    }
    run.produced = std::move(outw);
    return run;
}

inline std::pair<std::size_t, std::size_t> parse_dims(const std::string& s) {
    auto comma = s.find(',');
    try {
        if (comma != std::string::npos) {
            std::size_t pos1 = 0, pos2 = 0;
            const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
            auto x = std::stoul(a, &pos1), y = std::stoul(b, &pos2);
            if (pos1 == a.size() && pos2 == b.size() && x > 0 && y > 0) return {x, y};
        }
    } catch (const std::logic_error&) {
    }
    throw ParseError("--dims", "expected two positive integers 's,t'");
}

inline Run mine(const Options& o) {
    MinerOptions mo;
    auto f = detail::field_flag(o.field.empty() ? "2" : o.field);
    if (f->is_rational()) throw ParseError("--field", "mine-wdl needs a prime field");
    mo.p = f->characteristic();
    std::tie(mo.s, mo.t) = parse_dims(o.dims);
    mo.budget = o.budget;
    mo.seed = o.seed;
    mo.exhaustive = o.exhaustive;
    MineResult res;
    try {
        res = mine_wdl(mo);
    } catch (const std::invalid_argument& e) {
        throw ParseError("--budget", e.what());
    }
    Run run;
    Outcome oc{"search", "GF(" + std::to_string(mo.p) + ")^" + std::to_string(mo.s) + " x GF(" +
                             std::to_string(mo.p) + ")^" + std::to_string(mo.t)};
    Workspace outw;
    outw.field = *f;
    outw.add_monoid(res.a);
    outw.add_monoid(res.b);
    for (std::size_t i = 0; i < res.laws.size(); ++i) {
        const std::string code = std::to_string(res.codes[i]);
        const FMor& l = res.laws[i];
        oc.report.flag("wdl-found", true, "rank(nabla) = " + std::to_string(rank(wdl_nabla(res.a, res.b, l).mat)),
                       code);
        outw.add_morphism("lambda." + code, l);
        outw.laws["law." + code] = {res.a.name(), res.b.name(), "lambda." + code};
        outw.add_quadruple("q." + code, quadruple_from_wdl(res.a, res.b, l), wdl_preunit(res.a, res.b, l));
    }
    oc.info["mode"] = mo.exhaustive ? "exhaustive" : "random";
    oc.info["searched"] = res.searched;
    oc.info["found"] = res.laws.size();
    run.outcomes.push_back(std::move(oc));
    run.produced = std::move(outw);
    return run;
}

} // namespace cmd

inline const std::vector<std::pair<std::string, std::string>>& commands() {
    static const std::vector<std::pair<std::string, std::string>> list = {
        {"check-quadruple", "quadruple axioms and derived identities"},
        {"build-wcp", "crossed product, and its unital form when a preunit is given"},
        {"check-preunit", "preunit system, unital product and round trip"},
        {"check-link", "link conditions of a setup"},
        {"check-twisting", "twisting conditions and sigma conditions of a setup"},
        {"iterate", "iterated crossed product of setups and triples"},
        {"iterated-preunit", "preunit of the iterated crossed product"},
        {"iso", "isomorphism (AxV)xW = Ax(V(x)W)"},
        {"check-wreath", "wreath equations"},
        {"check-dl", "distributive law equations"},
        {"check-wdl", "weak distributive law equations and corollaries"},
        {"check-brz", "unit conditions of Brzezinski data"},
        {"check-dp", "iteration conditions for two Brzezinski data"},
        {"mine-wdl", "search for weak distributive laws with nabla != id"},
        {"split-idempotent", "split idempotent morphisms"}};
    return list;
}

inline Run dispatch(const Options& o) {
    if (o.command == "mine-wdl") return cmd::mine(o);
    Workspace ws = parse_workspace(detail::load_file(o.file), detail::field_flag(o.field));
    const std::string& c = o.command;
    if (c == "check-quadruple") return cmd::check_quadruple(ws, o);
    if (c == "build-wcp") return cmd::build_wcp(ws, o);
    if (c == "check-preunit") return cmd::check_preunit(ws, o);
    if (c == "check-link") return cmd::check_link(ws, o);
    if (c == "check-twisting") return cmd::check_twisting(ws, o);
    if (c == "iterate") return cmd::iterate(ws, o);
    if (c == "iterated-preunit") return cmd::iterated_preunit(ws, o);
    if (c == "iso") return cmd::iso(ws, o);
    if (c == "check-wreath") return cmd::check_wreath(ws, o);
    if (c == "check-dl") return cmd::check_laws(ws, o, false);
    if (c == "check-wdl") return cmd::check_laws(ws, o, true);
    if (c == "check-brz") return cmd::check_brz(ws, o);
    if (c == "check-dp") return cmd::check_dp(ws, o);
    if (c == "split-idempotent") return cmd::split(ws, o);
    throw std::logic_error("unhandled command " + c);
}

/// Exit codes: 0 every check passed, 1 some check failed, 2 malformed input.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact checker for weak crossed products over Q and GF(p)", "wcp"};
    app.require_subcommand(1);
    Options o;
    for (const auto& [name, help] : commands()) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name != "mine-wdl") {
            sub->add_option("file", o.file, "workspace JSON")->required();
            sub->add_option("--name", o.name, "only the entry with this name");
        } else {
            sub->add_option("--dims", o.dims, "dimensions s,t of the two diagonal algebras");
            sub->add_option("--budget", o.budget, "candidates to draw, or the cap on an exhaustive space");
            sub->add_option("--seed", o.seed, "random seed");
            sub->add_flag("--exhaustive", o.exhaustive, "enumerate the whole space");
        }
        sub->add_option("--field", o.field, "field: Q, GF(p) or p (overrides the file)");
        sub->add_flag("--json", o.json, "machine-readable report");
        sub->add_option("--out", o.out, "write produced structures as workspace JSON");
        sub->callback([&o, name = name] { o.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }
    Run result;
    try {
        result = dispatch(o);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (!o.out.empty() && result.produced) {
        std::ofstream f(o.out);
        if (!f) {
            err << "error: cannot write '" << o.out << "'\n";
            return 2;
        }
        f << to_json(*result.produced).dump(2) << "\n";
    }
    if (o.json) out << render_json(o, result).dump(2) << "\n";
    else render_text(out, o, result);
    bool ok = std::all_of(result.outcomes.begin(), result.outcomes.end(), [](const Outcome& oc) { return oc.ok(); });
    return ok ? 0 : 1;
}

} // namespace wcp::cli

#endif
