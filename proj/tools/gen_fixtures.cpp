// Writes the standard fixtures as workspace JSON files into a directory.
#include <wcp/wcp.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace wcp;

namespace {

void write(const std::filesystem::path& dir, const std::string& file, const Workspace& ws) {
    std::ofstream out(dir / file);
    out << to_json(ws).dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write " + (dir / file).string());
}

Workspace triple_workspace(const std::string& name, const LawTriple& x) {
    Workspace ws;
    ws.field = x.s.field();
    for (const auto* m : {&x.s, &x.t, &x.d}) ws.add_monoid(*m);
    ws.add_morphism("l1", x.l1);
    ws.add_morphism("l2", x.l2);
    ws.add_morphism("l3", x.l3);
    ws.triples[name] = {x.weak, x.s.name(), x.t.name(), x.d.name(), "l1", "l2", "l3"};
    ws.laws["S-T"] = {x.s.name(), x.t.name(), "l1"};
    ws.laws["T-D"] = {x.t.name(), x.d.name(), "l2"};
    ws.laws["S-D"] = {x.s.name(), x.d.name(), "l3"};
    return ws;
}

Workspace brz_workspace(const std::string& name, const Fixture& fx) {
    Workspace ws;
    ws.field = fx.data.qv.field();
    ws.add_quadruple("qv", fx.data.qv, fx.data.nu_v);
    ws.add_quadruple("qw", fx.data.qw, fx.data.nu_w);
    ws.add_morphism("delta", fx.data.delta);
    ws.add_morphism("tau", fx.data.tau);
    ws.add_morphism("eta_V", fx.brz_v->eta_v);
    ws.add_morphism("eta_W", fx.brz_w->eta_v);
    ws.setups[name] = {"qv", "qw", "delta", "tau"};
    ws.brzezinski["bv"] = {"qv", "eta_V"};
    ws.brzezinski["bw"] = {"qw", "eta_W"};
    ws.dp["dp-" + name] = {"bv", "bw", "tau"};
    return ws;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures DIR\n";
        return 2;
    }
    std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    write(dir, "flip_triple.json", triple_workspace("flip", flip_triple(Field::rationals())));
    write(dir, "flip_triple_gf3.json", triple_workspace("flip", flip_triple(Field::prime(3))));
    write(dir, "quantum_triple.json", triple_workspace("quantum", quantum_triple()));
    write(dir, "mined_wdl_triple.json", triple_workspace("mined", mined_wdl_triple().triple));

    Fixture skew = skew_double();
    write(dir, "skew_group.json", brz_workspace("double", skew));
    write(dir, "dp_cocycle.json", brz_workspace("cocycle", dp_cocycle()));

    // sigma of the skew fixture with the first single-entry change that breaks the cocycle condition
    Workspace bad;
    bad.field = skew.data.qv.field();
    const Quadruple& q = skew.data.qv;
    for (std::size_t k = 0; k < q.sigma.mat.rows() * q.sigma.mat.cols(); ++k) {
        FMor sigma = q.sigma;
        Scalar& e = sigma.mat(k / sigma.mat.cols(), k % sigma.mat.cols());
        e = e + Scalar(bad.field, 1);
        Quadruple c(q.algebra, q.v, q.psi, sigma);
        if (!check_cocycle(c).ok()) {
            bad.add_quadruple("qv", c, skew.data.nu_v);
            break;
        }
    }
    write(dir, "corrupted.json", bad);

    // a wreath from a distributive law: tau = eta (x) eta, v = eta (x) mu
    LawTriple qt = quantum_triple();
    Workspace wr;
    wr.field = qt.s.field();
    wr.add_monoid(qt.s);
    wr.add_monoid(qt.t);
    wr.add_morphism("lambda", qt.l1);
    wr.add_morphism("tau", tensor(qt.s.unit, qt.t.unit));
    wr.add_morphism("v", tensor(qt.s.unit, qt.t.mul));
    wr.wreaths["quantum"] = {"S", "T", "lambda", "tau", "v"};
    write(dir, "wreath.json", wr);

    Workspace idem;
    idem.field = Field::rationals();
    idem.add_morphism("E", FMor(FObj("X", 2), FObj("X", 2), Mat::of(Field::rationals(), {{1, 1}, {0, 0}})));
    write(dir, "idempotent.json", idem);
    return 0;
}
