#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectra/matrix_spectra.hpp"
#include "spectra/parse.hpp"
#include "spectra/variety.hpp"
#include "spectra/verify.hpp"

using json = nlohmann::ordered_json;
using namespace spectra;

namespace {

struct Problem {
    std::string path;
    std::string digest;
    FieldSpec field;
    RingPtr ring;                       // set for ideal input
    std::vector<MultiPoly> gens;
    std::optional<MatrixTuple> tuple;
    std::vector<AffinePoint> points;
    std::optional<std::uint32_t> r_max;
    std::optional<std::uint64_t> seed;
};

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

FieldSpec parse_field(const std::string& text) {
    if (text.empty() || text == "q" || text == "Q" || text == "rational" || text == "0")
        return FieldSpec::rationals();
    std::uint64_t p = std::stoull(text);
    return FieldSpec::prime_field(p);
}

MonomialOrder parse_order(const std::string& text) {
    if (text.empty() || text == "grevlex") return MonomialOrder::grevlex();
    if (text == "lex") return MonomialOrder::lex();
    fail(ErrorCode::InvalidInput, "unknown order: " + text);
}

AffinePoint parse_point(const FieldSpec& field, const std::string& text) {
    AffinePoint a;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) a.coords.push_back(Scalar::parse(field, part));
    return a;
}

Problem load_problem(const std::string& path, const std::string& field_flag) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open problem file: " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    json j;
    try {
        j = json::parse(data);
    } catch (const std::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("problem file is not valid JSON: ") + e.what());
    }

    Problem prob;
    prob.path = path;
    prob.digest = fnv1a_hex(data);
    prob.field = j.contains("field") ? parse_field(j["field"].get<std::string>())
                                     : parse_field(field_flag);

    if (j.contains("ideal") == j.contains("tuple"))
        fail(ErrorCode::InvalidInput, "problem file needs exactly one of \"ideal\" or \"tuple\"");

    std::vector<std::string> vars;
    if (j.contains("vars"))
        for (auto& v : j["vars"]) vars.push_back(v.get<std::string>());

    if (j.contains("ideal")) {
        if (vars.empty()) fail(ErrorCode::InvalidInput, "ideal input needs \"vars\"");
        prob.ring = make_ring(prob.field, vars);
        for (auto& s : j["ideal"]) prob.gens.push_back(parse_poly(s.get<std::string>(), prob.ring));
    } else {
        auto& t = j["tuple"];
        std::size_t dim = t.at("dim").get<std::size_t>();
        std::vector<Matrix> mats;
        for (auto& mj : t.at("matrices")) {
            Matrix m(prob.field, dim, dim);
            if (mj.size() != dim) fail(ErrorCode::InvalidInput, "tuple matrix is not dim x dim");
            for (std::size_t r = 0; r < dim; ++r) {
                if (mj[r].size() != dim)
                    fail(ErrorCode::InvalidInput, "tuple matrix is not dim x dim");
                for (std::size_t c = 0; c < dim; ++c)
                    m.at(r, c) = Scalar::parse(prob.field, mj[r][c].get<std::string>());
            }
            mats.push_back(std::move(m));
        }
        prob.tuple.emplace(prob.field, dim, std::move(mats));
    }

    if (j.contains("points"))
        for (auto& p : j["points"]) prob.points.push_back(parse_point(prob.field, p.get<std::string>()));
    if (j.contains("r_max")) prob.r_max = j["r_max"].get<std::uint32_t>();
    if (j.contains("seed")) prob.seed = j["seed"].get<std::uint64_t>();
    return prob;
}

json point_json(const AffinePoint& a) {
    json arr = json::array();
    for (auto& c : a.coords) arr.push_back(c.str());
    return arr;
}

json points_json(const std::vector<AffinePoint>& pts) {
    json arr = json::array();
    for (auto& p : pts) arr.push_back(point_json(p));
    return arr;
}

json fitted_json(const std::optional<NumericalPolynomial>& fit) {
    if (!fit) return nullptr;
    json out;
    out["binomial_coeffs"] = json::array();
    for (auto& c : fit->coeffs) out["binomial_coeffs"].push_back(c.get_str());
    out["degree"] = fit->degree();
    out["display"] = fit->str();
    return out;
}

struct Options {
    std::string field_flag = "q";
    std::string order_flag = "grevlex";
    std::uint32_t rmax = 0;
    std::uint64_t seed = 1;
    std::size_t cap = 0;
    bool pretty = false;
};

json make_report(const std::string& command, const Problem* prob) {
    json rep;
    rep["command"] = command;
    if (prob) {
        rep["input"] = prob->path;
        rep["digest"] = prob->digest;
        rep["field"] = prob->field.name();
    }
    rep["outputs"] = json::object();
    rep["diagnostics"] = json::array();
    return rep;
}

AffinePoint resolve_point(const Problem& prob, const std::string& point_flag,
                          std::size_t expected_dim) {
    AffinePoint a;
    if (!point_flag.empty()) a = parse_point(prob.field, point_flag);
    else if (!prob.points.empty()) a = prob.points.front();
    else fail(ErrorCode::InvalidInput, "no point given (use --point or \"points\" in the file)");
    if (a.dim() != expected_dim)
        fail(ErrorCode::InvalidInput, "point dimension does not match the problem");
    return a;
}

void emit(const json& rep, bool pretty) {
    if (pretty) std::cout << rep.dump(2) << "\n";
    else std::cout << rep.dump() << "\n";
}

int run_gb(const Problem& prob, const Options& opt) {
    if (!prob.ring) fail(ErrorCode::InvalidInput, "gb needs an ideal input");
    Ideal I(prob.ring, prob.gens);
    json rep = make_report("gb", &prob);
    json basis = json::array();
    for (auto& g : I.groebner(parse_order(opt.order_flag))) basis.push_back(g.str());
    rep["outputs"]["order"] = opt.order_flag.empty() ? "grevlex" : opt.order_flag;
    rep["outputs"]["basis"] = basis;
    emit(rep, opt.pretty);
    return 0;
}

int run_homology(const Problem& prob, const Options& opt, const std::string& point_flag) {
    json rep = make_report("homology", &prob);
    if (prob.tuple) {
        AffinePoint a = resolve_point(prob, point_flag, prob.tuple->n);
        HomologyReport h = homology_dims(build_koszul(*prob.tuple, a));
        rep["outputs"]["point"] = point_json(a);
        rep["outputs"]["dims"] = h.d;
        rep["outputs"]["index"] = h.index;
    } else {
        AffinePoint a = resolve_point(prob, point_flag, prob.ring->nvars());
        CyclicModule R{Ideal(prob.ring, prob.gens)};
        TorReport t = tor_dims_at_point(R, a, opt.cap);
        rep["outputs"]["point"] = point_json(a);
        rep["outputs"]["dims"] = t.rep.d;
        rep["outputs"]["index"] = t.rep.index;
        rep["outputs"]["on_variety"] = t.on_variety;
        if (!t.on_variety)
            rep["diagnostics"].push_back("point is off the variety: resolvent point, all dims zero");
    }
    emit(rep, opt.pretty);
    return 0;
}

int run_spectrum(const Problem& prob, const Options& opt, const std::string& point_flag,
                 bool point_mode) {
    json rep = make_report(point_mode ? "point-spectrum" : "spectrum", &prob);
    if (prob.tuple) {
        SpectrumSet s = point_mode ? point_spectrum(*prob.tuple) : taylor_spectrum(*prob.tuple);
        rep["outputs"]["points"] = points_json(s.points);
        rep["outputs"]["complete"] = s.complete;
        if (!s.diagnostic.empty()) rep["diagnostics"].push_back(s.diagnostic);
    } else {
        AffinePoint a = resolve_point(prob, point_flag, prob.ring->nvars());
        CyclicModule R{Ideal(prob.ring, prob.gens)};
        bool member = point_mode ? point_spectrum_membership(R, a)
                                 : point_on_variety(R.ideal, a);
        rep["outputs"]["point"] = point_json(a);
        rep["outputs"]["member"] = member;
    }
    emit(rep, opt.pretty);
    return 0;
}

int run_samuel(const Problem& prob, const Options& opt, const std::string& point_flag) {
    if (!prob.ring) fail(ErrorCode::InvalidInput, "samuel needs an ideal input");
    AffinePoint a = resolve_point(prob, point_flag, prob.ring->nvars());
    std::uint32_t rmax = opt.rmax ? opt.rmax
                                  : prob.r_max ? *prob.r_max
                                               : static_cast<std::uint32_t>(prob.ring->nvars()) + 6;
    CyclicModule R{Ideal(prob.ring, prob.gens)};
    SamuelTable t = samuel_values(R, a, rmax);
    json rep = make_report("samuel", &prob);
    rep["outputs"]["point"] = point_json(a);
    rep["outputs"]["values"] = t.values;
    rep["outputs"]["fitted"] = fitted_json(t.fitted);
    if (!t.fitted) rep["diagnostics"].push_back("values not stabilized at this r_max");
    emit(rep, opt.pretty);
    return 0;
}

int run_torpoly(const Problem& prob, const Options& opt, const std::string& point_flag) {
    if (!prob.ring) fail(ErrorCode::InvalidInput, "torpoly needs an ideal input");
    AffinePoint a = resolve_point(prob, point_flag, prob.ring->nvars());
    std::size_t n = prob.ring->nvars();
    std::uint32_t rmax = opt.rmax ? opt.rmax
                                  : prob.r_max ? *prob.r_max : static_cast<std::uint32_t>(n) + 4;
    CyclicModule R{Ideal(prob.ring, prob.gens)};
    TorPolyTable t = tor_polynomial(R, a, rmax);
    SamuelTable s = samuel_values(R, a, rmax);
    json rep = make_report("torpoly", &prob);
    rep["outputs"]["point"] = point_json(a);
    rep["outputs"]["p"] = t.p;
    rep["outputs"]["tor_dims"] = t.tor_dims;
    rep["outputs"]["samuel"] = s.values;
    rep["outputs"]["fitted"] = fitted_json(t.fitted);
    json infl = json::array();
    for (std::uint32_t r = 1; r <= rmax; ++r) infl.push_back(-s.values[r - 1] + t.p[r - 1]);
    rep["outputs"]["inflated_index"] = infl;
    emit(rep, opt.pretty);
    return 0;
}

int run_serre(const Problem& prob, const Options& opt, const std::string& point_flag) {
    if (!prob.ring) fail(ErrorCode::InvalidInput, "serre needs an ideal input");
    AffinePoint a = resolve_point(prob, point_flag, prob.ring->nvars());
    CyclicModule R{Ideal(prob.ring, prob.gens)};
    MultiplicityReport m = serre_check(R, a, opt.rmax);
    json rep = make_report("serre", &prob);
    rep["outputs"]["point"] = point_json(a);
    rep["outputs"]["krull_dim"] = m.dim_d;
    rep["outputs"]["e"] = m.e.get_str();
    rep["outputs"]["index"] = m.index_at_point;
    rep["outputs"]["consistent"] = m.serre_consistent;
    rep["outputs"]["samuel_fit"] = fitted_json(m.samuel_fit);
    emit(rep, opt.pretty);
    return m.serre_consistent ? 0 : 1;
}

int run_h1bound(const Problem& prob, const Options& opt, const std::string& point_flag) {
    if (!prob.ring) fail(ErrorCode::InvalidInput, "h1bound needs an ideal input");
    AffinePoint a = resolve_point(prob, point_flag, prob.ring->nvars());
    MinimalGeneratorProfile p = h1_lower_bound(prob.gens, a);
    json rep = make_report("h1bound", &prob);
    rep["outputs"]["point"] = point_json(a);
    json mj = json::array();
    for (auto& row : p.m) {
        json r = json::array();
        for (auto& v : row) r.push_back(v ? json(*v) : json(nullptr));
        mj.push_back(r);
    }
    rep["outputs"]["m"] = mj;
    json mins = json::array();
    for (auto& v : p.m_min) mins.push_back(v ? json(*v) : json(nullptr));
    rep["outputs"]["m_min"] = mins;
    rep["outputs"]["S"] = p.S;
    json vj = json::array();
    for (std::size_t j = 0; j < p.v.cols(); ++j) {
        json col = json::array();
        for (std::size_t i = 0; i < p.v.rows(); ++i) col.push_back(p.v.at(i, j).str());
        vj.push_back(col);
    }
    rep["outputs"]["v"] = vj;
    rep["outputs"]["t"] = p.t;
    rep["outputs"]["jacobian_rank"] = jacobian_rank(prob.gens, a);
    emit(rep, opt.pretty);
    return 0;
}

int run_verify_cmd(const std::string& suite, const Options& opt, std::size_t count) {
    VerifyResult res = run_verify_suite(suite, opt.seed, count);
    json rep = make_report("verify", nullptr);
    rep["outputs"]["suite"] = res.suite;
    rep["outputs"]["seed"] = res.seed;
    rep["outputs"]["count"] = res.count;
    rep["outputs"]["passed"] = res.passed;
    rep["outputs"]["ok"] = res.ok();
    for (auto& f : res.failures) rep["diagnostics"].push_back(f);
    emit(rep, opt.pretty);
    return res.ok() ? 0 : 1;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::SpectrumNotSplit:
        case ErrorCode::CharTwoUnsupported:
            return 3;
        case ErrorCode::CapExceeded:
        case ErrorCode::NotStabilized:
            return 4;
        default:
            return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Koszul homology, joint spectra and multiplicities for commuting tuples"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--field", opt.field_flag, "coefficient field: q (rationals) or a prime");
    app.add_option("--order", opt.order_flag, "monomial order: grevlex or lex");
    app.add_option("--rmax", opt.rmax, "table length for samuel/torpoly/serre");
    app.add_option("--seed", opt.seed, "seed for randomized verify suites");
    app.add_option("--cap", opt.cap, "free resolution length cap (0 = n+3)");
    app.add_flag("--pretty", opt.pretty, "indent the JSON report");

    std::string file, point_flag, suite;
    std::size_t count = 25;

    auto add_file_cmd = [&](const std::string& name, const std::string& desc, bool with_point) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("file", file, "problem file (JSON)")->required();
        if (with_point) c->add_option("--point", point_flag, "comma-separated coordinates");
        return c;
    };

    CLI::App* c_gb = add_file_cmd("gb", "reduced Groebner basis of the ideal", false);
    CLI::App* c_hom = add_file_cmd("homology", "Koszul homology dimensions at a point", true);
    CLI::App* c_spec = add_file_cmd("spectrum", "Taylor spectrum / variety membership", true);
    CLI::App* c_pspec = add_file_cmd("point-spectrum", "joint eigenvalues / isolated points", true);
    CLI::App* c_sam = add_file_cmd("samuel", "Samuel values and fitted polynomial", true);
    CLI::App* c_tor = add_file_cmd("torpoly", "Tor-polynomial table and inflated indices", true);
    CLI::App* c_serre = add_file_cmd("serre", "Serre multiplicity consistency check", true);
    CLI::App* c_h1 = add_file_cmd("h1bound", "minimal-generator lower bound for H1", true);

    CLI::App* c_verify = app.add_subcommand("verify", "run a property suite");
    c_verify->add_option("suite", suite, "smt|projection|cone|les|annihilation|serre|dh1|crosscheck")
        ->required();
    c_verify->add_option("--count", count, "number of instances");

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    try {
        int rc = 0;
        if (c_verify->parsed()) {
            rc = run_verify_cmd(suite, opt, count);
        } else {
            Problem prob = load_problem(file, opt.field_flag);
            if (prob.seed) opt.seed = *prob.seed;
            if (c_gb->parsed()) rc = run_gb(prob, opt);
            else if (c_hom->parsed()) rc = run_homology(prob, opt, point_flag);
            else if (c_spec->parsed()) rc = run_spectrum(prob, opt, point_flag, false);
            else if (c_pspec->parsed()) rc = run_spectrum(prob, opt, point_flag, true);
            else if (c_sam->parsed()) rc = run_samuel(prob, opt, point_flag);
            else if (c_tor->parsed()) rc = run_torpoly(prob, opt, point_flag);
            else if (c_serre->parsed()) rc = run_serre(prob, opt, point_flag);
            else if (c_h1->parsed()) rc = run_h1bound(prob, opt, point_flag);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        std::cerr << "elapsed_ms=" << ms << "\n";
        return rc;
    } catch (const Error& e) {
        json err;
        err["error"] = e.what();
        std::cout << err.dump() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cout << err.dump() << "\n";
        return 2;
    }
}
