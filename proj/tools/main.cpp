#include "gitstab/examples.hpp"
#include "gitstab/io.hpp"
#include "gitstab/sweep.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

using namespace gitstab;

namespace {

enum Exit { Ok = 0, UnstableExit = 1, InputExit = 2, BudgetExit = 3, MismatchExit = 4 };

struct Options {
    bool json = false;
    std::string mode;
    std::uint64_t budget = 1000000;
    bool fail_on_unstable = false;
    std::uint64_t seed = 1;
};

void emit(const Options& o, const Json& j, const std::string& text)
{
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string entry_list(const std::vector<Entry>& es)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < es.size(); ++k)
        os << (k ? " " : "") << "(" << es[k].row << "," << es[k].col << ")";
    return os.str();
}

// Matrix input: a JSON file with "N" and "M" (or "T"), or --N with --entries "r,c r,c ...".
Support read_support(const std::string& file, int N, const std::string& entries)
{
    if (!file.empty()) {
        Json j = load_json(file);
        if (!j.contains("N"))
            throw InputError("matrix file needs N");
        const int n = j["N"].get<int>();
        const Field f = parse_field(j.value("field", Json()));
        const char* key = j.contains("M") ? "M" : "T";
        if (!j.contains(key))
            throw InputError("matrix file needs M or T");
        return Support::of(parse_matrix(f, j[key], static_cast<std::size_t>(n) + 1));
    }
    if (N < 1)
        throw InputError("give a matrix file or --N with --entries");
    std::vector<Entry> es;
    std::istringstream in(entries);
    std::string tok;
    while (in >> tok) {
        Entry e;
        char comma = 0;
        std::istringstream t(tok);
        if (!(t >> e.row >> comma >> e.col) || comma != ',' || e.row < 1 || e.col < 1 || e.row > N + 1
            || e.col > N + 1)
            throw InputError("bad entry " + tok);
        es.push_back(e);
    }
    return Support::from_entries(N, es);
}

int cmd_profile(const Options& o, const Support& s)
{
    Profile p = profile(s);
    auto piv = pivotal_entries(p);
    ControlMatrix c = control_matrix(s);
    Json j{{"profile", to_json(p)}, {"pivotal_entries", Json::array()}, {"control_matrix", to_json(c)}};
    for (const auto& e : piv)
        j["pivotal_entries"].push_back({e.row, e.col});
    std::ostringstream os;
    os << "profile " << p.word() << " (" << to_string(p.orientation()) << ")\n"
       << "pivotal " << entry_list(piv) << "\n"
       << "control " << to_string(c) << "\n";
    emit(o, j, os.str());
    return Ok;
}

int cmd_polytope(const Options& o, const Support& s)
{
    CornerPolyhedron p = corner_facets(s);
    const bool agree = facets_from_control(s) == p.facets();
    Json j = to_json(p);
    j["routes_agree"] = agree;
    std::ostringstream os;
    os << "vertices";
    for (const auto& v : p.vertices()) {
        os << " (";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << to_string(v[i]);
        os << ")";
    }
    os << "\n";
    for (const auto& f : p.facets())
        os << "facet " << to_string(f) << "\n";
    os << "facet routes " << (agree ? "agree" : "DISAGREE") << "\n";
    emit(o, j, os.str());
    return agree ? Ok : MismatchExit;
}

int cmd_classify(const Options& o, const std::string& file)
{
    Json j = load_json(file);
    if (!j.contains("N") || !j.contains("T") || !j.contains("flag"))
        throw InputError("classify-flag needs N, T and flag");
    const std::size_t dim = j["N"].get<std::size_t>() + 1;
    const Field f = parse_field(j.value("field", Json()));
    Matrix T = parse_matrix(f, j["T"], dim);
    Flag fl = parse_flag(f, j["flag"], dim);
    HessenbergFunction h = hessenberg(T, fl);
    FlagType t = classify_flag(T, fl);
    Json out{{"hessenberg", h.values}, {"type", to_string(t)}};
    std::ostringstream os;
    os << "hessenberg";
    for (int v : h.values)
        os << " " << v;
    os << "\ntype " << to_string(t) << "\n";
    if (j.contains("points")) {
        std::vector<Vector> pts;
        for (const auto& p : j["points"])
            pts.push_back(parse_vector(f, p, dim));
        std::vector<int> m(pts.size(), 1);
        int q = 1;
        if (j.contains("sheaf")) {
            q = j["sheaf"].value("q", 1);
            if (j["sheaf"].contains("m"))
                m = j["sheaf"]["m"].get<std::vector<int>>();
        }
        if (m.size() != pts.size())
            throw InputError("sheaf m must have one weight per point");
        Rational om = omega(pts, m, fl);
        out["omega"] = to_string(om);
        os << "omega " << to_string(om) << "\n";
        if (t != FlagType::None) {
            Rational b = flag_bound(t, q);
            out["bound"] = to_string(b);
            os << "bound " << to_string(b) << "\n";
        }
    }
    emit(o, out, os.str());
    return Ok;
}

// Recompute type and Omega of the witness from scratch.
bool witness_checks(const Instance& in, const StabilityVerdict& v)
{
    if (!v.witness)
        return true;
    const auto& w = *v.witness;
    const Matrix& T = in.map.T.matrix();
    return classify_flag(T, w.flag) == w.type && omega(in.map.points, in.sheaf.m, w.flag) == w.omega
        && flag_bound(w.type, in.sheaf.q) == w.bound;
}

int cmd_stability(const Options& o, const std::string& file)
{
    Instance in = load_instance(file);
    if (!o.mode.empty())
        in.mode = parse_mode(o.mode);
    StabilityVerdict v = check_stability(in.map, in.sheaf, in.mode, o.budget);
    const bool verified = witness_checks(in, v);
    Json j = to_json(v);
    j["witness_verified"] = verified;
    std::ostringstream os;
    os << to_string(v.status) << " (" << to_string(v.mode) << ", " << v.method << ", " << v.flags_examined
       << " flags)\n";
    if (v.witness) {
        os << "witness " << to_string(v.witness->type) << " omega " << to_string(v.witness->omega) << " bound "
           << to_string(v.witness->bound) << "\n";
        os << "flag " << to_json(v.witness->flag).dump() << "\n";
    }
    emit(o, j, os.str());
    if (!verified)
        return MismatchExit;
    if (o.fail_on_unstable && (v.status == Status::Unstable || v.status == Status::UnstableCertified))
        return UnstableExit;
    return Ok;
}

Json sweep_json(const OracleSweepReport& r)
{
    return {{"instances", r.instances}, {"agree", r.agree}, {"status_counts", r.status_counts},
            {"mismatches", r.mismatches}};
}

std::string sweep_text(const OracleSweepReport& r)
{
    std::ostringstream os;
    os << r.agree << "/" << r.instances << " agree";
    for (const auto& [k, n] : r.status_counts)
        os << " " << k << "=" << n;
    os << "\n";
    for (const auto& m : r.mismatches)
        os << "mismatch " << m << "\n";
    return os.str();
}

struct CompareArgs {
    std::string file;
    bool exhaustive = false;
    std::size_t random = 0;
    std::uint32_t p = 2;
    int N = 1;
    int n = 1;
    int q = 1;
};

int cmd_oracle_compare(const Options& o, const CompareArgs& a)
{
    if (!a.file.empty()) {
        Json j = load_json(a.file);
        std::vector<Json> items;
        std::string base;
        if (auto slash = a.file.find_last_of('/'); slash != std::string::npos)
            base = a.file.substr(0, slash + 1);
        if (j.contains("instances")) {
            for (const auto& it : j["instances"])
                items.push_back(it.is_string() ? load_json(base + it.get<std::string>()) : it);
        } else
            items.push_back(j);
        std::vector<Instance> insts;
        for (const auto& it : items)
            insts.push_back(parse_instance(it));
        Json rows = Json::array();
        std::ostringstream os;
        bool all = true;
        for (std::size_t k = 0; k < insts.size(); ++k) {
            const auto& in = insts[k];
            if (!in.map.field().is_finite())
                throw InputError("oracle-compare needs a finite field");
            Status thm = check_stability(in.map, in.sheaf, Mode::Exact, o.budget).status;
            Status orc = hilbert_mumford_oracle(in.map, in.sheaf, OracleBases::AllBases, o.budget * 2).status;
            all = all && thm == orc;
            rows.push_back({{"index", k}, {"theorem", to_string(thm)}, {"oracle", to_string(orc)}, {"agree", thm == orc}});
            os << k << " theorem " << to_string(thm) << " oracle " << to_string(orc) << (thm == orc ? "" : "  MISMATCH")
               << "\n";
        }
        emit(o, Json{{"results", rows}, {"agree", all}}, os.str());
        return all ? Ok : MismatchExit;
    }
    const Field f = [&] {
        try {
            return Field::prime(a.p);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    const Sheaf sheaf = Sheaf::uniform(a.q, static_cast<std::size_t>(a.n));
    std::vector<MarkedMap> insts;
    if (a.exhaustive) {
        insts = all_marked_maps(f, a.N, a.n);
    } else if (a.random > 0) {
        std::mt19937_64 rng(o.seed);
        const std::size_t dim = static_cast<std::size_t>(a.N) + 1;
        for (std::size_t k = 0; k < a.random; ++k) {
            Matrix T;
            do
                T = random_matrix(f, dim, dim, rng);
            while (T.is_zero());
            std::vector<Vector> pts;
            for (int i = 0; i < a.n; ++i)
                pts.push_back(random_vector(f, dim, rng));
            insts.emplace_back(ProjectiveMatrix(T), pts);
        }
    } else
        throw InputError("oracle-compare needs an instance file, --exhaustive or --random K");
    OracleSweepReport r = compare_with_oracle(insts, sheaf);
    Json j = sweep_json(r);
    j["field_p"] = a.p;
    j["N"] = a.N;
    j["n"] = a.n;
    j["q"] = a.q;
    if (!a.exhaustive)
        j["seed"] = o.seed;
    std::string text = sweep_text(r);
    if (!a.exhaustive)
        text = "seed " + std::to_string(o.seed) + "\n" + text;
    emit(o, j, text);
    return r.ok() ? Ok : MismatchExit;
}

int cmd_census(const Options& o, int N, bool sweep)
{
    if (N < 1)
        throw InputError("census needs N >= 1");
    CensusReport r = census(N, sweep && N <= 2);
    Json j{{"N", N}, {"profiles", r.profiles}, {"expected", r.expected.str()}, {"count_ok", r.count_ok()}};
    std::ostringstream os;
    os << r.profiles << " profiles (expected " << r.expected << ")\n";
    if (r.swept) {
        j["matrices"] = r.matrices;
        j["realized_profiles"] = r.realized_profiles;
        j["distinct_polyhedra"] = r.distinct_polyhedra;
        j["profile_determines_polyhedron"] = r.profile_determines_polyhedron;
        os << r.matrices << " matrices, " << r.realized_profiles << " realized profiles, " << r.distinct_polyhedra
           << " distinct corner polyhedra, profile determines polyhedron: "
           << (r.profile_determines_polyhedron ? "yes" : "no") << "\n";
    }
    emit(o, j, os.str());
    return r.ok() ? Ok : MismatchExit;
}

int cmd_normal_form(const Options& o, const std::string& file)
{
    Instance in = load_instance(file);
    Json j;
    std::ostringstream os;
    if (in.map.points.size() == 1) {
        auto c = companion_form(in.map.T.matrix(), in.map.points.front());
        j["companion"] = to_json(c);
        os << "companion " << to_json(c).dump() << "\n";
    } else {
        ModuliCoordinates mc = moduli_coordinates(in.map);
        j["eigenvalues"] = to_json(mc.eigenvalues);
        Json pts = Json::array();
        for (const auto& p : mc.points)
            pts.push_back(to_json(p));
        j["points"] = pts;
        os << "eigenvalues " << j["eigenvalues"].dump() << "\npoints " << pts.dump() << "\n";
    }
    emit(o, j, os.str());
    return Ok;
}

int cmd_verify_examples(const Options& o)
{
    Json rows = Json::array();
    std::ostringstream os;
    bool all = true;
    for (const auto& ex : golden_examples()) {
        ExampleCheck c = check_example(ex);
        all = all && c.ok();
        rows.push_back({{"name", c.name},
                        {"profile", c.profile_ok},
                        {"control", c.control_ok},
                        {"facets", c.facets_ok},
                        {"diff", c.diff}});
        os << (c.ok() ? "match    " : "MISMATCH ") << c.name << "\n";
        for (const auto& d : c.diff)
            os << "  " << d << "\n";
    }
    emit(o, Json{{"examples", rows}, {"all_match", all}}, os.str());
    return all ? Ok : MismatchExit;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"GIT stability of linear maps with marked points"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "JSON report");
    app.add_option("--mode", o.mode, "exact or search (overrides the instance)");
    app.add_option("--budget", o.budget, "flag/basis enumeration budget");
    app.add_flag("--fail-on-unstable", o.fail_on_unstable, "exit 1 on an unstable verdict");
    app.add_option("--seed", o.seed, "seed for randomized sweeps");

    std::string file, entries;
    int N = 0;
    auto* prof = app.add_subcommand("profile", "profile, pivotal entries and control matrix");
    auto* poly = app.add_subcommand("polytope", "vertices and facets of the corner polyhedron");
    for (auto* sc : {prof, poly}) {
        sc->add_option("file", file, "JSON with N and M");
        sc->add_option("--N", N);
        sc->add_option("--entries", entries, "nonzero entries as \"r,c r,c ...\"");
    }
    auto* cls = app.add_subcommand("classify-flag", "Hessenberg function and flag type");
    cls->add_option("file", file)->required();
    auto* stab = app.add_subcommand("stability", "stability verdict with witness");
    stab->add_option("file", file)->required();
    CompareArgs ca;
    auto* cmp = app.add_subcommand("oracle-compare", "theorem vs Hilbert-Mumford oracle");
    cmp->add_option("file", ca.file, "instance or manifest {\"instances\": [...]}");
    cmp->add_flag("--exhaustive", ca.exhaustive);
    cmp->add_option("--random", ca.random, "number of seeded random instances");
    cmp->add_option("--p", ca.p);
    cmp->add_option("--N", ca.N);
    cmp->add_option("--n", ca.n);
    cmp->add_option("--q", ca.q);
    bool sweep = false;
    auto* cen = app.add_subcommand("census", "profile count and bijection check");
    cen->add_option("N", N)->required();
    cen->add_flag("--sweep", sweep, "also check the profile/polyhedron bijection (N <= 2)");
    auto* nf = app.add_subcommand("normal-form", "companion or moduli coordinates");
    nf->add_option("file", file)->required();
    auto* ver = app.add_subcommand("verify-paper-examples", "replay the worked corner-polyhedron examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : InputExit;
    }

    try {
        if (*prof)
            return cmd_profile(o, read_support(file, N, entries));
        if (*poly)
            return cmd_polytope(o, read_support(file, N, entries));
        if (*cls)
            return cmd_classify(o, file);
        if (*stab)
            return cmd_stability(o, file);
        if (*cmp)
            return cmd_oracle_compare(o, ca);
        if (*cen)
            return cmd_census(o, N, sweep);
        if (*nf)
            return cmd_normal_form(o, file);
        if (*ver)
            return cmd_verify_examples(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return BudgetExit;
    } catch (const ExactUnavailable& e) {
        std::cerr << "exact mode unavailable: " << e.what() << "\n";
        return InputExit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return InputExit;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return InputExit;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return InputExit;
    }
    return Ok;
}
