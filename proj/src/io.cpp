#include "gitstab/io.hpp"

#include <fstream>

namespace gitstab {

Json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Field parse_field(const Json& j)
{
    if (j.is_null())
        return Field::rationals();
    const std::string kind = j.value("kind", "Q");
    if (kind == "Q")
        return Field::rationals();
    if (kind == "gfp" || kind == "GF") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw InputError("gfp field needs a prime p");
        try {
            return Field::prime(j["p"].get<std::uint32_t>());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    throw InputError("unknown field kind " + kind);
}

FieldElement parse_element(const Field& f, const Json& j)
{
    Rational r;
    if (j.is_number_integer())
        r = Rational(j.get<long long>());
    else if (j.is_string()) {
        try {
            r = parse_rational(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError("bad scalar " + j.dump());
        }
    } else
        throw InputError("scalar must be an integer or a \"p/q\" string, got " + j.dump());
    try {
        return f.from_rational(r);
    } catch (const std::exception& e) {
        throw InputError(std::string("scalar ") + j.dump() + ": " + e.what());
    }
}

Vector parse_vector(const Field& f, const Json& j, std::size_t n)
{
    if (!j.is_array() || j.size() != n)
        throw InputError("expected a vector of length " + std::to_string(n) + ", got " + j.dump());
    Vector v;
    for (const auto& x : j)
        v.push_back(parse_element(f, x));
    return v;
}

Matrix parse_matrix(const Field& f, const Json& j, std::size_t n)
{
    if (!j.is_array() || j.size() != n)
        throw InputError("expected " + std::to_string(n) + " matrix rows");
    std::vector<Vector> rows;
    for (const auto& r : j)
        rows.push_back(parse_vector(f, r, n));
    return Matrix::from_rows(f, n, rows);
}

Flag parse_flag(const Field& f, const Json& j, std::size_t n)
{
    if (!j.is_array() || j.empty())
        throw InputError("flag must be a nonempty list of subspaces");
    std::vector<Subspace> spaces;
    for (const auto& s : j) {
        if (!s.is_array())
            throw InputError("subspace must be a list of vectors");
        std::vector<Vector> vs;
        for (const auto& v : s)
            vs.push_back(parse_vector(f, v, n));
        spaces.push_back(span(f, vs, n));
    }
    try {
        return Flag(std::move(spaces));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Mode parse_mode(const std::string& s)
{
    if (s == "EXACT" || s == "exact")
        return Mode::Exact;
    if (s == "SEARCH" || s == "search")
        return Mode::Search;
    throw InputError("mode must be EXACT or SEARCH");
}

Instance parse_instance(const Json& j)
{
    try {
        if (!j.is_object() || !j.contains("N") || !j.contains("T") || !j.contains("points"))
            throw InputError("instance needs N, T and points");
        const int N = j["N"].get<int>();
        if (N < 1)
            throw InputError("N must be at least 1");
        const std::size_t dim = static_cast<std::size_t>(N) + 1;
        const Field f = parse_field(j.value("field", Json()));
        Matrix T = parse_matrix(f, j["T"], dim);
        std::vector<Vector> pts;
        for (const auto& p : j["points"])
            pts.push_back(parse_vector(f, p, dim));
        if (pts.empty())
            throw InputError("at least one marked point is required");
        int q = 1;
        std::vector<int> m(pts.size(), 1);
        if (j.contains("sheaf")) {
            const auto& s = j["sheaf"];
            q = s.value("q", 1);
            if (s.contains("m"))
                m = s["m"].get<std::vector<int>>();
        }
        if (m.size() != pts.size())
            throw InputError("sheaf m must have one weight per point");
        Instance inst{MarkedMap(ProjectiveMatrix(std::move(T)), std::move(pts)), Sheaf(q, std::move(m)),
                      parse_mode(j.value("mode", std::string("EXACT")))};
        return inst;
    } catch (const InputError&) {
        throw;
    } catch (const Json::exception& e) {
        throw InputError(e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Instance load_instance(const std::string& path) { return parse_instance(load_json(path)); }

Json to_json(const FieldElement& x) { return x.to_string(); }

Json to_json(const Vector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

Json to_json(const Matrix& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const Subspace& s)
{
    Json a = Json::array();
    for (const auto& v : s.vectors())
        a.push_back(to_json(v));
    return a;
}

Json to_json(const Flag& f)
{
    Json a = Json::array();
    for (const auto& s : f.spaces())
        a.push_back(to_json(s));
    return a;
}

Json to_json(const Profile& p)
{
    return {{"word", p.word()}, {"orientation", to_string(p.orientation())}, {"down_columns", p.down_columns()}};
}

Json to_json(const ControlMatrix& c) { return {{"rows", c.n_rows}, {"columns", c.columns}}; }

Json to_json(const CornerPolyhedron& p)
{
    Json verts = Json::array();
    for (const auto& v : p.vertices()) {
        Json a = Json::array();
        for (const auto& x : v)
            a.push_back(to_string(x));
        verts.push_back(a);
    }
    Json facets = Json::array();
    for (const auto& f : p.facets())
        facets.push_back({{"I", f.I}, {"c", to_string(f.c)}, {"kind", to_string(f.kind)}});
    return {{"N", p.dim()}, {"vertices", verts}, {"facets", facets}};
}

Json to_json(const StabilityVerdict& v)
{
    Json j{{"status", to_string(v.status)},
           {"mode", to_string(v.mode)},
           {"method", v.method},
           {"flags_examined", v.flags_examined}};
    if (v.witness) {
        j["witness"] = {{"flag", to_json(v.witness->flag)},
                        {"type", to_string(v.witness->type)},
                        {"omega", to_string(v.witness->omega)},
                        {"bound", to_string(v.witness->bound)}};
    } else
        j["witness"] = nullptr;
    return j;
}

}  // namespace gitstab
