#pragma once

#include "gitstab/stability.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace gitstab {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::json;

struct Instance {
    MarkedMap map;
    Sheaf sheaf;
    Mode mode = Mode::Exact;
};

// {"N", "field": {"kind": "Q"} | {"kind": "gfp", "p"}, "T", "points", "sheaf": {"q", "m"}, "mode"}
// Scalars are integers or "p/q" strings. "m" defaults to all ones, "mode" to EXACT.
Instance parse_instance(const Json& j);
Instance load_instance(const std::string& path);
Json load_json(const std::string& path);

Field parse_field(const Json& j);
FieldElement parse_element(const Field& f, const Json& j);
Vector parse_vector(const Field& f, const Json& j, std::size_t n);
Matrix parse_matrix(const Field& f, const Json& j, std::size_t n);
// A flag as a list of subspaces, each given by a list of spanning vectors.
Flag parse_flag(const Field& f, const Json& j, std::size_t n);
Mode parse_mode(const std::string& s);

Json to_json(const FieldElement& x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const Flag& f);
Json to_json(const Profile& p);
Json to_json(const ControlMatrix& c);
Json to_json(const CornerPolyhedron& p);
Json to_json(const StabilityVerdict& v);

}  // namespace gitstab
