#pragma once

#include "gitstab/polyhedron.hpp"

#include <string>
#include <vector>

namespace gitstab {

// A worked corner-polyhedron example with its reference profile, control matrix and facet list.
struct GoldenExample {
    std::string name;
    Support support;
    std::string profile_word;
    ControlMatrix control;
    std::vector<Facet> facets;
};

std::vector<GoldenExample> golden_examples();

struct ExampleCheck {
    std::string name;
    bool profile_ok = false;
    bool control_ok = false;
    bool facets_ok = false;
    std::vector<std::string> diff;
    bool ok() const { return profile_ok && control_ok && facets_ok; }
};

ExampleCheck check_example(const GoldenExample& ex);

std::string to_string(const Facet& f);
std::string to_string(const ControlMatrix& c);

}  // namespace gitstab
