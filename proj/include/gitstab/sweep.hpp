#pragma once

#include "gitstab/stability.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace gitstab {

// Extreme points of Conv(raw) + O+, found with the LP alone.
std::vector<WeightVector> oracle_vertices(const std::vector<WeightVector>& raw);

// Closed-form corner data of one support pattern checked against the LP oracle.
struct CornerCheck {
    bool vertices_are_raw = true;      // every claimed vertex is a raw weight
    bool vertices_extreme = true;      // ...and not in the corner of the other raw weights
    bool raw_in_vertex_corner = true;  // every raw weight lies in Corner(claimed vertices)
    bool raw_satisfy_facets = true;    // every raw weight satisfies every facet
    bool facets_tight = true;          // min over raw weights of s_I equals c
    bool facets_full_dim = true;       // tight face has dimension N-1
    bool routes_agree = true;          // Hessenberg route == control-matrix route
    bool kinds_ok = true;              // F-2x exactly for strictly upper triangular
    bool ok() const
    {
        return vertices_are_raw && vertices_extreme && raw_in_vertex_corner && raw_satisfy_facets && facets_tight
            && facets_full_dim && routes_agree && kinds_ok;
    }
    std::string describe() const;
};

CornerCheck verify_corner(const Support& s);
// The facet system defines no more than Corner(vertices): its recession cone is O+ and
// every vertex of the system lies in Corner(vertices).
bool facet_system_complete(const CornerPolyhedron& p);

struct CornerSweepReport {
    int N = 0;
    std::size_t matrices = 0;
    std::size_t failures = 0;
    std::size_t distinct_systems = 0;
    std::size_t incomplete_systems = 0;
    std::vector<std::string> notes;
    bool ok() const { return failures == 0 && incomplete_systems == 0; }
};

// All nonzero 0/1 matrices of size N+1.
CornerSweepReport verify_corner_family(int N, Execution exec = Execution::Parallel);

Integer catalan(int k);

struct CensusReport {
    int N = 0;
    std::size_t profiles = 0;
    Integer expected;  // 2 C_{N+1} - 1
    // Filled when the bijection sweep runs (all nonzero 0/1 matrices).
    bool swept = false;
    std::size_t matrices = 0;
    std::size_t realized_profiles = 0;
    std::size_t distinct_polyhedra = 0;
    bool profile_determines_polyhedron = true;
    bool count_ok() const { return Integer(profiles) == expected; }
    bool ok() const
    {
        return count_ok()
            && (!swept || (profile_determines_polyhedron && realized_profiles == distinct_polyhedra));
    }
};

// Polyhedra in the sweep come from oracle_vertices, never from the profile.
CensusReport census(int N, bool sweep, Execution exec = Execution::Parallel);

// Projective representatives (first nonzero = 1) of all nonzero matrices / vectors over GF(p).
std::vector<Matrix> projective_matrices(const Field& f, std::size_t n);
std::vector<Vector> projective_points(const Field& f, std::size_t n);
std::vector<MarkedMap> all_marked_maps(const Field& f, int N, int n);

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int range = 3);
Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng, int range = 3);
Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng, int range = 3);
MarkedMap conjugate(const MarkedMap& mm, const Matrix& A);

struct OracleSweepReport {
    std::size_t instances = 0;
    std::size_t agree = 0;
    std::map<std::string, std::size_t> status_counts;  // by theorem verdict
    std::vector<std::string> mismatches;
    bool ok() const { return agree == instances; }
};

OracleSweepReport compare_with_oracle(const std::vector<MarkedMap>& instances, const Sheaf& sheaf,
                                      Execution exec = Execution::Parallel);

std::string describe(const MarkedMap& mm);

}  // namespace gitstab
