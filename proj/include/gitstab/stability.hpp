#pragma once

#include "gitstab/flag.hpp"
#include "gitstab/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gitstab {

// Nonzero square matrix up to scale. Over Q the stored representative has
// first nonzero entry (row-major) equal to 1.
class ProjectiveMatrix {
public:
    ProjectiveMatrix() = default;
    explicit ProjectiveMatrix(Matrix m);

    const Matrix& matrix() const { return m_; }
    int N() const { return static_cast<int>(m_.rows()) - 1; }
    const Field& field() const { return m_.field(); }
    bool is_scalar() const;

    friend bool operator==(const ProjectiveMatrix& a, const ProjectiveMatrix& b);

private:
    Matrix m_;
};

struct MarkedMap {
    ProjectiveMatrix T;
    std::vector<Vector> points;

    MarkedMap() = default;
    MarkedMap(ProjectiveMatrix t, std::vector<Vector> pts);
    int N() const { return T.N(); }
    const Field& field() const { return T.field(); }
};

struct Sheaf {
    int q = 1;
    std::vector<int> m;

    Sheaf() = default;
    Sheaf(int q_, std::vector<int> m_);
    static Sheaf uniform(int q, std::size_t n) { return Sheaf(q, std::vector<int>(n, 1)); }
    long long total_weight() const;
};

enum class Status { Stable, StrictlySemistable, Unstable, UnstableCertified, NoViolationInFamily };
enum class Mode { Exact, Search };
enum class Execution { Serial, Parallel };

std::string to_string(Status s);
std::string to_string(Mode m);

struct Witness {
    Flag flag;
    FlagType type = FlagType::None;
    Rational omega;
    Rational bound;
};

struct StabilityVerdict {
    Status status = Status::Stable;
    Mode mode = Mode::Exact;
    std::optional<Witness> witness;
    // How the verdict was reached, e.g. "flag-enumeration", "one-point", "candidate-family".
    std::string method;
    std::size_t flags_examined = 0;

    bool semistable() const { return status == Status::Stable || status == Status::StrictlySemistable; }
};

class ExactUnavailable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotCyclic : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotGeneric : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotATestFlag : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// eta_j = sum_i (-j m_i/(N+1)) + sum_{v_i in span(e_1..e_j)} m_i, j = 1..N.
RationalVector eta(const std::vector<Vector>& points, const std::vector<int>& m, int N);
// sum_j [ sum_{v_i in H_j} m_i - dim H_j * sum(m)/(N+1) ]
Rational omega(const std::vector<Vector>& points, const std::vector<int>& m, const Flag& f);
Rational flag_bound(const Matrix& T, const Flag& f, int q);
Rational flag_bound(FlagType t, int q);

// Evaluate the flag inequalities over a given family. Exact statuses; callers relabel for search.
// The witness is the first violating (or, failing that, first tight) flag in family order.
StabilityVerdict evaluate_flags(const MarkedMap& mm, const Sheaf& sheaf, const std::vector<Flag>& flags,
                                Execution exec = Execution::Parallel);

StabilityVerdict check_stability(const MarkedMap& mm, const Sheaf& sheaf, Mode mode, std::uint64_t budget = 1000000,
                                 Execution exec = Execution::Parallel);

// N = 1 over any field: lines through the points plus the kernel of a nilpotent T.
StabilityVerdict line_criterion(const MarkedMap& mm, const Sheaf& sheaf, Execution exec = Execution::Parallel);
// Point configurations without a map: subspaces spanned by point subsets.
StabilityVerdict mumford_config(const std::vector<Vector>& points, const std::vector<int>& m, int N);

// n = 1: complete criterion. v not cyclic -> unstable. v cyclic: the Krylov flag
// (Type II, Omega = mN/2) against q and, for nilpotent T, the kernel flag
// (Type III, Omega = -mN/2) against -q.
StabilityVerdict one_point_criterion(const MarkedMap& mm, const Sheaf& sheaf);
bool is_cyclic_non_nilpotent(const Matrix& T, const Vector& v);

enum class OracleBases { AllBases, FlagBases };
// Brute-force Hilbert-Mumford check over GF(p): for each basis B, the weights of
// B^-1 T B and eta of the points in B; 0 in eta + q Corner(weights) via the LP.
StabilityVerdict hilbert_mumford_oracle(const MarkedMap& mm, const Sheaf& sheaf,
                                        OracleBases bases = OracleBases::AllBases,
                                        std::uint64_t budget = 2000000, Execution exec = Execution::Parallel);
// Basis count the oracle would visit.
Integer oracle_basis_count(std::uint32_t p, int N, OracleBases bases);

MarkedMap stable_witness(int N, int n, int q);

// [alpha_1 : ... : alpha_{N+1}] with T^{N+1} v = sum alpha_i T^{i-1} v, first nonzero = 1.
// Depends on the scalar representative of T.
std::vector<FieldElement> companion_coefficients(const Matrix& T, const Vector& v);
std::vector<FieldElement> companion_form(const Matrix& T, const Vector& v);

struct ModuliCoordinates {
    std::vector<FieldElement> eigenvalues;
    std::vector<Vector> points;  // v'_2..v'_n, first nonzero = 1
    friend bool operator==(const ModuliCoordinates&, const ModuliCoordinates&) = default;
};
ModuliCoordinates moduli_coordinates(const MarkedMap& mm);

// Rational roots of a polynomial with rational coefficients (c_0..c_d), sorted, without multiplicity.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

Vector normalize_projective(Vector v);

}  // namespace gitstab
