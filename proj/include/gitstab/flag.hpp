#pragma once

#include "gitstab/linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gitstab {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 0 < H_1 < ... < H_gamma < k^{N+1}, strictly nested.
class Flag {
public:
    Flag() = default;
    explicit Flag(std::vector<Subspace> spaces);

    std::size_t ambient_dim() const { return spaces_.front().ambient_dim(); }
    std::size_t length() const { return spaces_.size(); }
    const std::vector<Subspace>& spaces() const { return spaces_; }
    const Subspace& operator[](std::size_t t) const { return spaces_[t]; }

    friend bool operator==(const Flag&, const Flag&) = default;
    friend bool operator<(const Flag& a, const Flag& b);

private:
    std::vector<Subspace> spaces_;
};

// values[i] = h(i) for i = 0..gamma+1.
struct HessenbergFunction {
    std::vector<int> values;
    friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;
};

enum class FlagType { TypeI, TypeII, TypeIII, None };
std::string to_string(FlagType t);

HessenbergFunction hessenberg(const Matrix& T, const Flag& f);

bool is_type_I(const Matrix& T, const Flag& f);
bool is_type_II(const Matrix& T, const Flag& f);
bool is_type_III(const Matrix& T, const Flag& f);
// Throws std::logic_error if two predicates hold at once.
FlagType classify_flag(const Matrix& T, const Flag& f);

// Exact number of flags of length <= max_gamma in GF(p)^{N+1}.
Integer flag_count(std::uint32_t p, int N, int max_gamma);
// All subspaces of GF(p)^n of the given dimension, canonical order.
std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t n, std::size_t dim);
// Every flag of length <= max_gamma, ordered by length then lexicographically.
std::vector<Flag> enumerate_flags(const Field& f, int N, int max_gamma, std::uint64_t budget = 1000000);

// Search family over any field: Type I invariant spans of point subsets, greedy
// Type II chains, Type III sub-chains of the kernel and image filtrations.
// Only flags of some type are returned; sorted and deduplicated.
std::vector<Flag> candidate_flags(const Matrix& T, const std::vector<Vector>& points);

}  // namespace gitstab
