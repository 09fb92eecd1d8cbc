#pragma once

#include "gitstab/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstab {

// s-coordinates of a character; length N.
using WeightVector = std::vector<int>;

// 1-based matrix position.
struct Entry {
    int row = 0;
    int col = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry&, const Entry&) = default;
};

class TrivialProfile : public std::invalid_argument {
public:
    TrivialProfile() : std::invalid_argument("the zero matrix has no profile") {}
};

// Nonzero pattern of an (N+1)x(N+1) matrix.
class Support {
public:
    Support() = default;
    explicit Support(int N) : N_(N), bits_(static_cast<std::size_t>((N + 1) * (N + 1)), 0) {}
    static Support of(const Matrix& m);
    // Bit (i*(N+1)+j) of mask is entry (i+1, j+1).
    static Support from_mask(int N, std::uint64_t mask);
    static Support from_entries(int N, const std::vector<Entry>& entries);

    int N() const { return N_; }
    int size() const { return N_ + 1; }
    bool operator()(int i, int j) const { return bits_[idx(i, j)] != 0; }
    void set(int i, int j, bool v = true) { bits_[idx(i, j)] = v; }

    std::vector<Entry> entries() const;
    bool empty() const;
    bool upper_triangular() const;
    bool strictly_upper_triangular() const;
    // Largest row index of a nonzero entry in columns 1..i (0 if none): M S_i is inside S_j iff top(i) <= j.
    int top(int i) const;

    friend bool operator==(const Support&, const Support&) = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * (N_ + 1) + (j - 1)); }
    int N_ = 0;
    std::vector<std::uint8_t> bits_;
};

enum class Orientation { Lower, Upper };

class Profile {
public:
    Profile() = default;
    // word over {'D','R'}; validated.
    explicit Profile(std::string word);

    const std::string& word() const { return word_; }
    Orientation orientation() const { return word_[0] == 'D' ? Orientation::Lower : Orientation::Upper; }
    int N() const { return static_cast<int>(word_.size() / 2) - 1; }
    // c[i-1] = number of RIGHT steps before the i-th DOWN step.
    std::vector<int> down_columns() const;
    // Entry lies in the closed region up-and-right of the path.
    bool contains(Entry e) const;

    friend bool operator==(const Profile&, const Profile&) = default;
    friend auto operator<=>(const Profile&, const Profile&) = default;

private:
    std::string word_;
};

std::string to_string(Orientation o);

Profile profile(const Support& s);
inline Profile profile(const Matrix& m) { return profile(Support::of(m)); }

std::vector<Entry> pivotal_entries(const Profile& p);

WeightVector entry_weight(int i, int j, int N);
// b in a + O+.
bool dominates(const WeightVector& a, const WeightVector& b);
bool outweighs(Entry a, Entry b, int N);

std::vector<Entry> minimal_entries(const Support& s);

struct ControlMatrix {
    int n_rows = 0;
    std::vector<WeightVector> columns;
    friend bool operator==(const ControlMatrix&, const ControlMatrix&) = default;
};

ControlMatrix control_matrix(const Support& s);
inline ControlMatrix control_matrix(const Matrix& m) { return control_matrix(Support::of(m)); }

std::vector<Profile> enumerate_profiles(int N);

}  // namespace gitstab
