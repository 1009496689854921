#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cga {

// Permutation of {0, ..., degree-1} stored as an image table.
// Points are 0-based internally; all text I/O (cycle notation) is 1-based.
// Composition is right-to-left: (a*b)(x) = a(b(x)).
// operator< is lexicographic on image sequences and is the canonical element
// order used for deterministic output everywhere.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);  // identity
    static Permutation from_images(std::vector<std::uint8_t> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }

    bool is_identity() const;
    bool even() const;
    int num_moved() const;

    Permutation inverse() const;
    bool commutes_with(const Permutation& other) const;

    // Cycles of length >= 2, each starting at its smallest point,
    // ordered by smallest point.
    std::vector<std::vector<int>> cycles() const;
    std::vector<int> support() const;
    std::vector<int> fixed_points() const;

    const std::vector<std::uint8_t>& images() const { return images_; }

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::uint8_t> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

struct PermHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

// Multiset of cycle lengths >= 2, non-increasing. Fixed points are implied
// by degree - sum(parts).
struct CycleType {
    std::vector<int> parts;
    int degree = 0;

    static CycleType of(const Permutation& p);
    // Parses "6-3-3-2"; "id" means the identity type.
    static CycleType parse(const std::string& text, int degree);

    int moved() const;
    int fixed_points() const { return degree - moved(); }
    bool even() const;
    std::string str() const;

    bool operator==(const CycleType&) const = default;
    auto operator<=>(const CycleType&) const = default;
};

// Builds the permutation with the given cycles on otherwise-fixed points.
// Each cycle is a list of 0-based points.
Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

// Cycle notation, 1-based: "(1,2)(3,4,5)". "()" and "" parse to the identity.
// Rejects malformed input, repeated points, and points outside [1, degree].
Permutation parse_cycles(const std::string& text, int degree);
std::string render_cycles(const Permutation& p);

}  // namespace cga
