#pragma once

#include "cga/perm.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cga {

enum class Family : std::uint8_t { sym, alt };

struct GroupSpec {
    Family family = Family::sym;
    int degree = 0;

    static GroupSpec sym(int n) { return {Family::sym, n}; }
    static GroupSpec alt(int n) { return {Family::alt, n}; }

    std::uint64_t order() const;  // degree <= 20, exact in 64 bits
    bool contains(const Permutation& p) const;
    std::vector<Permutation> gens() const;
    std::string str() const;

    bool operator==(const GroupSpec&) const = default;
};

// In alt, an even class whose cycle lengths (fixed points counted as 1-cycles)
// are all odd and distinct falls apart into two classes of equal size; the
// plus class is the one holding the lexicographically least representative.
enum class SplitTag : std::uint8_t { none, plus, minus };

struct ClassLabel {
    CycleType type;
    SplitTag tag = SplitTag::none;

    std::string str() const;  // "6-3-3-2", "7-5-3^+"
    static ClassLabel parse(const std::string& text, int degree);

    bool operator==(const ClassLabel&) const = default;
    auto operator<=>(const ClassLabel&) const = default;
};

struct SubgroupGens {
    int degree = 0;
    std::vector<Permutation> gens;
};

struct CapExceeded : std::runtime_error {
    std::uint64_t cap;
    explicit CapExceeded(std::uint64_t c)
        : std::runtime_error("element cap " + std::to_string(c) + " exceeded"), cap(c) {}
};

std::uint64_t factorial(int n);  // n <= 20

// Breadth-first closure of the generated subgroup, canonically sorted.
// Throws CapExceeded once more than cap distinct elements appear.
std::vector<Permutation> close(const SubgroupGens& s, std::uint64_t cap);

// True iff all generator pairs commute; the closure is then abelian.
bool is_abelian(const SubgroupGens& s);

// Generators of the even part {x in <s> : x even}, an index <= 2 subgroup.
// Uses the Schreier generators over the transversal {e, s0} for one fixed
// odd generator s0; keeping both cosets' images is required for closure.
SubgroupGens intersect_with_alt(const SubgroupGens& s);

// Structural generators of the centralizer: each cycle of g, one aligned swap
// per adjacent pair of equal-length cycles, and a transposition plus full
// cycle on the fixed points. O(#cycles + 2) generators. For alt the sym
// generators are intersected down.
SubgroupGens centralizer_gens(const GroupSpec& spec, const Permutation& g);

// prod_l l^{m_l} m_l! * f!
std::uint64_t centralizer_order_in_sym(const CycleType& t);

bool splits_in_alt(const CycleType& t);  // t must be even
std::uint64_t class_size(const GroupSpec& spec, const ClassLabel& label);

// All class labels of the group, identity included, sorted.
std::vector<ClassLabel> conjugacy_classes(const GroupSpec& spec);

// Lexicographically least element of the class: fixed points first, then
// cycles in ascending length on consecutive points. The minus representative
// is the plus one conjugated by the transposition of the last two points.
Permutation class_representative(const GroupSpec& spec, const ClassLabel& label);

// Some q with q * from * q^{-1} = to; requires equal cycle types. For split
// types every valid q has the same parity, which pins the tag below.
Permutation conjugator_taking(const Permutation& from, const Permutation& to);

ClassLabel class_of(const GroupSpec& spec, const Permutation& g);

// Whether the centralizer (within spec) of an element of this type is
// abelian. A type-level property: alt is normal in sym, so conjugation
// carries centralizers to centralizers. Memoized.
bool type_abelian(const GroupSpec& spec, const CycleType& t);

enum class Verdict : std::uint8_t { yes, no, undecided };

struct WitnessOutcome {
    Verdict verdict = Verdict::undecided;
    std::optional<Permutation> witness;  // present iff verdict == yes
};

// Does some h in the group have abelian centralizer containing g? Any such h
// lies in C(g), so a no-verdict needs the full closure of C(g) under cap;
// above cap the constructed-candidate search alone can only say yes or
// undecided.
WitnessOutcome lies_in_abelian_centralizer(const GroupSpec& spec, const Permutation& g,
                                           std::uint64_t cap);

struct ClassRecord {
    ClassLabel label;
    Permutation representative;
    std::uint64_t size = 0;
    Verdict in_ya = Verdict::undecided;
    std::optional<Permutation> witness;
};

// One record per nonidentity class, sorted by label. Split pairs share one
// verdict (the property is invariant under odd conjugation too).
std::vector<ClassRecord> classify_classes(const GroupSpec& spec, std::uint64_t cap);

// All maximal abelian subgroups of the group containing g, as closed element
// lists, canonically sorted. Any abelian overgroup of g sits inside C(g), so
// these are the maximal cliques of the commuting relation on the closed
// centralizer. Throws CapExceeded if C(g) does not close under cap.
std::vector<std::vector<Permutation>> maximal_abelian_overgroups(const GroupSpec& spec,
                                                                 const Permutation& g,
                                                                 std::uint64_t cap);

}  // namespace cga
