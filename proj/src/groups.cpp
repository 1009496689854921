#include "cga/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace cga {

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20)
        throw std::overflow_error("factorial(" + std::to_string(n) + ") outside exact 64-bit range");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t GroupSpec::order() const {
    std::uint64_t full = factorial(degree);
    if (family == Family::alt && degree >= 2) return full / 2;
    return full;
}

bool GroupSpec::contains(const Permutation& p) const {
    if (p.degree() != degree) return false;
    return family == Family::sym || p.even();
}

std::vector<Permutation> GroupSpec::gens() const {
    int n = degree;
    std::vector<Permutation> out;
    if (family == Family::sym) {
        if (n >= 2) out.push_back(parse_cycles("(1,2)", n));
        if (n >= 3) {
            std::vector<int> full(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) full[static_cast<std::size_t>(i)] = i;
            out.push_back(from_cycles(n, {full}));
        }
    } else {
        if (n >= 3) out.push_back(parse_cycles("(1,2,3)", n));
        if (n >= 4) {
            // n odd: the n-cycle is even; n even: the (n-1)-cycle on {2..n} is
            std::vector<int> c;
            for (int i = (n % 2 == 1) ? 0 : 1; i < n; ++i) c.push_back(i);
            out.push_back(from_cycles(n, {c}));
        }
    }
    return out;
}

std::string GroupSpec::str() const {
    return std::string(family == Family::sym ? "sym(" : "alt(") + std::to_string(degree) + ")";
}

std::string ClassLabel::str() const {
    std::string s = type.str();
    if (tag == SplitTag::plus) s += "^+";
    if (tag == SplitTag::minus) s += "^-";
    return s;
}

ClassLabel ClassLabel::parse(const std::string& text, int degree) {
    ClassLabel label;
    std::string body = text;
    if (body.size() >= 2 && body[body.size() - 2] == '^') {
        char t = body.back();
        if (t == '+') label.tag = SplitTag::plus;
        else if (t == '-') label.tag = SplitTag::minus;
        else throw std::invalid_argument("bad split tag in: " + text);
        body.resize(body.size() - 2);
    }
    label.type = CycleType::parse(body, degree);
    return label;
}

std::vector<Permutation> close(const SubgroupGens& s, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    Permutation id(s.degree);
    std::unordered_set<Permutation, PermHash> seen{id};
    std::deque<Permutation> queue{id};
    while (!queue.empty()) {
        Permutation x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : s.gens) {
            Permutation y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw CapExceeded(cap);
                queue.push_back(std::move(y));
            }
        }
    }
    std::vector<Permutation> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_abelian(const SubgroupGens& s) {
    for (std::size_t i = 0; i < s.gens.size(); ++i)
        for (std::size_t j = i + 1; j < s.gens.size(); ++j)
            if (!s.gens[i].commutes_with(s.gens[j])) return false;
    return true;
}

SubgroupGens intersect_with_alt(const SubgroupGens& s) {
    SubgroupGens out{s.degree, {}};
    std::unordered_set<Permutation, PermHash> dedup;
    auto add = [&](const Permutation& p) {
        if (!p.is_identity() && dedup.insert(p).second) out.gens.push_back(p);
    };

    const Permutation* odd = nullptr;
    for (const auto& g : s.gens)
        if (!g.even()) { odd = &g; break; }
    if (odd == nullptr) {
        for (const auto& g : s.gens) add(g);
        return out;
    }
    Permutation s0 = *odd;
    Permutation s0inv = s0.inverse();
    for (const auto& g : s.gens) {
        if (g.even()) {
            add(g);
            add(s0 * g * s0inv);
        } else {
            add(g * s0inv);
            add(s0 * g);
        }
    }
    return out;
}

SubgroupGens centralizer_gens(const GroupSpec& spec, const Permutation& g) {
    int n = g.degree();
    if (n != spec.degree) throw std::invalid_argument("degree mismatch");
    SubgroupGens out{n, {}};

    auto cycles = g.cycles();
    std::map<int, std::vector<std::vector<int>>> by_len;
    for (auto& c : cycles) by_len[static_cast<int>(c.size())].push_back(c);

    for (const auto& c : cycles) out.gens.push_back(from_cycles(n, {c}));

    for (const auto& [len, group] : by_len) {
        (void)len;
        for (std::size_t i = 0; i + 1 < group.size(); ++i) {
            std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
            for (std::size_t j = 0; j < group[i].size(); ++j) {
                img[static_cast<std::size_t>(group[i][j])] = static_cast<std::uint8_t>(group[i + 1][j]);
                img[static_cast<std::size_t>(group[i + 1][j])] = static_cast<std::uint8_t>(group[i][j]);
            }
            out.gens.push_back(Permutation::from_images(std::move(img)));
        }
    }

    auto fixed = g.fixed_points();
    if (fixed.size() >= 2) out.gens.push_back(from_cycles(n, {{fixed[0], fixed[1]}}));
    if (fixed.size() >= 3) out.gens.push_back(from_cycles(n, {fixed}));

    if (spec.family == Family::alt) return intersect_with_alt(out);
    return out;
}

std::uint64_t centralizer_order_in_sym(const CycleType& t) {
    std::map<int, int> mult;
    for (int part : t.parts) ++mult[part];
    std::uint64_t r = factorial(t.fixed_points());
    for (const auto& [len, m] : mult) {
        for (int i = 0; i < m; ++i) r *= static_cast<std::uint64_t>(len);
        r *= factorial(m);
    }
    return r;
}

bool splits_in_alt(const CycleType& t) {
    if (!t.even()) throw std::invalid_argument("odd type " + t.str() + " has no alt class");
    if (t.parts.empty()) return false;
    if (t.fixed_points() > 1) return false;
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        if (t.parts[i] % 2 == 0) return false;
        if (i + 1 < t.parts.size() && t.parts[i] == t.parts[i + 1]) return false;
    }
    return true;
}

std::uint64_t class_size(const GroupSpec& spec, const ClassLabel& label) {
    if (label.type.degree != spec.degree) throw std::invalid_argument("degree mismatch");
    std::uint64_t in_sym = factorial(spec.degree) / centralizer_order_in_sym(label.type);
    if (spec.family == Family::sym) {
        if (label.tag != SplitTag::none)
            throw std::invalid_argument("split tag is meaningless in sym");
        return in_sym;
    }
    if (splits_in_alt(label.type)) {  // rejects odd types
        if (label.tag == SplitTag::none)
            throw std::invalid_argument("class " + label.type.str() + " splits; tag required");
        return in_sym / 2;
    }
    if (label.tag != SplitTag::none)
        throw std::invalid_argument("class " + label.type.str() + " does not split");
    return in_sym;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    out.push_back(current);  // pad the rest with fixed points
    for (int part = std::min(remaining, max_part); part >= 2; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<ClassLabel> conjugacy_classes(const GroupSpec& spec) {
    std::vector<std::vector<int>> parts_lists;
    std::vector<int> current;
    partitions_rec(spec.degree, spec.degree, current, parts_lists);

    std::vector<ClassLabel> out;
    for (auto& parts : parts_lists) {
        CycleType t{std::move(parts), spec.degree};
        if (spec.family == Family::alt) {
            if (!t.even()) continue;
            if (splits_in_alt(t)) {
                out.push_back({t, SplitTag::plus});
                out.push_back({t, SplitTag::minus});
                continue;
            }
        }
        out.push_back({std::move(t), SplitTag::none});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation class_representative(const GroupSpec& spec, const ClassLabel& label) {
    int n = spec.degree;
    if (label.type.degree != n) throw std::invalid_argument("degree mismatch");
    if (spec.family == Family::sym) {
        if (label.tag != SplitTag::none)
            throw std::invalid_argument("split tag is meaningless in sym");
    } else {
        bool splits = splits_in_alt(label.type);  // rejects odd types
        if (splits != (label.tag != SplitTag::none))
            throw std::invalid_argument("tag does not match splitting of " + label.type.str());
    }

    std::vector<int> asc(label.type.parts);
    std::sort(asc.begin(), asc.end());
    std::vector<std::vector<int>> cycles;
    int pos = label.type.fixed_points();
    for (int part : asc) {
        std::vector<int> c(static_cast<std::size_t>(part));
        for (int j = 0; j < part; ++j) c[static_cast<std::size_t>(j)] = pos + j;
        pos += part;
        cycles.push_back(std::move(c));
    }
    Permutation rep = from_cycles(n, cycles);
    if (label.tag == SplitTag::minus) {
        Permutation t = from_cycles(n, {{n - 2, n - 1}});
        rep = t * rep * t;
    }
    return rep;
}

Permutation conjugator_taking(const Permutation& from, const Permutation& to) {
    if (from.degree() != to.degree()) throw std::invalid_argument("degree mismatch");
    if (CycleType::of(from) != CycleType::of(to))
        throw std::invalid_argument("cycle types differ; no conjugator");
    int n = from.degree();

    std::map<int, std::vector<std::vector<int>>> from_by_len, to_by_len;
    for (auto& c : from.cycles()) from_by_len[static_cast<int>(c.size())].push_back(c);
    for (auto& c : to.cycles()) to_by_len[static_cast<int>(c.size())].push_back(c);

    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    for (const auto& [len, fcycles] : from_by_len) {
        const auto& tcycles = to_by_len[len];
        for (std::size_t i = 0; i < fcycles.size(); ++i)
            for (std::size_t j = 0; j < fcycles[i].size(); ++j)
                img[static_cast<std::size_t>(fcycles[i][j])] = static_cast<std::uint8_t>(tcycles[i][j]);
    }
    auto ffixed = from.fixed_points();
    auto tfixed = to.fixed_points();
    for (std::size_t i = 0; i < ffixed.size(); ++i)
        img[static_cast<std::size_t>(ffixed[i])] = static_cast<std::uint8_t>(tfixed[i]);
    return Permutation::from_images(std::move(img));
}

ClassLabel class_of(const GroupSpec& spec, const Permutation& g) {
    if (g.degree() != spec.degree) throw std::invalid_argument("degree mismatch");
    CycleType t = CycleType::of(g);
    if (spec.family == Family::sym) return {t, SplitTag::none};
    if (!t.even()) throw std::invalid_argument("odd element is not in " + spec.str());
    if (!splits_in_alt(t)) return {t, SplitTag::none};
    Permutation plus_rep = class_representative(spec, {t, SplitTag::plus});
    bool even_conj = conjugator_taking(plus_rep, g).even();
    return {t, even_conj ? SplitTag::plus : SplitTag::minus};
}

}  // namespace cga
