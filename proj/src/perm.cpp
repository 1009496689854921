#include "cga/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cga {

namespace {
constexpr int kMaxDegree = 64;

void check_degree(int degree) {
    if (degree < 0 || degree > kMaxDegree)
        throw std::invalid_argument("degree must be in [0, 64], got " + std::to_string(degree));
}
}  // namespace

Permutation::Permutation(int degree) {
    check_degree(degree);
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(std::vector<std::uint8_t> images) {
    check_degree(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (std::uint8_t v : images) {
        if (v >= images.size() || seen[v])
            throw std::invalid_argument("image table is not a permutation");
        seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (images_[static_cast<std::size_t>(x)] != x) return false;
    return true;
}

bool Permutation::even() const {
    // parity = sum over cycles of (length - 1)
    std::vector<bool> seen(images_.size(), false);
    int transpositions = 0;
    for (int x = 0; x < degree(); ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        int len = 0;
        for (int y = x; !seen[static_cast<std::size_t>(y)]; y = images_[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

int Permutation::num_moved() const {
    int count = 0;
    for (int x = 0; x < degree(); ++x)
        if (images_[static_cast<std::size_t>(x)] != x) ++count;
    return count;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> inv(images_.size());
    for (int x = 0; x < degree(); ++x)
        inv[images_[static_cast<std::size_t>(x)]] = static_cast<std::uint8_t>(x);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

bool Permutation::commutes_with(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("degree mismatch");
    for (int x = 0; x < degree(); ++x)
        if (images_[other.images_[static_cast<std::size_t>(x)]] !=
            other.images_[images_[static_cast<std::size_t>(x)]])
            return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int x = 0; x < degree(); ++x) {
        if (seen[static_cast<std::size_t>(x)] || images_[static_cast<std::size_t>(x)] == x) continue;
        std::vector<int> cyc;
        for (int y = x; !seen[static_cast<std::size_t>(y)]; y = images_[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            cyc.push_back(y);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::support() const {
    std::vector<int> out;
    for (int x = 0; x < degree(); ++x)
        if (images_[static_cast<std::size_t>(x)] != x) out.push_back(x);
    return out;
}

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (int x = 0; x < degree(); ++x)
        if (images_[static_cast<std::size_t>(x)] == x) out.push_back(x);
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("degree mismatch");
    Permutation p;
    p.images_.resize(a.images_.size());
    for (std::size_t x = 0; x < a.images_.size(); ++x)
        p.images_[x] = a.images_[b.images_[x]];
    return p;
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t v : p.images()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

CycleType CycleType::of(const Permutation& p) {
    CycleType t;
    t.degree = p.degree();
    for (const auto& c : p.cycles()) t.parts.push_back(static_cast<int>(c.size()));
    std::sort(t.parts.begin(), t.parts.end(), std::greater<int>());
    return t;
}

CycleType CycleType::parse(const std::string& text, int degree) {
    check_degree(degree);
    CycleType t;
    t.degree = degree;
    if (text.empty() || text == "id") return t;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad cycle type: " + text);
        int part = std::stoi(text.substr(i, j - i));
        if (part < 2) throw std::invalid_argument("cycle type parts must be >= 2: " + text);
        t.parts.push_back(part);
        i = j;
        if (i < text.size()) {
            if (text[i] != '-') throw std::invalid_argument("bad cycle type: " + text);
            ++i;
            if (i == text.size()) throw std::invalid_argument("bad cycle type: " + text);
        }
    }
    std::sort(t.parts.begin(), t.parts.end(), std::greater<int>());
    if (t.moved() > degree)
        throw std::invalid_argument("cycle type exceeds degree: " + text);
    return t;
}

int CycleType::moved() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool CycleType::even() const {
    int transpositions = 0;
    for (int part : parts) transpositions += part - 1;
    return transpositions % 2 == 0;
}

std::string CycleType::str() const {
    if (parts.empty()) return "id";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(parts[i]);
    }
    return out;
}

Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::vector<std::uint8_t> images(p.images());
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cyc : cycles) {
        for (int pt : cyc) {
            if (pt < 0 || pt >= degree)
                throw std::invalid_argument("cycle point out of range");
            if (used[static_cast<std::size_t>(pt)])
                throw std::invalid_argument("repeated point in cycles");
            used[static_cast<std::size_t>(pt)] = true;
        }
        if (cyc.size() < 2) continue;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            images[static_cast<std::size_t>(cyc[i])] =
                static_cast<std::uint8_t>(cyc[(i + 1) % cyc.size()]);
    }
    return Permutation::from_images(std::move(images));
}

Permutation parse_cycles(const std::string& text, int degree) {
    check_degree(degree);
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw std::invalid_argument("expected point in: " + text);
            int pt = std::stoi(text.substr(i, j - i));
            if (pt < 1 || pt > degree)
                throw std::invalid_argument("point " + std::to_string(pt) + " outside [1, " +
                                            std::to_string(degree) + "]");
            cyc.push_back(pt - 1);
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
            else break;
        }
        if (i >= text.size() || text[i] != ')')
            throw std::invalid_argument("unterminated cycle in: " + text);
        ++i;
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return from_cycles(degree, cycles);  // rejects repeated points
}

std::string render_cycles(const Permutation& p) {
    auto cs = p.cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cyc : cs) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(cyc[i] + 1);
        }
        out += ')';
    }
    return out;
}

}  // namespace cga
