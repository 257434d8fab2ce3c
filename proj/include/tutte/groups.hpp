#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tutte/codes.hpp"
#include "tutte/errors.hpp"
#include "tutte/rational.hpp"

namespace tutte {

/// Permutation of {0, ..., points-1} in image-list form.
class Permutation {
public:
    explicit Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (std::uint32_t v : img_) {
            if (v >= img_.size() || seen[v]) throw InputError("permutation images must be a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t points) {
        std::vector<std::uint32_t> img(points);
        for (std::size_t i = 0; i < points; ++i) img[i] = static_cast<std::uint32_t>(i);
        return Permutation(std::move(img));
    }

    std::size_t points() const { return img_.size(); }
    std::uint32_t operator()(std::uint32_t i) const { return img_[i]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    /// (a.then(b))(i) = b(a(i)).
    Permutation then(const Permutation& b) const {
        if (b.points() != points()) throw InputError("permutation sizes differ");
        std::vector<std::uint32_t> out(points());
        for (std::size_t i = 0; i < points(); ++i) out[i] = b.img_[img_[i]];
        return Permutation(std::move(out));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }

private:
    std::vector<std::uint32_t> img_;
};

/// Number of cycles, fixed points included.
inline std::size_t cycle_count(const Permutation& p) {
    std::vector<bool> seen(p.points(), false);
    std::size_t cycles = 0;
    for (std::uint32_t i = 0; i < p.points(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        std::uint32_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p(j);
        }
    }
    return cycles;
}

struct PermutationGroup {
    std::size_t points = 0;
    std::vector<Permutation> generators;
};

namespace detail {

struct PermHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint32_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace detail

/// All group elements by breadth-first closure over the generators.
/// Throws SizeError when the group exceeds the cap.
inline std::vector<Permutation> enumerate_group(const PermutationGroup& g,
                                                std::size_t cap = 1'000'000) {
    for (const auto& gen : g.generators)
        if (gen.points() != g.points) throw InputError("generator degree mismatch");
    std::vector<Permutation> elements;
    std::unordered_set<std::vector<std::uint32_t>, detail::PermHash> seen;
    elements.push_back(Permutation::identity(g.points));
    seen.insert(elements.front().images());
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& gen : g.generators) {
            Permutation next = elements[head].then(gen);
            if (seen.insert(next.images()).second) {
                if (elements.size() + 1 > cap) throw SizeError("group enumeration exceeded cap");
                elements.push_back(std::move(next));
            }
        }
    }
    return elements;
}

/// Cycle index polynomial |G|^-1 sum_g x^cyc(g), by full enumeration.
inline Rational cycle_index(const PermutationGroup& g, const Rational& x,
                            std::size_t cap = 1'000'000) {
    const auto elements = enumerate_group(g, cap);
    Rational sum(0);
    for (const auto& e : elements)
        sum += rational_pow(x, static_cast<std::int64_t>(cycle_count(e)));
    return sum / Rational(static_cast<std::uint64_t>(elements.size()));
}

/// Orbits of the group acting on length-points strings over an
/// alphabet-letter alphabet (positions permuted), by direct traversal of all
/// alphabet^points strings.
inline std::uint64_t orbit_count(const PermutationGroup& g, std::uint64_t alphabet,
                                 std::size_t cap = 1'000'000,
                                 std::uint64_t string_budget = std::uint64_t(1) << 22) {
    if (alphabet < 1) throw ParameterError("orbit_count requires a positive alphabet");
    const auto elements = enumerate_group(g, cap);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.points; ++i) {
        if (total > string_budget / alphabet) throw SizeError("orbit_count: string space too large");
        total *= alphabet;
    }
    std::vector<bool> visited(total, false);
    std::vector<std::uint32_t> sym(g.points), moved(g.points);
    std::vector<std::uint64_t> stack;
    std::uint64_t orbits = 0;
    for (std::uint64_t s = 0; s < total; ++s) {
        if (visited[s]) continue;
        ++orbits;
        visited[s] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            std::uint64_t code = cur;
            for (std::size_t i = 0; i < g.points; ++i) {
                sym[i] = static_cast<std::uint32_t>(code % alphabet);
                code /= alphabet;
            }
            for (const auto& e : elements) {
                for (std::size_t i = 0; i < g.points; ++i) moved[e(static_cast<std::uint32_t>(i))] = sym[i];
                std::uint64_t enc = 0;
                for (std::size_t i = g.points; i-- > 0;) enc = enc * alphabet + moved[i];
                if (!visited[enc]) {
                    visited[enc] = true;
                    stack.push_back(enc);
                }
            }
        }
    }
    return orbits;
}

/// Permutation group of a code: one generator per row, the product of the
/// transpositions (2j-1, 2j) over columns j with a one in that row.  The
/// generators are commuting involutions.
inline PermutationGroup code_to_group(const GeneratingMatrix& g) {
    PermutationGroup group;
    group.points = 2 * g.length();
    for (std::size_t i = 0; i < g.dimension(); ++i) {
        std::vector<std::uint32_t> img(group.points);
        for (std::size_t p = 0; p < group.points; ++p) img[p] = static_cast<std::uint32_t>(p);
        for (std::size_t j = 0; j < g.length(); ++j) {
            if (g.matrix().get(i, j)) {
                img[2 * j] = static_cast<std::uint32_t>(2 * j + 1);
                img[2 * j + 1] = static_cast<std::uint32_t>(2 * j);
            }
        }
        group.generators.emplace_back(std::move(img));
    }
    return group;
}

struct CodeGroupCheck {
    Rational lhs;  // |G| * Z_CI(G; x)
    Rational rhs;  // x^{2c} * W_M(1/x)
    bool equal = false;
    std::uint64_t group_size = 0;
    bool group_size_is_2r = false;
};

/// Verifies |G| Z_CI(G; x) = x^{2c} W_M(1/x) for the code's permutation
/// group, with the group enumerated by generic closure (so the 2^r size
/// claim is checked independently).
inline CodeGroupCheck code_group_check(const GeneratingMatrix& g, const Rational& x,
                                       std::size_t cap = 1'000'000) {
    if (x <= 0) throw ParameterError("code_group_check requires x > 0");
    CodeGroupCheck out;
    PermutationGroup group = code_to_group(g);
    const auto elements = enumerate_group(group, cap);
    out.group_size = elements.size();
    out.group_size_is_2r = (BigInt(out.group_size) == pow2_int(g.dimension()));
    Rational sum(0);
    for (const auto& e : elements)
        sum += rational_pow(x, static_cast<std::int64_t>(cycle_count(e)));
    out.lhs = sum;  // |G| * Z_CI = plain sum over elements
    out.rhs = rational_pow(x, static_cast<std::int64_t>(2 * g.length())) *
              weight_enumerator(g, Rational(1) / x);
    out.equal = (out.lhs == out.rhs);
    return out;
}

/// Group text format: first line `nu r`, then r lines of nu space-separated
/// 1-based images.
inline PermutationGroup read_group(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) throw InputError("group: missing header line");
    std::istringstream head(line);
    long long nu = -1, r = -1;
    if (!(head >> nu >> r) || nu < 0 || r < 0) throw InputError("group: bad header line");
    PermutationGroup g;
    g.points = static_cast<std::size_t>(nu);
    for (long long i = 0; i < r; ++i) {
        if (!detail::next_data_line(in, line)) throw InputError("group: missing generator line");
        std::istringstream is(line);
        std::vector<std::uint32_t> img;
        long long v;
        while (is >> v) {
            if (v < 1 || v > nu) throw InputError("group: image out of range");
            img.push_back(static_cast<std::uint32_t>(v - 1));
        }
        if (img.size() != g.points) throw InputError("group: generator line has wrong length");
        g.generators.emplace_back(std::move(img));
    }
    return g;
}

inline void write_group(std::ostream& out, const PermutationGroup& g) {
    out << g.points << ' ' << g.generators.size() << '\n';
    for (const auto& gen : g.generators) {
        for (std::size_t i = 0; i < g.points; ++i) {
            if (i) out << ' ';
            out << (gen(static_cast<std::uint32_t>(i)) + 1);
        }
        out << '\n';
    }
}

}  // namespace tutte
