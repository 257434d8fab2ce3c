#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/gf2.hpp"

namespace tutte {

/// Hypergraph: vertex count plus a multiset of nonempty hyperedges.
/// Each hyperedge is a set of vertices (kept sorted and duplicate-free);
/// the hyperedge collection itself may contain repeats.
struct Hypergraph {
    std::size_t n = 0;
    std::vector<std::vector<std::uint32_t>> edges;

    void validate() const {
        for (const auto& f : edges) {
            if (f.empty()) throw InputError("hypergraph: empty hyperedge");
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i] >= n) throw InputError("hypergraph: vertex out of range");
                if (i > 0 && f[i] <= f[i - 1])
                    throw InputError("hypergraph: hyperedge vertices must be a sorted set");
            }
        }
    }
};

struct Uniformity {
    std::optional<std::size_t> t;  // common hyperedge size, when one exists
    bool vacuous = false;          // edgeless: uniform for every t
};

inline Uniformity is_uniform(const Hypergraph& h) {
    Uniformity u;
    if (h.edges.empty()) {
        u.vacuous = true;
        return u;
    }
    const std::size_t t = h.edges.front().size();
    for (const auto& f : h.edges)
        if (f.size() != t) return u;
    u.t = t;
    return u;
}

/// Number of hyperedges on which sigma is constant.
inline std::size_t mono_count(const Hypergraph& h, std::span<const std::uint32_t> sigma) {
    if (sigma.size() != h.n) throw InputError("mono_count: assignment must be total");
    std::size_t count = 0;
    for (const auto& f : h.edges) {
        bool mono = true;
        for (std::size_t i = 1; i < f.size(); ++i)
            if (sigma[f[i]] != sigma[f[0]]) {
                mono = false;
                break;
            }
        if (mono) ++count;
    }
    return count;
}

/// Hypergraph text format: first line `n m`, then m lines of space-separated
/// 1-based vertex indices.
inline Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) throw InputError("hypergraph: missing header line");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw InputError("hypergraph: bad header line");
    Hypergraph h;
    h.n = static_cast<std::size_t>(n);
    for (long long j = 0; j < m; ++j) {
        if (!detail::next_data_line(in, line)) throw InputError("hypergraph: missing edge line");
        std::istringstream es(line);
        std::vector<std::uint32_t> f;
        long long v;
        while (es >> v) {
            if (v < 1 || v > n) throw InputError("hypergraph: vertex out of range: " + line);
            f.push_back(static_cast<std::uint32_t>(v - 1));
        }
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw InputError("hypergraph: repeated vertex in a hyperedge");
        h.edges.push_back(std::move(f));
    }
    h.validate();
    return h;
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.n << ' ' << h.edges.size() << '\n';
    for (const auto& f : h.edges) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << (f[i] + 1);
        }
        out << '\n';
    }
}

}  // namespace tutte
