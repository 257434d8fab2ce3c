#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/gf2.hpp"

namespace tutte {

using ElementId = std::uint32_t;

/// Binary matroid: a GF(2) representation whose columns are the ground set.
/// Element identifiers are stable across deletion, contraction, duality and
/// the gadget extensions, so weight maps stay valid along a pipeline.
class BinaryMatroid {
public:
    BinaryMatroid() = default;

    explicit BinaryMatroid(Gf2Matrix rep) : rep_(std::move(rep)) {
        ground_.reserve(rep_.cols());
        for (std::size_t j = 0; j < rep_.cols(); ++j)
            ground_.push_back(static_cast<ElementId>(j));
        index_ground();
    }

    BinaryMatroid(Gf2Matrix rep, std::vector<ElementId> ground)
        : rep_(std::move(rep)), ground_(std::move(ground)) {
        if (ground_.size() != rep_.cols())
            throw InputError("ground set size must match column count");
        index_ground();
    }

    const Gf2Matrix& representation() const { return rep_; }
    const std::vector<ElementId>& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }
    std::size_t rows() const { return rep_.rows(); }

    bool has_element(ElementId e) const { return col_of_.count(e) != 0; }

    std::size_t column_of(ElementId e) const {
        auto it = col_of_.find(e);
        if (it == col_of_.end()) throw InputError("unknown ground set element");
        return it->second;
    }

    ElementId element_at(std::size_t col) const {
        if (col >= ground_.size()) throw InputError("column index out of range");
        return ground_[col];
    }

    ElementId fresh_element() const {
        ElementId next = 0;
        for (ElementId e : ground_)
            if (e >= next) next = e + 1;
        return next;
    }

    std::size_t rank() const { return gf2_rank(rep_); }

    std::size_t rank_of(std::span<const ElementId> subset) const {
        std::vector<std::size_t> cols;
        cols.reserve(subset.size());
        for (ElementId e : subset) cols.push_back(column_of(e));
        return gf2_rank(rep_, cols);
    }

    /// Rank of the columns selected by a bit mask over column positions.
    std::size_t rank_of_column_mask(std::uint64_t mask) const {
        return gf2_rank_masked(rep_, mask);
    }

    bool is_loop(ElementId e) const { return rep_.column_is_zero(column_of(e)); }

    bool is_coloop(ElementId e) const {
        const std::size_t c = column_of(e);
        std::vector<std::size_t> rest;
        rest.reserve(rep_.cols() - 1);
        for (std::size_t j = 0; j < rep_.cols(); ++j)
            if (j != c) rest.push_back(j);
        return gf2_rank(rep_) == gf2_rank(rep_, rest) + 1;
    }

private:
    void index_ground() {
        col_of_.clear();
        col_of_.reserve(ground_.size());
        for (std::size_t j = 0; j < ground_.size(); ++j) {
            if (!col_of_.emplace(ground_[j], j).second)
                throw InputError("duplicate ground set element");
        }
    }

    Gf2Matrix rep_;
    std::vector<ElementId> ground_;
    std::unordered_map<ElementId, std::size_t> col_of_;
};

inline BinaryMatroid delete_element(const BinaryMatroid& m, ElementId e) {
    const std::size_t c = m.column_of(e);
    std::vector<ElementId> ground;
    ground.reserve(m.size() - 1);
    for (ElementId g : m.ground())
        if (g != e) ground.push_back(g);
    return BinaryMatroid(m.representation().without_column(c), std::move(ground));
}

/// Contraction realized over GF(2): eliminate a pivot row of the contracted
/// column, then drop the row and the column.  Contracting a loop is deletion
/// (forced by the rank identity r(A u {e}) - r({e}) with r({e}) = 0).
inline BinaryMatroid contract_element(const BinaryMatroid& m, ElementId e) {
    const std::size_t c = m.column_of(e);
    if (m.representation().column_is_zero(c)) return delete_element(m, e);
    Gf2Matrix rep = m.representation();
    std::size_t pivot = 0;
    while (!rep.get(pivot, c)) ++pivot;
    for (std::size_t i = 0; i < rep.rows(); ++i)
        if (i != pivot && rep.get(i, c)) rep.xor_row_into(pivot, i);
    std::vector<ElementId> ground;
    ground.reserve(m.size() - 1);
    for (ElementId g : m.ground())
        if (g != e) ground.push_back(g);
    return BinaryMatroid(rep.without_row(pivot).without_column(c), std::move(ground));
}

inline BinaryMatroid dual(const BinaryMatroid& m) {
    return BinaryMatroid(gf2_dual_representation(m.representation()), m.ground());
}

/// Undirected multigraph; self-loops and parallel edges allowed.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

/// Cycle matroid via the vertex-edge incidence matrix over GF(2).
/// A self-loop gives a zero column, hence a matroid loop.
inline BinaryMatroid from_graph(const Graph& g) {
    Gf2Matrix m(g.n, g.edges.size());
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        auto [u, v] = g.edges[j];
        if (u >= g.n || v >= g.n) throw InputError("graph edge endpoint out of range");
        if (u != v) {
            m.set(u, j, true);
            m.set(v, j, true);
        }
    }
    return BinaryMatroid(std::move(m));
}

/// Connected components of (V, S) where S is an edge subset given as a bit
/// mask over edge indices.
inline std::size_t component_count(const Graph& g, std::uint64_t edge_mask) {
    std::vector<std::uint32_t> parent(g.n);
    for (std::uint32_t i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t comps = g.n;
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        if (!(edge_mask >> j & 1)) continue;
        auto [u, v] = g.edges[j];
        std::uint32_t ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --comps;
        }
    }
    return comps;
}

/// Graph text format: first line `n m`, then m lines `u v` with 1-based
/// endpoints.  Blank lines and `#` comments are ignored.
inline Graph read_graph(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) throw InputError("graph: missing header line");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw InputError("graph: bad header line");
    Graph g;
    g.n = static_cast<std::size_t>(n);
    for (long long j = 0; j < m; ++j) {
        if (!detail::next_data_line(in, line)) throw InputError("graph: missing edge line");
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v) || u < 1 || v < 1 || u > n || v > n)
            throw InputError("graph: bad edge line: " + line);
        g.edges.emplace_back(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1));
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << (u + 1) << ' ' << (v + 1) << '\n';
}

}  // namespace tutte
