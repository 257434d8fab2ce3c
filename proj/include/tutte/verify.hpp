#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "tutte/codes.hpp"
#include "tutte/gadgets.hpp"
#include "tutte/groups.hpp"
#include "tutte/matroid.hpp"
#include "tutte/partition.hpp"
#include "tutte/rational.hpp"
#include "tutte/reductions.hpp"
#include "tutte/rng.hpp"
#include "tutte/weights.hpp"

namespace tutte::verify {

struct SuiteResult {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++trials;
        if (!ok) {
            if (failures == 0) first_failure = what;
            ++failures;
        }
    }

    bool ok() const { return failures == 0; }
};

// ---- deterministic random instances -------------------------------------

inline Rational random_rational(SplitMix64& rng, bool nonzero, bool positive = false) {
    while (true) {
        std::int64_t num = static_cast<std::int64_t>(rng.below(19)) - 9;
        if (positive && num <= 0) continue;
        if (nonzero && num == 0) continue;
        std::int64_t den = static_cast<std::int64_t>(rng.below(9)) + 1;
        return Rational(num, den);
    }
}

inline Gf2Matrix random_gf2_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    Gf2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.coin());
    return m;
}

inline BinaryMatroid random_matroid(SplitMix64& rng, std::size_t max_rows, std::size_t max_cols) {
    const std::size_t rows = 1 + rng.below(max_rows);
    const std::size_t cols = 1 + rng.below(max_cols);
    return BinaryMatroid(random_gf2_matrix(rng, rows, cols));
}

inline WeightMap random_weights(SplitMix64& rng, const BinaryMatroid& m, bool nonzero,
                                bool positive = false) {
    WeightMap w;
    for (ElementId e : m.ground()) w.set(e, random_rational(rng, nonzero, positive));
    return w;
}

inline Graph random_graph(SplitMix64& rng, std::size_t max_n, std::size_t max_m) {
    Graph g;
    g.n = 1 + rng.below(max_n);
    const std::size_t m = rng.below(max_m + 1);
    for (std::size_t j = 0; j < m; ++j)
        g.edges.emplace_back(static_cast<std::uint32_t>(rng.below(g.n)),
                             static_cast<std::uint32_t>(rng.below(g.n)));
    return g;
}

inline GeneratingMatrix random_code(SplitMix64& rng, std::size_t max_r, std::size_t max_c) {
    while (true) {
        const std::size_t c = 1 + rng.below(max_c);
        const std::size_t r = 1 + rng.below(std::min(max_r, c));
        Gf2Matrix m = random_gf2_matrix(rng, r, c);
        if (gf2_rank(m) == r) return GeneratingMatrix(std::move(m));
    }
}

// ---- identity suites ------------------------------------------------------

/// 2^|V| Z(M; 2, gamma) equals the Ising partition function, exactly,
/// with per-element rational weights.
inline SuiteResult ising_identity_suite(std::size_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        BinaryMatroid m = random_matroid(rng, 5, 6);
        WeightMap w = random_weights(rng, m, false);
        const Rational lhs =
            pow2_rational(static_cast<std::int64_t>(m.rows())) * tutte_tilde(m, Rational(2), w);
        const Rational rhs = ising(m, w);
        res.record(lhs == rhs, "ising identity trial " + std::to_string(t));
    }
    return res;
}

/// Random-cluster form equals q^n times the subset expansion, exactly.
inline SuiteResult random_cluster_identity_suite(std::size_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        Graph g = random_graph(rng, 5, 7);
        BinaryMatroid m = from_graph(g);
        WeightMap w = random_weights(rng, m, false);
        Rational q = random_rational(rng, true);
        const Rational lhs = random_cluster_graph(g, q, w);
        const Rational rhs =
            rational_pow(q, static_cast<std::int64_t>(g.n)) * tutte_tilde(m, q, w);
        res.record(lhs == rhs, "random-cluster identity trial " + std::to_string(t));
    }
    return res;
}

/// Two-variable form equals (x-1)^r(E) times the subset expansion at
/// q = (x-1)(y-1), gamma = y-1, whenever that q is nonzero.
inline SuiteResult classical_form_identity_suite(std::size_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        BinaryMatroid m = random_matroid(rng, 5, 6);
        Rational x, y;
        do {
            x = random_rational(rng, false);
            y = random_rational(rng, false);
        } while ((x - 1) * (y - 1) == 0);
        const Rational q = (x - 1) * (y - 1);
        const Rational lhs = tutte_T(m, x, y);
        const Rational rhs = rational_pow(x - 1, static_cast<std::int64_t>(m.rank())) *
                             tutte_tilde(m, q, WeightMap::constant(m, y - 1));
        res.record(lhs == rhs, "classical form identity trial " + std::to_string(t));
    }
    return res;
}

/// Duality transfer: Z(M; q, gamma) = q^-r(E) (prod gamma_e) Z(M*; q, q/gamma_e),
/// plus double-dual rank equality on every subset.
inline SuiteResult duality_transfer_suite(std::size_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        BinaryMatroid m = random_matroid(rng, 5, 6);
        WeightMap w = random_weights(rng, m, true);
        Rational q = random_rational(rng, true);
        BinaryMatroid md = dual(m);
        WeightMap wd;
        Rational prod(1);
        for (ElementId e : m.ground()) {
            wd.set(e, q / w.at(e));
            prod *= w.at(e);
        }
        const Rational lhs = tutte_tilde(m, q, w);
        const Rational rhs = rational_pow(q, -static_cast<std::int64_t>(m.rank())) * prod *
                             tutte_tilde(md, q, wd);
        bool ok = (lhs == rhs);
        BinaryMatroid mdd = dual(md);
        const std::uint64_t subsets = std::uint64_t(1) << m.size();
        for (std::uint64_t mask = 0; ok && mask < subsets; ++mask)
            ok = m.rank_of_column_mask(mask) == mdd.rank_of_column_mask(mask);
        res.record(ok, "duality transfer trial " + std::to_string(t));
    }
    return res;
}

/// Parallel extension preserves the partition function exactly; the split
/// pair is a two-element circuit (or two loops when the column is zero).
inline SuiteResult parallel_extension_suite(std::size_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        BinaryMatroid m = random_matroid(rng, 4, 5);
        WeightMap w = random_weights(rng, m, false);
        const ElementId c = m.element_at(rng.below(m.size()));
        const Rational g1 = random_rational(rng, true, true);
        const Rational g2 = random_rational(rng, true, true);
        w.set(c, combine_parallel(g1, g2));
        const Rational q = random_rational(rng, true);
        const Rational before = tutte_tilde(m, q, w);
        auto ext = parallel_extend(m, w, c, g1, g2);
        const Rational after = tutte_tilde(ext.matroid, q, ext.weights);
        bool ok = (before == after);
        // side condition
        const ElementId e2 = ext.new_element;
        const std::vector<ElementId> pair{c, e2};
        const std::vector<ElementId> sc{c}, se{e2};
        if (m.is_loop(c)) {
            ok = ok && ext.matroid.rank_of(sc) == 0 && ext.matroid.rank_of(se) == 0;
        } else {
            ok = ok && ext.matroid.rank_of(sc) == 1 && ext.matroid.rank_of(se) == 1 &&
                 ext.matroid.rank_of(pair) == 1;
        }
        res.record(ok, "parallel extension trial " + std::to_string(t));
    }
    return res;
}

namespace detail {

// Dual rank via the complement formula, straight from the ground set.
inline std::size_t dual_rank_of(const BinaryMatroid& m, std::span<const ElementId> subset) {
    std::vector<ElementId> complement;
    std::unordered_set<ElementId> in(subset.begin(), subset.end());
    for (ElementId e : m.ground())
        if (!in.count(e)) complement.push_back(e);
    return subset.size() + m.rank_of(complement) - m.rank();
}

}  // namespace detail

/// Series extension satisfies the prefactor identity exactly; the split pair
/// is a cocircuit (or two coloops when the column was a coloop).
inline SuiteResult series_extension_suite(std::size_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        BinaryMatroid m = random_matroid(rng, 4, 5);
        WeightMap w = random_weights(rng, m, false);
        const ElementId c = m.element_at(rng.below(m.size()));
        Rational g1, g2, q;
        do {
            g1 = random_rational(rng, true, true);
            g2 = random_rational(rng, true, true);
            q = random_rational(rng, true);
        } while ((1 + q / g1) * (1 + q / g2) == 1);  // degenerate draw
        w.set(c, combine_series(q, g1, g2));
        const bool was_coloop = m.is_coloop(c);
        const Rational before = tutte_tilde(m, q, w);
        auto ext = series_extend(m, w, c, q, g1, g2);
        const Rational after = tutte_tilde(ext.matroid, q, ext.weights);
        bool ok = (ext.prefactor * before == after);
        const ElementId e2 = ext.new_element;
        const std::vector<ElementId> pair{c, e2};
        const std::vector<ElementId> sc{c}, se{e2};
        if (was_coloop) {
            ok = ok && ext.matroid.is_coloop(c) && ext.matroid.is_coloop(e2);
        } else {
            ok = ok && detail::dual_rank_of(ext.matroid, sc) == 1 &&
                 detail::dual_rank_of(ext.matroid, se) == 1 &&
                 detail::dual_rank_of(ext.matroid, pair) == 1;
        }
        res.record(ok, "series extension trial " + std::to_string(t));
    }
    return res;
}

// ---- weight-enumerator sweep ----------------------------------------------

struct GreeneSweep {
    std::uint64_t matrices_seen = 0;   // generating matrices enumerated
    std::uint64_t classes = 0;         // distinct row spaces
    std::uint64_t identity_checks = 0; // (class, lambda) pairs verified
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

namespace detail {

// (|S|, rank) tallies over all column subsets, by Gray-code enumeration.
inline std::vector<std::vector<std::uint64_t>> whitney_counts(const BinaryMatroid& m) {
    const std::size_t c = m.size();
    const std::size_t rmax = std::min(m.rows(), c);
    std::vector<std::vector<std::uint64_t>> counts(c + 1,
                                                   std::vector<std::uint64_t>(rmax + 1, 0));
    const std::uint64_t total = std::uint64_t(1) << c;
    for (std::uint64_t k = 0; k < total; ++k) {
        const std::uint64_t mask = tutte::detail::gray_code(k);
        ++counts[static_cast<std::size_t>(std::popcount(mask))][m.rank_of_column_mask(mask)];
    }
    return counts;
}

// Identity instance evaluated from precomputed per-class data.
inline bool greene_identity_holds(const std::vector<std::uint64_t>& weight_dist,
                                  const std::vector<std::vector<std::uint64_t>>& counts,
                                  std::size_t r, std::size_t c, const Rational& lambda) {
    Rational lhs(0), pw(1);
    for (std::size_t k = 0; k < weight_dist.size(); ++k) {
        if (weight_dist[k]) lhs += Rational(weight_dist[k]) * pw;
        pw *= lambda;
    }
    const Rational gamma = Rational(1) / lambda - 1;
    Rational z(0);
    for (std::size_t i = 0; i <= c; ++i) {
        const Rational gi = rational_pow(gamma, static_cast<std::int64_t>(i));
        for (std::size_t j = 0; j < counts[i].size(); ++j) {
            if (counts[i][j])
                z += Rational(counts[i][j]) * pow2_rational(-static_cast<std::int64_t>(j)) * gi;
        }
    }
    const Rational rhs = rational_pow(lambda, static_cast<std::int64_t>(c)) *
                         pow2_rational(static_cast<std::int64_t>(r)) * z;
    return lhs == rhs;
}

// Tiny row-echelon forms on byte-packed rows, for the exhaustive scan.
inline std::size_t tiny_rank(std::uint8_t* rows, std::size_t r) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < r; ++i) {
        std::uint8_t v = rows[i];
        for (std::size_t b = 0; b < rank; ++b) {
            const std::uint8_t lead = rows[b] & static_cast<std::uint8_t>(-rows[b]);
            if (v & lead) v ^= rows[b];
        }
        rows[i] = 0;
        if (v) rows[rank++] = v;
    }
    return rank;
}

inline std::uint64_t tiny_rref_key(const std::uint8_t* rows, std::size_t r, std::size_t c) {
    // Gauss-Jordan on byte rows; the packed result is the row-space key.
    std::uint8_t work[8];
    for (std::size_t i = 0; i < r; ++i) work[i] = rows[i];
    std::size_t next = 0;
    for (std::size_t col = 0; col < c && next < r; ++col) {
        const std::uint8_t bit = static_cast<std::uint8_t>(1u << col);
        std::size_t p = next;
        while (p < r && !(work[p] & bit)) ++p;
        if (p == r) continue;
        std::swap(work[next], work[p]);
        for (std::size_t i = 0; i < r; ++i)
            if (i != next && (work[i] & bit)) work[i] ^= work[next];
        ++next;
    }
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < r; ++i) key = (key << 8) | work[i];
    return key;
}

}  // namespace detail

/// Exhaustive weight-enumerator identity sweep: every 0/1 matrix with
/// independent rows up to (max_r, max_c) is enumerated; both identity sides
/// depend only on the row space, so each distinct row space is verified at
/// every lambda, and per block a few raw members are additionally pushed
/// through the public check as a cross-check of that invariance.
inline GreeneSweep greene_exhaustive_sweep(std::size_t max_r, std::size_t max_c,
                                           std::span<const Rational> lambdas, std::uint64_t seed,
                                           std::size_t member_spot_checks = 20) {
    if (max_c > 8 || max_r > 6) throw SizeError("exhaustive sweep bounds too large");
    GreeneSweep sweep;
    SplitMix64 rng(seed);
    for (std::size_t c = 1; c <= max_c; ++c) {
        for (std::size_t r = 1; r <= std::min(max_r, c); ++r) {
            const std::uint64_t total = std::uint64_t(1) << (r * c);
            std::unordered_set<std::uint64_t> seen;
            std::vector<std::uint64_t> members;  // raw encodings, reservoir for spot checks
            for (std::uint64_t bits = 0; bits < total; ++bits) {
                std::uint8_t rows[8];
                for (std::size_t i = 0; i < r; ++i)
                    rows[i] = static_cast<std::uint8_t>((bits >> (i * c)) & ((1u << c) - 1));
                std::uint8_t scratch[8];
                for (std::size_t i = 0; i < r; ++i) scratch[i] = rows[i];
                if (detail::tiny_rank(scratch, r) != r) continue;
                ++sweep.matrices_seen;
                const std::uint64_t key = detail::tiny_rref_key(rows, r, c);
                if (!seen.insert(key).second) {
                    if (members.size() < member_spot_checks && rng.below(97) < 7)
                        members.push_back(bits);
                    continue;
                }
                ++sweep.classes;
                Gf2Matrix gm(r, c);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j)
                        gm.set(i, j, (bits >> (i * c + j)) & 1);
                GeneratingMatrix code(gm);
                const auto dist = weight_distribution(code);
                const auto counts = detail::whitney_counts(BinaryMatroid(code.matrix()));
                for (const Rational& lambda : lambdas) {
                    const bool ok = detail::greene_identity_holds(dist, counts, r, c, lambda);
                    ++sweep.identity_checks;
                    if (!ok) {
                        if (sweep.failures == 0)
                            sweep.first_failure = "class failure at r=" + std::to_string(r) +
                                                  " c=" + std::to_string(c);
                        ++sweep.failures;
                    }
                }
            }
            // Raw member spot checks through the public operation.
            for (std::uint64_t bits : members) {
                Gf2Matrix gm(r, c);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j)
                        gm.set(i, j, (bits >> (i * c + j)) & 1);
                GeneratingMatrix code(gm);
                for (std::size_t li = 0; li < std::min<std::size_t>(lambdas.size(), 4); ++li) {
                    auto check = greene_check(code, lambdas[li]);
                    ++sweep.identity_checks;
                    if (!check.equal) {
                        if (sweep.failures == 0)
                            sweep.first_failure = "member failure at r=" + std::to_string(r) +
                                                  " c=" + std::to_string(c);
                        ++sweep.failures;
                    }
                }
            }
        }
    }
    return sweep;
}

/// Row-space representatives only (reduced-echelon enumeration); reaches
/// sizes where scanning every matrix is out of the question.
inline GreeneSweep greene_class_sweep(std::size_t max_r, std::size_t max_c,
                                      std::span<const Rational> lambdas) {
    if (max_c > 8 || max_r > 6) throw SizeError("class sweep bounds too large");
    GreeneSweep sweep;
    for (std::size_t c = 1; c <= max_c; ++c) {
        for (std::size_t r = 1; r <= std::min(max_r, c); ++r) {
            // choose pivot columns p_0 < ... < p_{r-1}
            std::vector<std::size_t> pivots(r);
            for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
            while (true) {
                // free positions: (i, j) with j > pivots[i], j not a pivot
                std::vector<std::pair<std::size_t, std::size_t>> free_cells;
                {
                    std::vector<bool> is_pivot(c, false);
                    for (std::size_t p : pivots) is_pivot[p] = true;
                    for (std::size_t i = 0; i < r; ++i)
                        for (std::size_t j = pivots[i] + 1; j < c; ++j)
                            if (!is_pivot[j]) free_cells.emplace_back(i, j);
                }
                const std::uint64_t combos = std::uint64_t(1) << free_cells.size();
                for (std::uint64_t assign = 0; assign < combos; ++assign) {
                    Gf2Matrix gm(r, c);
                    for (std::size_t i = 0; i < r; ++i) gm.set(i, pivots[i], true);
                    for (std::size_t fc = 0; fc < free_cells.size(); ++fc)
                        if (assign >> fc & 1) gm.set(free_cells[fc].first, free_cells[fc].second, true);
                    GeneratingMatrix code(gm);
                    ++sweep.classes;
                    ++sweep.matrices_seen;
                    const auto dist = weight_distribution(code);
                    const auto counts = detail::whitney_counts(BinaryMatroid(code.matrix()));
                    for (const Rational& lambda : lambdas) {
                        ++sweep.identity_checks;
                        if (!detail::greene_identity_holds(dist, counts, r, c, lambda)) {
                            if (sweep.failures == 0)
                                sweep.first_failure = "class failure at r=" + std::to_string(r) +
                                                      " c=" + std::to_string(c);
                            ++sweep.failures;
                        }
                    }
                }
                // next pivot combination
                bool advanced = false;
                for (std::size_t i = r; i-- > 0;) {
                    if (pivots[i] + (r - i) < c) {
                        ++pivots[i];
                        for (std::size_t j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) break;
            }
        }
    }
    return sweep;
}

// ---- code / group bridge ----------------------------------------------------

/// Random generating matrices through the full chain: group size 2^r, the
/// cycle-index / weight-enumerator bridge at each x, and an orbit-count
/// cross-check at x = 2 when the string space is small.
inline SuiteResult code_group_suite(std::size_t instances, std::uint64_t seed,
                                    std::span<const Rational> xs, bool burnside_crosscheck) {
    SplitMix64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < instances; ++t) {
        GeneratingMatrix code = random_code(rng, 5, 6);
        bool ok = true;
        for (const Rational& x : xs) {
            auto check = code_group_check(code, x);
            ok = ok && check.equal && check.group_size_is_2r;
        }
        if (burnside_crosscheck && 2 * code.length() <= 8) {
            PermutationGroup group = code_to_group(code);
            const Rational ci = cycle_index(group, Rational(2));
            const std::uint64_t orbits = orbit_count(group, 2);
            ok = ok && (ci == Rational(orbits));
        }
        res.record(ok, "code/group bridge trial " + std::to_string(t));
    }
    return res;
}

// ---- reduction structure ----------------------------------------------------

/// Column-parity invariant over sampled columns plus the exact even-subset
/// satisfaction counts (exhaustive at small arities).
inline SuiteResult reduction_structure_suite(std::size_t sampled_columns, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SuiteResult res;

    // Sampled columns through the real construction: even support inside the
    // tagged hyperedge, nothing outside.
    {
        Hypergraph h;
        h.n = 7;
        h.edges = {{0, 1, 2}, {1, 2, 3, 4}, {2, 3, 4}, {0, 5, 6}};
        // not uniform as a whole; sample per edge directly
        std::size_t sampled = 0;
        while (sampled < sampled_columns) {
            const auto& edge = h.edges[rng.below(h.edges.size())];
            SplitMix64 stream(derive_stream(seed, sampled, 0x636f6cULL));
            auto support = sample_even_subset(edge, stream);
            bool ok = support.size() % 2 == 0;
            for (std::uint32_t v : support)
                ok = ok && std::find(edge.begin(), edge.end(), v) != edge.end();
            res.record(ok, "column parity sample " + std::to_string(sampled));
            ++sampled;
        }
    }

    // Exhaustive half-satisfaction at arity 3 and 4: for every
    // non-monochromatic sigma exactly half of the even subsets satisfy the
    // parity equation; monochromatic sigma satisfies all of them.
    for (std::size_t t : {std::size_t(3), std::size_t(4)}) {
        const std::uint32_t sigma_count = 1u << t;
        const std::uint32_t subset_count = 1u << t;
        for (std::uint32_t sigma = 0; sigma < sigma_count; ++sigma) {
            std::size_t satisfied = 0, even_subsets = 0;
            for (std::uint32_t s = 0; s < subset_count; ++s) {
                if (std::popcount(s) % 2 != 0) continue;
                ++even_subsets;
                if (std::popcount(s & sigma) % 2 == 0) ++satisfied;
            }
            const bool mono = sigma == 0 || sigma == sigma_count - 1;
            const bool ok = mono ? satisfied == even_subsets
                                 : satisfied * 2 == even_subsets;
            res.record(ok, "even-subset satisfaction at t=" + std::to_string(t));
        }
    }
    return res;
}

}  // namespace tutte::verify
