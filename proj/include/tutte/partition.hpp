#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/hypergraph.hpp"
#include "tutte/interval.hpp"
#include "tutte/matroid.hpp"
#include "tutte/parallel.hpp"
#include "tutte/rational.hpp"
#include "tutte/weights.hpp"

namespace tutte {

// Enumeration budgets.  Every evaluator here is deliberately brute force,
// so refuse instances whose state space cannot be walked at desk scale.
inline constexpr std::size_t kMaxSubsetCols = 26;    // 2^26 subsets
inline constexpr std::size_t kMaxSpectrumRows = 30;  // 2^30 spin assignments
inline constexpr std::uint64_t kMaxSigmaStates = std::uint64_t(1) << 26;

namespace detail {

inline std::uint64_t gray_code(std::uint64_t k) { return k ^ (k >> 1); }

// Product of gamma_e over the columns selected by mask, weights in column order.
inline Rational mask_weight_product(const std::vector<Rational>& gammas, std::uint64_t mask) {
    Rational prod(1);
    while (mask) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(mask));
        prod *= gammas[j];
        mask &= mask - 1;
    }
    return prod;
}

inline std::vector<Rational> weights_in_column_order(const BinaryMatroid& m, const WeightMap& w) {
    std::vector<Rational> gammas;
    gammas.reserve(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) gammas.push_back(w.at(m.element_at(j)));
    return gammas;
}

}  // namespace detail

/// Multivariate Tutte polynomial: sum over all column subsets S of
/// q^-r(S) * prod_{e in S} gamma_e, by Gray-code subset enumeration with a
/// fresh rank query per subset.
inline Rational tutte_tilde(const BinaryMatroid& m, const Rational& q, const WeightMap& w,
                            unsigned threads = 1) {
    if (q == 0) throw ParameterError("tutte_tilde requires q != 0");
    if (!w.total_on(m)) throw InputError("weight map must be total on the ground set");
    if (m.size() > kMaxSubsetCols) throw SizeError("tutte_tilde: too many columns to enumerate");
    const auto gammas = detail::weights_in_column_order(m, w);
    // q^-r(S) as a table over ranks; r(S) <= min(rows, cols).
    const std::size_t max_rank = std::min(m.rows(), m.size());
    std::vector<Rational> inv_q_pow(max_rank + 1);
    inv_q_pow[0] = 1;
    for (std::size_t r = 1; r <= max_rank; ++r) inv_q_pow[r] = inv_q_pow[r - 1] / q;
    const std::uint64_t total = std::uint64_t(1) << m.size();
    auto partials = detail::run_chunked<Rational>(
        total, threads, [&](std::uint64_t begin, std::uint64_t end, Rational& acc) {
            acc = 0;
            for (std::uint64_t k = begin; k < end; ++k) {
                const std::uint64_t mask = detail::gray_code(k);
                acc += inv_q_pow[m.rank_of_column_mask(mask)] *
                       detail::mask_weight_product(gammas, mask);
            }
        });
    Rational sum(0);
    for (const auto& p : partials) sum += p;
    return sum;
}

/// Classical two-variable form, evaluated directly from its subset expansion
/// (valid at every (x, y), including (x-1)(y-1) = 0, with 0^0 = 1).
inline Rational tutte_T(const BinaryMatroid& m, const Rational& x, const Rational& y,
                        unsigned threads = 1) {
    if (m.size() > kMaxSubsetCols) throw SizeError("tutte_T: too many columns to enumerate");
    const std::size_t rE = m.rank();
    const Rational xm1 = x - 1, ym1 = y - 1;
    const std::uint64_t total = std::uint64_t(1) << m.size();
    auto partials = detail::run_chunked<Rational>(
        total, threads, [&](std::uint64_t begin, std::uint64_t end, Rational& acc) {
            acc = 0;
            for (std::uint64_t k = begin; k < end; ++k) {
                const std::uint64_t mask = detail::gray_code(k);
                const std::size_t r = m.rank_of_column_mask(mask);
                const std::size_t sz = static_cast<std::size_t>(std::popcount(mask));
                acc += rational_pow(xm1, static_cast<std::int64_t>(rE - r)) *
                       rational_pow(ym1, static_cast<std::int64_t>(sz - r));
            }
        });
    Rational sum(0);
    for (const auto& p : partials) sum += p;
    return sum;
}

/// Random-cluster form for graphs: sum over edge subsets of
/// q^kappa(V,S) * prod gamma_e.  Defined for every q.
inline Rational random_cluster_graph(const Graph& g, const Rational& q, const WeightMap& w,
                                     unsigned threads = 1) {
    if (g.edges.size() > kMaxSubsetCols)
        throw SizeError("random_cluster_graph: too many edges to enumerate");
    std::vector<Rational> gammas;
    gammas.reserve(g.edges.size());
    for (std::size_t j = 0; j < g.edges.size(); ++j)
        gammas.push_back(w.at(static_cast<ElementId>(j)));
    const std::uint64_t total = std::uint64_t(1) << g.edges.size();
    auto partials = detail::run_chunked<Rational>(
        total, threads, [&](std::uint64_t begin, std::uint64_t end, Rational& acc) {
            acc = 0;
            for (std::uint64_t k = begin; k < end; ++k) {
                const std::uint64_t mask = detail::gray_code(k);
                acc += rational_pow(q, static_cast<std::int64_t>(component_count(g, mask))) *
                       detail::mask_weight_product(gammas, mask);
            }
        });
    Rational sum(0);
    for (const auto& p : partials) sum += p;
    return sum;
}

namespace detail {

// Walks all sigma in {0,1}^rows in Gray-code order; visit(satisfied_mask)
// receives the bit mask of satisfied column equations (over the first word;
// callers with more than 64 columns use the word-vector variant below).
template <class Visit>
void for_each_sigma_sat(const Gf2Matrix& rep, std::uint64_t begin, std::uint64_t end,
                        Visit visit) {
    const std::size_t wpr = rep.words_per_row();
    std::vector<std::uint64_t> v(wpr, 0);
    // Start from the row combination selected by gray_code(begin).
    std::uint64_t start = gray_code(begin);
    for (std::size_t i = 0; i < rep.rows(); ++i)
        if (start >> i & 1) {
            auto rw = rep.row_words(i);
            for (std::size_t w = 0; w < wpr; ++w) v[w] ^= rw[w];
        }
    for (std::uint64_t k = begin; k < end; ++k) {
        visit(v);
        const std::uint64_t next = k + 1;
        if (next < end) {
            const unsigned flip = static_cast<unsigned>(std::countr_zero(next));
            auto rw = rep.row_words(flip);
            for (std::size_t w = 0; w < wpr; ++w) v[w] ^= rw[w];
        }
    }
}

}  // namespace detail

/// Counts of spin assignments by number of satisfied column equations:
/// coeffs[k] = #{sigma : sat(sigma) = k}.  The Ising partition function with
/// constant weight gamma is sum_k coeffs[k] * (1+gamma)^k.
struct SatSpectrum {
    std::vector<std::uint64_t> coeffs;  // length cols + 1

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

inline SatSpectrum sat_spectrum(const BinaryMatroid& m, unsigned threads = 1) {
    if (m.rows() > kMaxSpectrumRows)
        throw SizeError("sat_spectrum: too many rows to enumerate assignments");
    const std::size_t cols = m.size();
    const std::uint64_t total = std::uint64_t(1) << m.rows();
    const Gf2Matrix& rep = m.representation();
    auto partials = detail::run_chunked<std::vector<std::uint64_t>>(
        total, threads, [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& hist) {
            hist.assign(cols + 1, 0);
            detail::for_each_sigma_sat(rep, begin, end, [&](const std::vector<std::uint64_t>& v) {
                std::size_t unsat = 0;
                for (std::uint64_t word : v) unsat += static_cast<std::size_t>(std::popcount(word));
                ++hist[cols - unsat];
            });
        });
    SatSpectrum s;
    s.coeffs.assign(cols + 1, 0);
    for (const auto& h : partials)
        for (std::size_t k = 0; k <= cols; ++k) s.coeffs[k] += h[k];
    return s;
}

/// Potts partition function of a represented matroid via the per-column
/// linear equations over the representation field.  Binary representations
/// support q = 1 (every equation trivially satisfied by the single all-zero
/// assignment space) and q = 2.
inline Rational potts_matroid(const BinaryMatroid& m, unsigned q, const WeightMap& w,
                              unsigned threads = 1) {
    if (!w.total_on(m)) throw InputError("weight map must be total on the ground set");
    if (q == 0) throw ParameterError("potts_matroid requires q >= 1");
    if (q > 2)
        throw ParameterError("potts_matroid: q > 2 needs a GF(q) representation; only GF(2) is supported");
    const auto gammas = detail::weights_in_column_order(m, w);
    if (q == 1) {
        Rational prod(1);
        for (const auto& g : gammas) prod *= (1 + g);
        return prod;
    }
    if (m.rows() > kMaxSpectrumRows)
        throw SizeError("potts_matroid: too many rows to enumerate assignments");
    if (m.size() > 64 * 1024) throw SizeError("potts_matroid: too many columns");
    const std::uint64_t total = std::uint64_t(1) << m.rows();
    const Gf2Matrix& rep = m.representation();
    const std::size_t cols = m.size();
    auto partials = detail::run_chunked<Rational>(
        total, threads, [&](std::uint64_t begin, std::uint64_t end, Rational& acc) {
            acc = 0;
            detail::for_each_sigma_sat(rep, begin, end, [&](const std::vector<std::uint64_t>& v) {
                Rational prod(1);
                for (std::size_t j = 0; j < cols; ++j)
                    if (!(v[j / 64] >> (j % 64) & 1)) prod *= (1 + gammas[j]);
                acc += prod;
            });
        });
    Rational sum(0);
    for (const auto& p : partials) sum += p;
    return sum;
}

/// Ising partition function: the q = 2 Potts partition function.
inline Rational ising(const BinaryMatroid& m, const WeightMap& w, unsigned threads = 1) {
    return potts_matroid(m, 2, w, threads);
}

/// Potts partition function of a hypergraph: sum over colourings sigma of
/// prod_f (1 + gamma_f * [f monochromatic under sigma]).
inline Rational hypergraph_potts(const Hypergraph& h, unsigned q, const WeightMap& w,
                                 unsigned threads = 1) {
    if (q == 0) throw ParameterError("hypergraph_potts requires q >= 1");
    h.validate();
    for (std::size_t f = 0; f < h.edges.size(); ++f) w.at(static_cast<ElementId>(f));
    // q^n states; refuse beyond the budget.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < h.n; ++i) {
        if (total > kMaxSigmaStates / q) throw SizeError("hypergraph_potts: too many colourings");
        total *= q;
    }
    auto partials = detail::run_chunked<Rational>(
        total, threads, [&](std::uint64_t begin, std::uint64_t end, Rational& acc) {
            acc = 0;
            std::vector<std::uint32_t> sigma(h.n, 0);
            std::uint64_t code = begin;
            for (std::size_t i = 0; i < h.n; ++i) {
                sigma[i] = static_cast<std::uint32_t>(code % q);
                code /= q;
            }
            for (std::uint64_t k = begin; k < end; ++k) {
                Rational prod(1);
                for (std::size_t f = 0; f < h.edges.size(); ++f) {
                    const auto& edge = h.edges[f];
                    bool mono = true;
                    for (std::size_t i = 1; i < edge.size(); ++i)
                        if (sigma[edge[i]] != sigma[edge[0]]) {
                            mono = false;
                            break;
                        }
                    if (mono) prod *= (1 + w.at(static_cast<ElementId>(f)));
                }
                acc += prod;
                // increment sigma as a base-q counter
                for (std::size_t i = 0; i < h.n; ++i) {
                    if (++sigma[i] < q) break;
                    sigma[i] = 0;
                }
            }
        });
    Rational sum(0);
    for (const auto& p : partials) sum += p;
    return sum;
}

/// Exact evaluation of the spectrum polynomial at a rational point.
inline Interval eval_spectrum_at(const SatSpectrum& s, const Rational& z) {
    Rational sum(0);
    Rational zk(1);
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        if (s.coeffs[k] != 0) sum += Rational(s.coeffs[k]) * zk;
        zk *= z;
    }
    return Interval::point(sum);
}

/// Rigorous enclosure of the spectrum polynomial at z = 2^{num/den}.
/// Terms whose exponent k*num/den is an integer contribute exactly; the
/// rest go through a dyadic enclosure of 2^{1/den}, so the result is a point
/// whenever every populated term has an integer exponent.
inline Interval eval_spectrum_at_pow2(const SatSpectrum& s, std::int64_t num, std::int64_t den,
                                      unsigned precision_bits) {
    if (precision_bits < 16) throw ParameterError("precision_bits must be at least 16");
    if (den <= 0 || num < 0) throw ParameterError("eval_spectrum_at_pow2: exponent must be nonnegative");
    const std::int64_t g = std::gcd(num, den);
    const std::int64_t u = num / g, v = den / g;
    Interval root = Interval::point(Rational(1));
    if (v > 1) root = pow2_enclosure(1, v, precision_bits);
    Interval sum = Interval::point(Rational(0));
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        if (s.coeffs[k] == 0) continue;
        const std::int64_t e = u * static_cast<std::int64_t>(k);
        const std::int64_t whole = e / v, frac = e % v;
        Interval term = Interval::point(pow2_rational(whole));
        if (frac != 0) term = term * pow_nonneg(root, static_cast<std::uint64_t>(frac));
        sum = sum + Rational(s.coeffs[k]) * term;
    }
    return sum;
}

}  // namespace tutte
