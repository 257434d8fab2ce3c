#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/gf2.hpp"
#include "tutte/matroid.hpp"
#include "tutte/partition.hpp"
#include "tutte/rational.hpp"
#include "tutte/weights.hpp"

namespace tutte {

/// Generating matrix of a binary linear code.  Row independence is enforced
/// at construction; dependent inputs are rejected rather than silently
/// reduced, so the 2^r codeword enumeration stays faithful.
class GeneratingMatrix {
public:
    explicit GeneratingMatrix(Gf2Matrix m) : m_(std::move(m)) {
        if (gf2_rank(m_) != m_.rows())
            throw InputError("generating matrix rows must be linearly independent");
        if (m_.rows() > 30) throw SizeError("generating matrix too large to enumerate codewords");
    }

    const Gf2Matrix& matrix() const { return m_; }
    std::size_t dimension() const { return m_.rows(); }
    std::size_t length() const { return m_.cols(); }

private:
    Gf2Matrix m_;
};

/// A_k = number of codewords of weight k, by Gray-code enumeration of all
/// 2^r row combinations.
inline std::vector<std::uint64_t> weight_distribution(const GeneratingMatrix& g) {
    const Gf2Matrix& m = g.matrix();
    const std::size_t wpr = m.words_per_row();
    std::vector<std::uint64_t> dist(g.length() + 1, 0);
    std::vector<std::uint64_t> word(wpr, 0);
    const std::uint64_t total = std::uint64_t(1) << g.dimension();
    for (std::uint64_t k = 0; k < total; ++k) {
        std::size_t weight = 0;
        for (std::uint64_t w : word) weight += static_cast<std::size_t>(std::popcount(w));
        ++dist[weight];
        if (k + 1 < total) {
            const unsigned flip = static_cast<unsigned>(std::countr_zero(k + 1));
            auto rw = m.row_words(flip);
            for (std::size_t w = 0; w < wpr; ++w) word[w] ^= rw[w];
        }
    }
    return dist;
}

/// Weight enumerator: sum over codewords of lambda^weight.
inline Rational weight_enumerator(const GeneratingMatrix& g, const Rational& lambda) {
    const auto dist = weight_distribution(g);
    Rational sum(0);
    Rational pw(1);
    for (std::size_t k = 0; k < dist.size(); ++k) {
        if (dist[k] != 0) sum += Rational(dist[k]) * pw;
        pw *= lambda;
    }
    return sum;
}

struct GreeneCheck {
    Rational lhs;  // weight enumerator, codeword route
    Rational rhs;  // lambda^c 2^r Z(M; 2, 1/lambda - 1), subset-expansion route
    bool equal = false;
};

/// Evaluates both routes of the weight-enumerator / Tutte-polynomial
/// identity independently and reports equality.
inline GreeneCheck greene_check(const GeneratingMatrix& g, const Rational& lambda) {
    if (lambda == 0) throw ParameterError("greene_check requires lambda != 0");
    GreeneCheck out;
    out.lhs = weight_enumerator(g, lambda);
    BinaryMatroid m(g.matrix());
    const Rational gamma = Rational(1) / lambda - 1;
    out.rhs = rational_pow(lambda, static_cast<std::int64_t>(g.length())) *
              pow2_rational(static_cast<std::int64_t>(g.dimension())) *
              tutte_tilde(m, Rational(2), WeightMap::constant(m, gamma));
    out.equal = (out.lhs == out.rhs);
    return out;
}

}  // namespace tutte
