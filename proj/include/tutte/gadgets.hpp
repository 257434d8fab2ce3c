#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/matroid.hpp"
#include "tutte/rational.hpp"
#include "tutte/weights.hpp"

namespace tutte {

/// Weight-combination rules for the two extension kinds:
///   parallel: 1 + gamma   = (1 + gamma_1)(1 + gamma_2)
///   series:   1 + q/gamma = (1 + q/gamma_1)(1 + q/gamma_2)
/// A series step multiplies the partition function by (1 + gamma_1/q + gamma_2/q).
inline Rational combine_parallel(const Rational& g1, const Rational& g2) {
    return (1 + g1) * (1 + g2) - 1;
}

inline Rational combine_series(const Rational& q, const Rational& g1, const Rational& g2) {
    if (q == 0 || g1 == 0 || g2 == 0) throw ParameterError("series combination needs q, gammas nonzero");
    const Rational prod = (1 + q / g1) * (1 + q / g2);
    if (prod == 1) throw ParameterError("series combination degenerate");
    return q / (prod - 1);
}

inline Rational series_prefactor(const Rational& q, const Rational& g1, const Rational& g2) {
    return 1 + g1 / q + g2 / q;
}

/// Solves the parallel rule for the partner weight: given gamma_c and
/// gamma_1, returns gamma_2 with (1+gamma_1)(1+gamma_2) = 1+gamma_c.
inline Rational solve_parallel_partner(const Rational& gamma_c, const Rational& g1) {
    if (g1 == -1) throw ParameterError("parallel partner undefined for gamma_1 = -1");
    return (1 + gamma_c) / (1 + g1) - 1;
}

/// Solves the series rule for the partner weight.
inline Rational solve_series_partner(const Rational& q, const Rational& gamma_c, const Rational& g1) {
    if (q == 0 || gamma_c == 0 || g1 == 0) throw ParameterError("series partner needs nonzero q, gammas");
    const Rational ratio = (1 + q / gamma_c) / (1 + q / g1);
    if (ratio == 1) throw ParameterError("series partner undefined");
    return q / (ratio - 1);
}

/// Series-parallel replacement recipe for one weighted element.  Leaves carry
/// the weight the final elements will have; internal nodes record how child
/// effective weights combine.  The accumulated prefactor is the product of
/// (1 + g1/q + g2/q) over the series nodes.
class GadgetPlan {
public:
    struct Node {
        enum class Kind { Leaf, Parallel, Series } kind;
        Rational effective;
        std::shared_ptr<const Node> left, right;
    };

    static GadgetPlan leaf(const Rational& weight, const Rational& q) {
        if (weight <= 0) throw ParameterError("plan leaf weight must be positive");
        GadgetPlan p;
        p.q_ = q;
        p.root_ = std::make_shared<Node>(Node{Node::Kind::Leaf, weight, nullptr, nullptr});
        p.leaves_ = 1;
        p.prefactor_ = 1;
        return p;
    }

    static GadgetPlan parallel(const GadgetPlan& a, const GadgetPlan& b) {
        require_same_q(a, b);
        GadgetPlan p;
        p.q_ = a.q_;
        p.root_ = std::make_shared<Node>(Node{Node::Kind::Parallel,
                                              combine_parallel(a.effective(), b.effective()),
                                              a.root_, b.root_});
        p.leaves_ = a.leaves_ + b.leaves_;
        p.prefactor_ = a.prefactor_ * b.prefactor_;
        return p;
    }

    static GadgetPlan series(const GadgetPlan& a, const GadgetPlan& b) {
        require_same_q(a, b);
        GadgetPlan p;
        p.q_ = a.q_;
        p.root_ = std::make_shared<Node>(Node{Node::Kind::Series,
                                              combine_series(a.q_, a.effective(), b.effective()),
                                              a.root_, b.root_});
        p.leaves_ = a.leaves_ + b.leaves_;
        p.prefactor_ =
            a.prefactor_ * b.prefactor_ * series_prefactor(a.q_, a.effective(), b.effective());
        return p;
    }

    const std::shared_ptr<const Node>& root() const { return root_; }
    const Rational& q() const { return q_; }
    const Rational& effective() const { return root_->effective; }
    const Rational& prefactor() const { return prefactor_; }
    std::size_t leaf_count() const { return leaves_; }

private:
    static void require_same_q(const GadgetPlan& a, const GadgetPlan& b) {
        if (a.q_ != b.q_) throw ParameterError("cannot combine plans with different q");
        if (!a.root_ || !b.root_) throw ParameterError("empty plan");
    }

    std::shared_ptr<const Node> root_;
    Rational q_ = 2;
    Rational prefactor_ = 1;
    std::size_t leaves_ = 0;
};

/// Nested parenthesized plan text: `P(a,b)` / `S(a,b)` with rational leaves.
inline std::string serialize_plan(const GadgetPlan& plan) {
    std::string out;
    auto walk = [&](auto&& self, const GadgetPlan::Node& n) -> void {
        switch (n.kind) {
            case GadgetPlan::Node::Kind::Leaf:
                out += to_string(n.effective);
                return;
            case GadgetPlan::Node::Kind::Parallel:
                out += "P(";
                break;
            case GadgetPlan::Node::Kind::Series:
                out += "S(";
                break;
        }
        self(self, *n.left);
        out += ",";
        self(self, *n.right);
        out += ")";
    };
    walk(walk, *plan.root());
    return out;
}

inline GadgetPlan parse_plan(std::string_view text, const Rational& q) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw InputError("plan parse error: expected '" + std::string(1, c) + "'");
        ++pos;
    };
    auto parse_node = [&](auto&& self) -> GadgetPlan {
        skip_ws();
        if (pos >= text.size()) throw InputError("plan parse error: unexpected end");
        const char c = text[pos];
        if (c == 'P' || c == 'S') {
            ++pos;
            expect('(');
            GadgetPlan a = self(self);
            expect(',');
            GadgetPlan b = self(self);
            expect(')');
            return c == 'P' ? GadgetPlan::parallel(a, b) : GadgetPlan::series(a, b);
        }
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/' ||
                text[pos] == '-' || text[pos] == '+'))
            ++pos;
        if (pos == start) throw InputError("plan parse error: expected leaf or P/S");
        return GadgetPlan::leaf(parse_rational(text.substr(start, pos - start)), q);
    };
    GadgetPlan p = parse_node(parse_node);
    skip_ws();
    if (pos != text.size()) throw InputError("plan parse error: trailing characters");
    return p;
}

struct ParallelExtension {
    BinaryMatroid matroid;
    WeightMap weights;
    ElementId new_element;
};

/// Parallel extension: the new column is a copy of column c; weights split as
/// c -> gamma_1, new element -> gamma_2.  The multivariate Tutte polynomial is
/// preserved exactly.
inline ParallelExtension parallel_extend(const BinaryMatroid& m, const WeightMap& w, ElementId c,
                                         const Rational& g1, const Rational& g2) {
    if (g1 <= 0 || g2 <= 0) throw InputError("parallel extension requires gamma_1, gamma_2 > 0");
    const Rational gamma_c = w.at(c);
    if ((1 + g1) * (1 + g2) != 1 + gamma_c)
        throw InputError("parallel extension weight equation violated");
    const std::size_t col = m.column_of(c);
    const ElementId fresh = m.fresh_element();
    std::vector<ElementId> ground = m.ground();
    ground.push_back(fresh);
    ParallelExtension out{
        BinaryMatroid(m.representation().with_copied_column(col), std::move(ground)), w, fresh};
    out.weights.set(c, g1);
    out.weights.set(fresh, g2);
    return out;
}

struct SeriesExtension {
    BinaryMatroid matroid;
    WeightMap weights;
    ElementId new_element;
    Rational prefactor;
};

/// Series extension: one extra row with ones at columns c and the new element
/// only, and one extra column with a one only in the new row.  Satisfies
/// prefactor * Z(M) = Z(M').
inline SeriesExtension series_extend(const BinaryMatroid& m, const WeightMap& w, ElementId c,
                                     const Rational& q, const Rational& g1, const Rational& g2) {
    if (q == 0) throw InputError("series extension requires q != 0");
    if (g1 <= 0 || g2 <= 0) throw InputError("series extension requires gamma_1, gamma_2 > 0");
    const Rational gamma_c = w.at(c);
    if (gamma_c == 0) throw InputError("series extension requires gamma_c != 0");
    if ((1 + q / g1) * (1 + q / g2) != 1 + q / gamma_c)
        throw InputError("series extension weight equation violated");
    const std::size_t col = m.column_of(c);
    const std::size_t rows = m.rows(), cols = m.size();
    Gf2Matrix rep(rows + 1, cols + 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) rep.set(i, j, m.representation().get(i, j));
    rep.set(rows, col, true);
    rep.set(rows, cols, true);
    const ElementId fresh = m.fresh_element();
    std::vector<ElementId> ground = m.ground();
    ground.push_back(fresh);
    SeriesExtension out{BinaryMatroid(std::move(rep), std::move(ground)), w, fresh,
                        series_prefactor(q, g1, g2)};
    out.weights.set(c, g1);
    out.weights.set(fresh, g2);
    return out;
}

struct PlanApplication {
    BinaryMatroid matroid;
    WeightMap weights;
    Rational prefactor;
};

/// Compiles a plan into repeated extensions on element c.  The element must
/// currently carry the plan's effective weight; afterwards every element the
/// plan produced carries its leaf weight, and
/// prefactor * Z(input) = Z(result) exactly.
inline PlanApplication apply_plan(const BinaryMatroid& m, const WeightMap& w, ElementId c,
                                  const GadgetPlan& plan, const Rational& q) {
    if (plan.q() != q) throw InputError("apply_plan: plan was built for a different q");
    if (w.at(c) != plan.effective())
        throw InputError("apply_plan: element weight must equal the plan's effective weight");
    PlanApplication state{m, w, Rational(1)};
    auto walk = [&](auto&& self, const GadgetPlan::Node& node, ElementId at) -> void {
        switch (node.kind) {
            case GadgetPlan::Node::Kind::Leaf:
                return;
            case GadgetPlan::Node::Kind::Parallel: {
                auto ext = parallel_extend(state.matroid, state.weights, at,
                                           node.left->effective, node.right->effective);
                state.matroid = std::move(ext.matroid);
                state.weights = std::move(ext.weights);
                self(self, *node.left, at);
                self(self, *node.right, ext.new_element);
                return;
            }
            case GadgetPlan::Node::Kind::Series: {
                auto ext = series_extend(state.matroid, state.weights, at, q,
                                         node.left->effective, node.right->effective);
                state.matroid = std::move(ext.matroid);
                state.weights = std::move(ext.weights);
                state.prefactor *= ext.prefactor;
                self(self, *node.left, at);
                self(self, *node.right, ext.new_element);
                return;
            }
        }
    };
    walk(walk, *plan.root(), c);
    return state;
}

/// Synthesis failure carries the closest effective weight reached.
struct SynthesisError : std::runtime_error {
    Rational best_found;
    explicit SynthesisError(const std::string& what, Rational best)
        : std::runtime_error(what), best_found(std::move(best)) {}
};

namespace detail {

// Series chain of k leaves of weight g: 1 + q/s_k = (1 + q/g)^k.
inline GadgetPlan series_chain(const Rational& g, const Rational& q, std::size_t k) {
    GadgetPlan p = GadgetPlan::leaf(g, q);
    for (std::size_t i = 1; i < k; ++i) p = GadgetPlan::series(GadgetPlan::leaf(g, q), p);
    return p;
}

// Bounded best-first search for an exact effective weight, combining known
// weights pairwise.  Returns the plan on an exact hit, nothing otherwise.
inline std::optional<GadgetPlan> exact_search(const Rational& target, const Rational& g,
                                              const Rational& q, std::size_t leaf_budget,
                                              std::size_t state_budget) {
    struct State {
        Rational w;
        GadgetPlan plan;
    };
    std::vector<State> states;
    std::map<Rational, std::size_t> best_leaves;
    std::vector<std::size_t> frontier;
    auto add = [&](GadgetPlan plan) -> std::optional<GadgetPlan> {
        const Rational w = plan.effective();
        if (w <= 0) return std::nullopt;
        auto it = best_leaves.find(w);
        if (it != best_leaves.end() && it->second <= plan.leaf_count()) return std::nullopt;
        if (w == target) return plan;
        best_leaves[w] = plan.leaf_count();
        states.push_back({w, std::move(plan)});
        frontier.push_back(states.size() - 1);
        return std::nullopt;
    };
    if (g == target) return GadgetPlan::leaf(g, q);
    add(GadgetPlan::leaf(g, q));
    // Expand closest-to-target states first.
    auto closer = [&](std::size_t a, std::size_t b) {
        return abs_rational(states[a].w - target) < abs_rational(states[b].w - target);
    };
    for (std::size_t round = 0; round < state_budget && !frontier.empty(); ++round) {
        std::sort(frontier.begin(), frontier.end(), closer);
        const std::size_t cur = frontier.front();
        frontier.erase(frontier.begin());
        const std::size_t n = states.size();
        for (std::size_t other = 0; other < n && states.size() < state_budget; ++other) {
            // copies: add() grows the vector, which would invalidate references
            const GadgetPlan a = states[cur].plan;
            const GadgetPlan b = states[other].plan;
            if (a.leaf_count() + b.leaf_count() > leaf_budget) continue;
            if (auto hit = add(GadgetPlan::parallel(a, b))) return hit;
            if (auto hit = add(GadgetPlan::series(a, b))) return hit;
        }
        if (states.size() >= state_budget) break;
    }
    return std::nullopt;
}

}  // namespace detail

/// Builds a plan whose leaves all carry weight gamma_avail and whose effective
/// weight lands in [window_lo, window_hi], preferring an exact hit on
/// window_hi.  Greedy construction: parallel-combine series chains, largest
/// admissible factor first.
inline GadgetPlan synthesize_in_window(const Rational& window_lo, const Rational& window_hi,
                                       const Rational& gamma_avail, const Rational& q,
                                       std::size_t max_size) {
    if (q != 2) throw ParameterError("weight synthesis is supported for q = 2 only");
    if (gamma_avail <= 0) throw ParameterError("available weight must be positive");
    if (!(window_lo <= window_hi) || window_lo <= 0)
        throw ParameterError("empty or nonpositive synthesis window");
    if (gamma_avail >= window_lo && gamma_avail <= window_hi)
        return GadgetPlan::leaf(gamma_avail, q);
    // The exact phase only makes sense for targets that small plans could
    // produce; enclosure endpoints with huge dyadic denominators go straight
    // to the greedy construction.
    if (denominator(window_hi) < (BigInt(1) << 24)) {
        if (auto exact = detail::exact_search(window_hi, gamma_avail, q,
                                              std::min<std::size_t>(max_size, 8), 400))
            return *exact;
    }

    // Greedy phase on 1 + gamma products.  Chain weights s_k decrease to 0,
    // so some admissible factor always exists while cur < W_lo.
    const Rational w_lo = 1 + (window_lo > 0 ? window_lo : Rational(0));
    const Rational w_hi = 1 + window_hi;
    constexpr std::size_t kMaxChain = 96;
    std::vector<Rational> chain_weight;  // chain_weight[k-1] = s_k
    {
        Rational t = 1 + q / gamma_avail;  // 1 + q/s_1
        Rational tk = t;
        for (std::size_t k = 1; k <= kMaxChain; ++k) {
            chain_weight.push_back(q / (tk - 1));
            tk *= t;
        }
    }
    std::optional<GadgetPlan> built;
    Rational cur(1);  // current 1 + effective
    std::size_t leaves_used = 0;
    while (cur < w_lo) {
        bool stepped = false;
        for (std::size_t k = 1; k <= kMaxChain; ++k) {
            const Rational factor = 1 + chain_weight[k - 1];
            if (cur * factor > w_hi) continue;
            if (leaves_used + k > max_size)
                throw SynthesisError("synthesis exceeded the plan size budget",
                                     built ? built->effective() : Rational(0));
            GadgetPlan piece = detail::series_chain(gamma_avail, q, k);
            built = built ? GadgetPlan::parallel(*built, piece) : piece;
            cur *= factor;
            leaves_used += k;
            stepped = true;
            break;
        }
        if (!stepped)
            throw SynthesisError("no admissible factor within the chain budget",
                                 built ? built->effective() : Rational(0));
    }
    return *built;
}

/// Plan for gamma_star in [gamma_target - pi, gamma_target] with all leaves
/// at gamma_avail (exact hits preferred).
inline GadgetPlan synthesize_weight(const Rational& gamma_target, const Rational& gamma_avail,
                                    const Rational& q, const Rational& pi, std::size_t max_size) {
    if (gamma_target <= 0) throw ParameterError("synthesis target must be positive");
    if (pi <= 0 || pi >= gamma_target)
        throw ParameterError("tolerance must satisfy 0 < pi < gamma_target");
    return synthesize_in_window(gamma_target - pi, gamma_target, gamma_avail, q, max_size);
}

}  // namespace tutte
