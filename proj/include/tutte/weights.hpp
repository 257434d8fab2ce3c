#pragma once

#include <istream>
#include <map>
#include <string>

#include "tutte/errors.hpp"
#include "tutte/matroid.hpp"
#include "tutte/rational.hpp"

namespace tutte {

/// Exact rational weight per ground-set element (or per edge / hyperedge
/// index, which use the same id space).
class WeightMap {
public:
    WeightMap() = default;

    static WeightMap constant(const BinaryMatroid& m, const Rational& gamma) {
        WeightMap w;
        for (ElementId e : m.ground()) w.assoc_[e] = gamma;
        return w;
    }

    static WeightMap constant_ids(std::size_t count, const Rational& gamma) {
        WeightMap w;
        for (std::size_t i = 0; i < count; ++i) w.assoc_[static_cast<ElementId>(i)] = gamma;
        return w;
    }

    const Rational& at(ElementId e) const {
        auto it = assoc_.find(e);
        if (it == assoc_.end()) throw InputError("weight map missing element");
        return it->second;
    }

    void set(ElementId e, const Rational& v) { assoc_[e] = v; }
    void erase(ElementId e) { assoc_.erase(e); }
    std::size_t size() const { return assoc_.size(); }

    bool total_on(const BinaryMatroid& m) const {
        for (ElementId e : m.ground())
            if (!assoc_.count(e)) return false;
        return true;
    }

    auto begin() const { return assoc_.begin(); }
    auto end() const { return assoc_.end(); }

private:
    std::map<ElementId, Rational> assoc_;
};

/// Weights file: one rational per line, in column order.
inline WeightMap read_weights(std::istream& in, const BinaryMatroid& m) {
    WeightMap w;
    std::string line;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (!detail::next_data_line(in, line))
            throw InputError("weights: expected one rational per column");
        std::istringstream ls(line);
        std::string token;
        ls >> token;
        w.set(m.element_at(j), parse_rational(token));
        std::string extra;
        if (ls >> extra) throw InputError("weights: one rational per line expected");
    }
    return w;
}

}  // namespace tutte
