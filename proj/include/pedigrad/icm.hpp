#pragma once

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pedigrad/errors.hpp"

namespace pedigrad {

// Generator set for a free idempotent commutative monoid. Atoms are opaque
// ordered names; elements of the monoid are finite subsets of them.
class AtomUniverse {
public:
    explicit AtomUniverse(std::vector<std::string> atoms);

    std::size_t size() const { return atoms_.size(); }
    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::string& atom(std::size_t i) const { return atoms_.at(i); }
    std::optional<std::size_t> index_of(const std::string& atom) const;

    bool operator==(const AtomUniverse& other) const { return atoms_ == other.atoms_; }

private:
    std::vector<std::string> atoms_;
    std::map<std::string, std::size_t> index_;
};

// An element of the free ic-monoid over a universe: a set of atoms, stored
// canonically as a bitset so equality is structural. Addition is union; the
// zero element is the empty set. x + x = x, x + y = y + x, x + 0 = x hold by
// construction and are asserted in the test suite.
class IcmElement {
public:
    IcmElement() = default;
    explicit IcmElement(std::shared_ptr<const AtomUniverse> universe);
    IcmElement(std::shared_ptr<const AtomUniverse> universe,
               const std::vector<std::string>& atoms);

    static IcmElement zero(std::shared_ptr<const AtomUniverse> universe) {
        return IcmElement(std::move(universe));
    }

    const std::shared_ptr<const AtomUniverse>& universe() const { return universe_; }
    const boost::dynamic_bitset<>& members() const { return members_; }
    bool empty() const { return members_.none(); }
    std::size_t count() const { return members_.count(); }
    bool contains(std::size_t atom_index) const { return members_.test(atom_index); }
    bool contains_all(const IcmElement& other) const { return other.members_.is_subset_of(members_); }

    void insert(std::size_t atom_index) { members_.set(atom_index); }

    std::vector<std::string> atom_names() const;
    // "a+b+c" in universe order; "0" for the zero element.
    std::string to_string() const;

    bool operator==(const IcmElement& other) const { return members_ == other.members_; }
    bool operator!=(const IcmElement& other) const { return !(*this == other); }
    bool operator<(const IcmElement& other) const { return members_ < other.members_; }

    friend IcmElement add(const IcmElement& x, const IcmElement& y);

private:
    std::shared_ptr<const AtomUniverse> universe_;
    boost::dynamic_bitset<> members_;
};

// Union. Throws ValidationError when the universes differ.
IcmElement add(const IcmElement& x, const IcmElement& y);

// A finite product of ic-monoid elements, possibly over distinct universes.
// Addition is componentwise; the zero is the tuple of empties.
class IcmTuple {
public:
    IcmTuple() = default;
    explicit IcmTuple(std::vector<IcmElement> components) : components_(std::move(components)) {}

    std::size_t size() const { return components_.size(); }
    const IcmElement& component(std::size_t i) const { return components_.at(i); }
    const std::vector<IcmElement>& components() const { return components_; }

    bool operator==(const IcmTuple& other) const { return components_ == other.components_; }
    bool operator<(const IcmTuple& other) const { return components_ < other.components_; }

private:
    std::vector<IcmElement> components_;
};

IcmTuple add(const IcmTuple& x, const IcmTuple& y);

// The smallest monoid congruence on the free ic-monoid containing a finite
// list of generating pairs. This is what a coequalizer of two maps into the
// free monoid identifies: the pairs (f(s), g(s)) over the generators of the
// source seed the relation, and the congruence laws close it.
class GeneratedCongruence {
public:
    GeneratedCongruence(std::shared_ptr<const AtomUniverse> universe,
                        std::vector<std::pair<IcmElement, IcmElement>> generating_pairs,
                        std::size_t budget = std::size_t{1} << 20);

    const std::shared_ptr<const AtomUniverse>& universe() const { return universe_; }
    const std::vector<std::pair<IcmElement, IcmElement>>& generating_pairs() const {
        return pairs_;
    }

    // Decides whether x and y fall in the same congruence class.
    //
    // Every class of a finitely generated semilattice congruence is closed
    // under addition, so it has a unique maximal element; saturate(x)
    // computes it by the fixpoint "while some generator side is contained
    // in the accumulator, add the other side". Two elements are congruent
    // exactly when their saturations coincide, which keeps the decision
    // polynomial even though the quotient lattice itself can be
    // exponential. Charges the budget per absorption pass.
    bool congruent(const IcmElement& x, const IcmElement& y) const;

    // The maximal element of x's class (the canonical representative).
    IcmElement saturate(const IcmElement& x) const;

private:
    std::shared_ptr<const AtomUniverse> universe_;
    std::vector<std::pair<IcmElement, IcmElement>> pairs_;
    std::size_t budget_;
};

// Injectivity / surjectivity of an explicitly tabulated map between finite
// carriers. Monomorphisms of ic-monoids are exactly the injective maps and
// epimorphisms include the surjective ones, so these are the desk-scale
// mono/epi tests.
template <class X, class Y>
std::optional<std::pair<X, X>> injectivity_counterexample(
    const std::vector<std::pair<X, Y>>& graph) {
    for (std::size_t i = 0; i < graph.size(); ++i)
        for (std::size_t j = i + 1; j < graph.size(); ++j)
            if (graph[i].second == graph[j].second && !(graph[i].first == graph[j].first))
                return std::pair<X, X>(graph[i].first, graph[j].first);
    return std::nullopt;
}

template <class X, class Y>
bool is_mono(const std::vector<std::pair<X, Y>>& graph) {
    return !injectivity_counterexample(graph).has_value();
}

template <class X, class Y>
bool is_epi(const std::vector<std::pair<X, Y>>& graph, const std::vector<Y>& target_carrier) {
    for (const Y& y : target_carrier) {
        bool hit = false;
        for (const auto& [x, fx] : graph)
            if (fx == y) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

} // namespace pedigrad
