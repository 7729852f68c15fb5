#include "pedigrad/icm.hpp"

namespace pedigrad {

AtomUniverse::AtomUniverse(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (!index_.emplace(atoms_[i], i).second)
            throw ValidationError("universe declares duplicate atom '" + atoms_[i] + "'");
}

std::optional<std::size_t> AtomUniverse::index_of(const std::string& atom) const {
    auto it = index_.find(atom);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

IcmElement::IcmElement(std::shared_ptr<const AtomUniverse> universe)
    : universe_(std::move(universe)), members_(universe_ ? universe_->size() : 0) {}

IcmElement::IcmElement(std::shared_ptr<const AtomUniverse> universe,
                       const std::vector<std::string>& atoms)
    : IcmElement(std::move(universe)) {
    for (const auto& a : atoms) {
        auto i = universe_->index_of(a);
        if (!i) throw ValidationError("atom '" + a + "' is not in the universe");
        members_.set(*i);
    }
}

std::vector<std::string> IcmElement::atom_names() const {
    std::vector<std::string> out;
    for (std::size_t i = members_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = members_.find_next(i))
        out.push_back(universe_->atom(i));
    return out;
}

std::string IcmElement::to_string() const {
    if (members_.none()) return "0";
    std::string out;
    for (std::size_t i = members_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = members_.find_next(i)) {
        if (!out.empty()) out += '+';
        out += universe_->atom(i);
    }
    return out;
}

static void require_same_universe(const IcmElement& x, const IcmElement& y) {
    if (!x.universe() || !y.universe() || !(*x.universe() == *y.universe()))
        throw ValidationError("ic-monoid elements live in different universes");
}

IcmElement add(const IcmElement& x, const IcmElement& y) {
    require_same_universe(x, y);
    IcmElement out = x;
    out.members_ |= y.members();
    return out;
}

IcmTuple add(const IcmTuple& x, const IcmTuple& y) {
    if (x.size() != y.size())
        throw ValidationError("tuples have different arity");
    std::vector<IcmElement> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(add(x.component(i), y.component(i)));
    return IcmTuple(std::move(out));
}

GeneratedCongruence::GeneratedCongruence(
    std::shared_ptr<const AtomUniverse> universe,
    std::vector<std::pair<IcmElement, IcmElement>> generating_pairs, std::size_t budget)
    : universe_(std::move(universe)), pairs_(std::move(generating_pairs)), budget_(budget) {
    for (const auto& [lhs, rhs] : pairs_) {
        if (!(*lhs.universe() == *universe_) || !(*rhs.universe() == *universe_))
            throw ValidationError("generating pair lives outside the congruence universe");
    }
}

IcmElement GeneratedCongruence::saturate(const IcmElement& x) const {
    if (!(*x.universe() == *universe_))
        throw ValidationError("element lives outside the congruence universe");
    Budget budget(budget_);
    boost::dynamic_bitset<> acc = x.members();
    bool grew = true;
    while (grew) {
        grew = false;
        budget.charge(pairs_.size() + 1, "congruence saturation");
        for (const auto& [lhs, rhs] : pairs_) {
            if (lhs.members().is_subset_of(acc) && !rhs.members().is_subset_of(acc)) {
                acc |= rhs.members();
                grew = true;
            }
            if (rhs.members().is_subset_of(acc) && !lhs.members().is_subset_of(acc)) {
                acc |= lhs.members();
                grew = true;
            }
        }
    }
    IcmElement out(x.universe());
    for (std::size_t i = acc.find_first(); i != boost::dynamic_bitset<>::npos;
         i = acc.find_next(i))
        out.insert(i);
    return out;
}

bool GeneratedCongruence::congruent(const IcmElement& x, const IcmElement& y) const {
    require_same_universe(x, y);
    return saturate(x) == saturate(y);
}

} // namespace pedigrad
