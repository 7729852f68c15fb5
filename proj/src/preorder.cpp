#include "pedigrad/preorder.hpp"

#include <set>

#include "pedigrad/errors.hpp"

namespace pedigrad {

PreOrder::PreOrder(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& relations)
    : elements_(std::move(elements)) {
    std::set<std::string> seen;
    for (const auto& e : elements_)
        if (!seen.insert(e).second)
            throw ValidationError("pre-order declares duplicate element '" + e + "'");

    const std::size_t n = elements_.size();
    leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
    for (const auto& [lo, hi] : relations) leq_[require(lo)][require(hi)] = true;

    // Warshall closure; idempotent on already-closed input.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq_[k][j]) leq_[i][j] = true;
}

std::shared_ptr<const PreOrder> PreOrder::boolean() {
    static const auto instance =
        std::make_shared<const PreOrder>(std::vector<std::string>{"0", "1"},
                                         std::vector<std::pair<std::string, std::string>>{{"0", "1"}});
    return instance;
}

std::optional<int> PreOrder::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

int PreOrder::require(const std::string& name) const {
    if (auto i = index_of(name)) return *i;
    throw ValidationError("color '" + name + "' is not an element of the pre-order");
}

bool PreOrder::leq(const std::string& a, const std::string& b) const {
    return leq(require(a), require(b));
}

std::optional<int> PreOrder::bottom() const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        bool below_all = true;
        for (std::size_t j = 0; j < elements_.size() && below_all; ++j)
            below_all = leq_[i][j];
        if (below_all) return static_cast<int>(i);
    }
    return std::nullopt;
}

} // namespace pedigrad
