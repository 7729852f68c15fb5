#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pedigrad {

// A finite pre-ordered set: named elements plus a reflexive-transitive
// relation. The constructor closes an arbitrary relation list, so callers
// may declare only the generating pairs.
class PreOrder {
public:
    PreOrder(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& relations);

    // The pre-order {0 <= 1} used for plain black/white segments.
    static std::shared_ptr<const PreOrder> boolean();

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name(int index) const { return elements_.at(index); }

    std::optional<int> index_of(const std::string& name) const;
    // Throws ValidationError for unknown names.
    int require(const std::string& name) const;

    bool leq(int a, int b) const { return leq_[a][b]; }
    bool leq(const std::string& a, const std::string& b) const;

    // An element below every element, if one exists (first in declaration
    // order wins). Cone legs lower masked-out patches to this color.
    std::optional<int> bottom() const;

    bool operator==(const PreOrder& other) const {
        return elements_ == other.elements_ && leq_ == other.leq_;
    }

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> leq_;
};

} // namespace pedigrad
