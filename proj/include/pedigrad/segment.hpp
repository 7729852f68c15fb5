#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pedigrad/preorder.hpp"

namespace pedigrad {

// A segment: a 1-based position range [1..n1] partitioned into contiguous
// patches, each patch carrying a color from a pre-ordered set. The partition
// encodes an order-preserving surjection [n1] -> [n0] (n0 = patch count)
// whose fibers are the patches; storing patch sizes makes that surjection
// canonical. An empty segment (no positions, no patches) is valid.
class Segment {
public:
    Segment() = default;

    // Validates patch sizes (all >= 1) and colors (names in the pre-order,
    // one per patch). Throws ValidationError.
    static Segment make(std::vector<int> patch_sizes,
                        const std::vector<std::string>& colors,
                        std::shared_ptr<const PreOrder> order);

    // Same, with colors given as pre-order indices.
    static Segment make_indexed(std::vector<int> patch_sizes, std::vector<int> colors,
                                std::shared_ptr<const PreOrder> order);

    int domain_size() const { return domain_size_; }
    int patch_count() const { return static_cast<int>(patch_sizes_.size()); }
    const std::vector<int>& patch_sizes() const { return patch_sizes_; }
    const std::vector<int>& colors() const { return colors_; }
    const std::shared_ptr<const PreOrder>& order() const { return order_; }

    int color_of_patch(int patch) const { return colors_.at(patch - 1); }
    // The surjection t: position (1-based) -> patch (1-based).
    int patch_of_position(int pos) const;
    // First position of a patch (1-based).
    int patch_start(int patch) const { return starts_.at(patch - 1); }

    // "(3:1)(2:0)..." — the external literal syntax.
    std::string literal() const;

    // Segments compare by shape and color names, so values built over equal
    // pre-orders are interchangeable.
    bool operator==(const Segment& other) const;
    bool operator<(const Segment& other) const;

private:
    std::shared_ptr<const PreOrder> order_;
    std::vector<int> patch_sizes_;
    std::vector<int> colors_; // indices into order_
    std::vector<int> starts_;
    int domain_size_ = 0;
};

// A morphism of segments: a strictly increasing position map f1 together
// with an order-preserving patch map f0 that commute with the two patch
// surjections and may only lower colors (dst color <= src color).
struct SegmentMorphism {
    Segment src;
    Segment dst;
    std::vector<int> f1; // size src.domain_size(), values in [1..dst.domain_size()]
    std::vector<int> f0; // size src.patch_count(), values in [1..dst.patch_count()]
};

// Validates the pieces of a morphism; throws ValidationError naming the
// first failing condition.
SegmentMorphism check_morphism(const Segment& src, const Segment& dst,
                               std::vector<int> f1, std::vector<int> f0);

SegmentMorphism identity_morphism(const Segment& seg);

// g after f. Throws ValidationError if f.dst != g.src.
SegmentMorphism compose(const SegmentMorphism& f, const SegmentMorphism& g);

// The unique morphism src -> dst with f1 = id, when it exists. Segments of
// equal domain admit at most one morphism at all, so this is *the* morphism
// between them. Throws ValidationError when the domains differ (a distinct
// condition from "no morphism exists", which returns nullopt).
std::optional<SegmentMorphism> unique_quasi_homologous_morphism(const Segment& src,
                                                                const Segment& dst);

} // namespace pedigrad
