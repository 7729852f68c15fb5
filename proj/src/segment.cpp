#include "pedigrad/segment.hpp"

#include <algorithm>
#include <numeric>

#include "pedigrad/errors.hpp"

namespace pedigrad {

Segment Segment::make(std::vector<int> patch_sizes, const std::vector<std::string>& colors,
                      std::shared_ptr<const PreOrder> order) {
    if (!order) throw ValidationError("segment requires a pre-order");
    std::vector<int> indexed;
    indexed.reserve(colors.size());
    for (const auto& c : colors) indexed.push_back(order->require(c));
    return make_indexed(std::move(patch_sizes), std::move(indexed), std::move(order));
}

Segment Segment::make_indexed(std::vector<int> patch_sizes, std::vector<int> colors,
                              std::shared_ptr<const PreOrder> order) {
    if (!order) throw ValidationError("segment requires a pre-order");
    if (patch_sizes.size() != colors.size())
        throw ValidationError("segment has " + std::to_string(patch_sizes.size()) +
                              " patches but " + std::to_string(colors.size()) + " colors");
    for (std::size_t i = 0; i < patch_sizes.size(); ++i) {
        if (patch_sizes[i] < 1)
            throw ValidationError("patch " + std::to_string(i + 1) + " has non-positive length");
        if (colors[i] < 0 || colors[i] >= static_cast<int>(order->size()))
            throw ValidationError("patch " + std::to_string(i + 1) + " has an out-of-range color");
    }
    Segment s;
    s.order_ = std::move(order);
    s.patch_sizes_ = std::move(patch_sizes);
    s.colors_ = std::move(colors);
    s.starts_.resize(s.patch_sizes_.size());
    int pos = 1;
    for (std::size_t i = 0; i < s.patch_sizes_.size(); ++i) {
        s.starts_[i] = pos;
        pos += s.patch_sizes_[i];
    }
    s.domain_size_ = pos - 1;
    return s;
}

int Segment::patch_of_position(int pos) const {
    if (pos < 1 || pos > domain_size_)
        throw ValidationError("position " + std::to_string(pos) + " outside domain [1.." +
                              std::to_string(domain_size_) + "]");
    auto it = std::upper_bound(starts_.begin(), starts_.end(), pos);
    return static_cast<int>(it - starts_.begin());
}

std::string Segment::literal() const {
    std::string out;
    for (int p = 1; p <= patch_count(); ++p) {
        out += '(';
        out += std::to_string(patch_sizes_[p - 1]);
        out += ':';
        out += order_->name(colors_[p - 1]);
        out += ')';
    }
    return out;
}

bool Segment::operator==(const Segment& other) const {
    if (patch_sizes_ != other.patch_sizes_) return false;
    if (colors_.size() != other.colors_.size()) return false;
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (order_->name(colors_[i]) != other.order_->name(other.colors_[i])) return false;
    return true;
}

bool Segment::operator<(const Segment& other) const {
    if (patch_sizes_ != other.patch_sizes_) return patch_sizes_ < other.patch_sizes_;
    std::vector<std::string> a, b;
    for (int c : colors_) a.push_back(order_->name(c));
    for (int c : other.colors_) b.push_back(other.order_->name(c));
    return a < b;
}

SegmentMorphism check_morphism(const Segment& src, const Segment& dst, std::vector<int> f1,
                               std::vector<int> f0) {
    if (static_cast<int>(f1.size()) != src.domain_size())
        throw ValidationError("f1 must assign every source position");
    if (static_cast<int>(f0.size()) != src.patch_count())
        throw ValidationError("f0 must assign every source patch");

    for (std::size_t i = 0; i < f1.size(); ++i) {
        if (f1[i] < 1 || f1[i] > dst.domain_size())
            throw ValidationError("f1 sends position " + std::to_string(i + 1) +
                                  " outside the target domain");
        if (i > 0 && f1[i] <= f1[i - 1])
            throw ValidationError("f1 is not strictly increasing at position " +
                                  std::to_string(i + 1));
    }
    for (std::size_t p = 0; p < f0.size(); ++p) {
        if (f0[p] < 1 || f0[p] > dst.patch_count())
            throw ValidationError("f0 sends patch " + std::to_string(p + 1) +
                                  " outside the target patches");
        if (p > 0 && f0[p] < f0[p - 1])
            throw ValidationError("f0 is not order-preserving at patch " + std::to_string(p + 1));
    }

    for (int pos = 1; pos <= src.domain_size(); ++pos) {
        int via_src = f0[src.patch_of_position(pos) - 1];
        int via_dst = dst.patch_of_position(f1[pos - 1]);
        if (via_src != via_dst)
            throw ValidationError("patch square does not commute at position " +
                                  std::to_string(pos));
    }

    const auto& order = *src.order();
    for (int p = 1; p <= src.patch_count(); ++p) {
        int src_color = src.color_of_patch(p);
        int dst_color = dst.color_of_patch(f0[p - 1]);
        if (!order.leq(dst.order()->name(dst_color), order.name(src_color)))
            throw ValidationError("color condition fails at source patch " + std::to_string(p) +
                                  ": " + dst.order()->name(dst_color) + " is not below " +
                                  order.name(src_color));
    }

    return SegmentMorphism{src, dst, std::move(f1), std::move(f0)};
}

SegmentMorphism identity_morphism(const Segment& seg) {
    std::vector<int> f1(seg.domain_size()), f0(seg.patch_count());
    std::iota(f1.begin(), f1.end(), 1);
    std::iota(f0.begin(), f0.end(), 1);
    return SegmentMorphism{seg, seg, std::move(f1), std::move(f0)};
}

SegmentMorphism compose(const SegmentMorphism& f, const SegmentMorphism& g) {
    if (!(f.dst == g.src)) throw ValidationError("morphisms do not compose: middle segments differ");
    std::vector<int> f1(f.f1.size()), f0(f.f0.size());
    for (std::size_t i = 0; i < f.f1.size(); ++i) f1[i] = g.f1[f.f1[i] - 1];
    for (std::size_t p = 0; p < f.f0.size(); ++p) f0[p] = g.f0[f.f0[p] - 1];
    return check_morphism(f.src, g.dst, std::move(f1), std::move(f0));
}

std::optional<SegmentMorphism> unique_quasi_homologous_morphism(const Segment& src,
                                                                const Segment& dst) {
    if (src.domain_size() != dst.domain_size())
        throw ValidationError("segments are not quasi-homologous: domains " +
                              std::to_string(src.domain_size()) + " and " +
                              std::to_string(dst.domain_size()) + " differ");

    // With f1 = id, f0 exists iff every source patch sits inside one target
    // patch; the induced patch map is then monotone automatically.
    std::vector<int> f0(src.patch_count());
    for (int p = 1; p <= src.patch_count(); ++p) {
        int first = src.patch_start(p);
        int last = first + src.patch_sizes()[p - 1] - 1;
        int target = dst.patch_of_position(first);
        if (dst.patch_of_position(last) != target) return std::nullopt;
        f0[p - 1] = target;
    }
    for (int p = 1; p <= src.patch_count(); ++p) {
        if (!src.order()->leq(dst.order()->name(dst.color_of_patch(f0[p - 1])),
                              src.order()->name(src.color_of_patch(p))))
            return std::nullopt;
    }

    std::vector<int> f1(src.domain_size());
    std::iota(f1.begin(), f1.end(), 1);
    return SegmentMorphism{src, dst, std::move(f1), std::move(f0)};
}

} // namespace pedigrad
