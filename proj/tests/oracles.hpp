#pragma once

// Independent oracles used to pin expected values. Each re-derives its
// answer from first principles, away from the code paths it checks.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "pedigrad/segment.hpp"

namespace oracles {

// Every order-preserving f0 making (id, f0) a morphism src -> dst, found by
// exhaustive enumeration of monotone patch maps. Requires equal domains.
inline void collect_f0(const pedigrad::Segment& src, const pedigrad::Segment& dst, int patch,
                       int min_target, std::vector<int>& partial,
                       std::vector<std::vector<int>>& out) {
    if (patch > src.patch_count()) {
        out.push_back(partial);
        return;
    }
    for (int t = min_target; t <= dst.patch_count(); ++t) {
        // commuting square: every position of this patch must land in t
        bool ok = true;
        int first = src.patch_start(patch);
        int last = first + src.patch_sizes()[patch - 1] - 1;
        for (int pos = first; pos <= last && ok; ++pos)
            ok = dst.patch_of_position(pos) == t;
        // color condition
        if (ok)
            ok = src.order()->leq(dst.order()->name(dst.color_of_patch(t)),
                                  src.order()->name(src.color_of_patch(patch)));
        if (ok) {
            partial.push_back(t);
            collect_f0(src, dst, patch + 1, t, partial, out);
            partial.pop_back();
        }
    }
}

inline std::vector<std::vector<int>> all_quasi_homologous_f0(const pedigrad::Segment& src,
                                                             const pedigrad::Segment& dst) {
    std::vector<std::vector<int>> out;
    std::vector<int> partial;
    collect_f0(src, dst, 1, 1, partial, out);
    return out;
}

// The congruence generated by `pairs` on the full lattice of subsets of an
// n-atom universe (n small), computed by union-find with merge propagation:
// whenever u ~ v becomes known, u|z ~ v|z is enforced for every z.
class LatticeCongruence {
public:
    LatticeCongruence(int n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs)
        : parent_(std::size_t{1} << n) {
        std::iota(parent_.begin(), parent_.end(), 0);
        const std::uint32_t total = std::uint32_t{1} << n;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> work(pairs);
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            for (std::uint32_t z = 0; z < total; ++z) {
                std::uint32_t ra = find(a | z), rb = find(b | z);
                if (ra != rb) {
                    parent_[ra] = rb;
                    work.emplace_back(ra, rb);
                }
            }
        }
    }

    bool same(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }

private:
    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    std::vector<std::uint32_t> parent_;
};

// Direct transcription of the quotient definition: a and b are identified
// exactly when every additive map into a small test monoid that agrees on
// the generating pairs also agrees on (a, b).
//
// Maps into the two-element monoid B2 = {0, 1} correspond to subsets W of
// atoms (send a set to "does it meet W"). They suffice: every finite
// idempotent commutative monoid embeds into a power of B2 via x -> [x "not
// below" m] for its elements m, and maps into a power split componentwise.
// Two slightly larger targets (a three-chain and the four-element diamond)
// are quantified as well as a cross-check of that reduction.
inline bool hom_quantified_congruent(
    int n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, std::uint32_t a,
    std::uint32_t b) {
    const std::uint32_t total = std::uint32_t{1} << n;

    // B2 maps: one per subset W of atoms
    for (std::uint32_t w = 0; w < total; ++w) {
        bool coequalizes = true;
        for (auto [u, v] : pairs)
            if (((u & w) != 0) != ((v & w) != 0)) {
                coequalizes = false;
                break;
            }
        if (coequalizes && (((a & w) != 0) != ((b & w) != 0))) return false;
    }

    // extra targets: elements are bitmasks over k generators, addition is
    // bitwise-or; an assignment gives each atom an element
    auto quantify_target = [&](const std::vector<std::uint32_t>& carrier) -> bool {
        std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
        auto value_of = [&](std::uint32_t set) {
            std::uint32_t acc = 0;
            for (int i = 0; i < n; ++i)
                if (set & (std::uint32_t{1} << i)) acc |= carrier[choice[i]];
            return acc;
        };
        while (true) {
            bool coequalizes = true;
            for (auto [u, v] : pairs)
                if (value_of(u) != value_of(v)) {
                    coequalizes = false;
                    break;
                }
            if (coequalizes && value_of(a) != value_of(b)) return false;
            int i = 0;
            while (i < n && ++choice[i] == carrier.size()) choice[i++] = 0;
            if (i == n) break;
        }
        return true;
    };

    // chain 0 < x < y (y = x|y) and diamond {0, p, q, p|q}
    if (!quantify_target({0b00, 0b01, 0b11})) return false;
    if (!quantify_target({0b00, 0b01, 0b10, 0b11})) return false;
    return true;
}

} // namespace oracles
