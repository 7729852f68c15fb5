#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pedigrad/genome.hpp"
#include "pedigrad/icm.hpp"
#include "pedigrad/segment.hpp"

namespace pedigrad {

// A wide span of quasi-homologous segments: a peak together with an ordered
// family of legs of the same domain, each reached by the unique morphism
// from the peak. Models one crossover topology.
struct Cone {
    std::string id;
    Segment peak;
    std::vector<Segment> legs;
    std::vector<SegmentMorphism> leg_morphisms;

    int leg_count() const { return static_cast<int>(legs.size()); }
};

// Builds a cone from patch masks: each leg keeps the listed peak patches
// (1-based indices) at the peak color and lowers every other patch to the
// pre-order bottom. Leg morphisms are recomputed, never trusted from input.
Cone make_cone(std::string id, const Segment& peak,
               const std::vector<std::vector<int>>& leg_masks);

// A pre-ordered color set plus a finite family of cones.
class Chromology {
public:
    Chromology(std::shared_ptr<const PreOrder> order, std::vector<Cone> cones);

    const std::shared_ptr<const PreOrder>& order() const { return order_; }
    const std::vector<Cone>& cones() const { return cones_; }
    const Cone& cone(const std::string& id) const;
    bool has_cone(const std::string& id) const;

private:
    std::shared_ptr<const PreOrder> order_;
    std::vector<Cone> cones_;
};

// Per-leg word sets: the image of an element under the span's limit adjoint.
struct HaplotypeTuple {
    std::vector<std::set<Word>> legs;

    auto operator<=>(const HaplotypeTuple&) const = default;

    bool is_zero() const {
        for (const auto& l : legs)
            if (!l.empty()) return false;
        return true;
    }
};

// Splits every diploid into its two alleles and sums the results: the image
// of a set of diploids under the allele-separation map. Homozygous pairs
// collapse to a single word; the empty set maps to the empty set.
std::set<Word> segregate(const std::set<Diploid>& diploids);

// Restricts every word along each leg morphism. A monoid morphism in the
// word-set argument: the tuple of a union is the componentwise union.
HaplotypeTuple haplotype(const Cone& cone, const std::set<Word>& words, const std::string& b,
                         const Alphabet& alphabet);

// Whether x and y have equal haplotype tuples, i.e. whether the pair (x, y)
// lies in the cone's recombination congruence.
bool same_haplotype(const Cone& cone, const std::set<Word>& x, const std::set<Word>& y,
                    const std::string& b, const Alphabet& alphabet);

// The study's segregated alleles relabeled onto a target segment; empty when
// the base admits no morphism to the target.
std::set<Word> study_words_at(const AlignmentStudy& study, const Segment& target);

// Which functor the congruence machinery is instantiated at. A closed
// enumeration: free words, free diploid pairs, or the free monoid on the
// alignment table itself.
enum class FunctorKind { FreeWords, FreeDiploids, FreeTable };

struct SchemeReport {
    bool ok = true;
    bool single_cone_shortcut = false;
    struct Violation {
        std::string host_cone; // cone whose leg fails irreducibility
        int leg_index = 0;     // 1-based
        std::string via_cone;  // cone whose congruence the arrow fails to collapse
        std::string witness;   // rendered atom exhibiting the failure
    };
    std::vector<Violation> violations;

    std::string summary() const;
};

// Decides whether every cone's leg targets are irreducible for the triple
// (colors, cones, functor). A chromology with a single cone passes outright.
// Otherwise each candidate arrow between relevant segments (cone peaks into
// cone legs; equal domains only, where the morphism is unique) is tested on
// the finite atom pool the study induces: an arrow collapses the congruence
// exactly when every pool atom has some leg on which its restriction
// determines its image. This quantifies over study-reachable atoms rather
// than the full functor image, a bounded stand-in for the real quantifier.
SchemeReport check_scheme(const Chromology& chromology, FunctorKind kind,
                          const AlignmentStudy* study);

// Equality in the recombination quotient at one cone's peak.
//
// When the chromology passes the scheme check, the haplotype tuple is a
// faithful canonical form: two elements are identified in the quotient
// exactly when their tuples agree, so class_of returns the tuple and equal
// compares them. Otherwise equal falls back to an explicitly generated
// congruence over the study-plus-query word pool, decided within a budget.
class RecombinationQuotient {
public:
    RecombinationQuotient(const Chromology& chromology, const AlignmentStudy& study,
                          std::string cone_id, std::size_t budget = std::size_t{1} << 20);

    bool scheme_ok() const { return scheme_.ok; }
    const SchemeReport& scheme_report() const { return scheme_; }
    const Cone& cone() const;

    // Canonical representative of x's quotient class. Requires the scheme
    // check to have passed; throws ValidationError otherwise.
    HaplotypeTuple class_of(const std::set<Word>& x) const;

    bool equal(const std::set<Word>& x, const std::set<Word>& y) const;

private:
    bool congruent_fallback(const std::set<Word>& x, const std::set<Word>& y) const;

    const Chromology& chromology_;
    const AlignmentStudy& study_;
    std::string cone_id_;
    std::size_t budget_;
    SchemeReport scheme_;
};

} // namespace pedigrad
