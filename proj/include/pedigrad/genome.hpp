#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pedigrad/icm.hpp"
#include "pedigrad/segment.hpp"

namespace pedigrad {

// A pointed alphabet: the letters plus a distinguished gap symbol that is
// not a letter. The gap stands for "no data" at a position.
struct Alphabet {
    std::string letters;
    char gap = 'e';

    bool is_letter(char c) const { return letters.find(c) != std::string::npos; }
    bool is_symbol(char c) const { return c == gap || is_letter(c); }
    void validate() const;
};

// The positions of a segment whose patch color lies at or above b,
// in ascending order.
std::vector<int> truncate(const Segment& seg, const std::string& b);
std::vector<int> truncate(const Segment& seg, int b_index);

// A word over a segment truncation: one symbol (letter or gap) per truncated
// position. Positions outside the truncation carry no data.
struct Word {
    std::vector<int> positions; // ascending, 1-based
    std::string symbols;        // symbols[i] sits at positions[i]

    auto operator<=>(const Word&) const = default;

    // Just the stored symbols, in position order (the compact rendering).
    const std::string& text() const { return symbols; }
    // Full-length rendering, '-' where the truncation has no position.
    std::string render(int domain_size) const;
};

// Builds a word on a segment from its compact text (one symbol per truncated
// position). Throws ValidationError on length or symbol mismatch.
Word make_word(const Segment& seg, const std::string& b, const Alphabet& alphabet,
               const std::string& text);

// Same, but also accepts a full-length row (one symbol per segment
// position); columns outside the truncation are dropped. This is the form
// alignment files use, where every row spans the whole base segment.
Word make_word_projected(const Segment& seg, const std::string& b, const Alphabet& alphabet,
                         const std::string& text);

// An ordered pair of words on the same segment and threshold. The order is
// significant: the two alleles are not interchangeable here.
struct Diploid {
    Word allele1;
    Word allele2;

    auto operator<=>(const Diploid&) const = default;
};

// Pushes a word along a segment morphism: target position j takes the symbol
// of its unique f1-preimage when that preimage is truncated, and the gap
// otherwise. Contravariant position lookup, covariant on words.
Word transport_word(const SegmentMorphism& m, const Word& w, const std::string& b,
                    const Alphabet& alphabet);

Diploid transport_diploid(const SegmentMorphism& m, const Diploid& d, const std::string& b,
                          const Alphabet& alphabet);

// A named table of diploids on a fixed base segment, together with the
// phenotype set attached to each name. The table embeds injectively into
// the diploids (no two names may share a pair of alleles).
class AlignmentStudy {
public:
    AlignmentStudy(Segment base, std::string threshold, Alphabet alphabet,
                   std::vector<std::pair<std::string, Diploid>> genotypes,
                   std::vector<std::string> phenotype_labels,
                   std::map<std::string, std::vector<std::string>> phenotypes);

    const Segment& base() const { return base_; }
    const std::string& threshold() const { return threshold_; }
    const Alphabet& alphabet() const { return alphabet_; }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const Diploid& diploid(const std::string& name) const;
    bool has(const std::string& name) const { return by_name_.count(name) > 0; }

    const std::shared_ptr<const AtomUniverse>& phenotype_universe() const {
        return phenotype_universe_;
    }
    const IcmElement& phenotype(const std::string& name) const;

private:
    Segment base_;
    std::string threshold_;
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::map<std::string, Diploid> by_name_;
    std::shared_ptr<const AtomUniverse> phenotype_universe_;
    std::map<std::string, IcmElement> phenotypes_;
};

// The genotype table relabeled onto a target segment along the unique
// morphism from the base, when that morphism exists. With a single base
// segment the general colimit construction collapses to exactly this
// relabeling, so the pair (name, transported diploid) is the whole story.
struct KanImages {
    bool morphism_exists = false;
    std::vector<std::pair<std::string, Diploid>> rows;
};

KanImages kan_element_images(const AlignmentStudy& study, const Segment& target);

} // namespace pedigrad
