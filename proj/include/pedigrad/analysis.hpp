#pragma once

#include <set>
#include <string>
#include <vector>

#include "pedigrad/genome.hpp"
#include "pedigrad/recombination.hpp"

namespace pedigrad {

// Which projection of the diploid table a separation check looks at: the
// ordered pair of alleles, or a single allele component.
enum class Projection { Both, Allele1, Allele2 };

std::string to_string(Projection p);

struct SeparationConflict {
    std::string name1;
    std::string name2;
    std::string shared; // rendered restriction the two genotypes agree on
    IcmElement phenotype1;
    IcmElement phenotype2;
};

// The mono test at one target segment: two genotypes whose chosen
// restriction coincides but whose phenotypes differ would force distinct
// phenotypes to merge in the quotient, so each such pair is a conflict and
// separation holds exactly when there are none.
struct SeparationReport {
    Segment target;
    Projection projection = Projection::Both;
    bool separated = true;
    std::vector<SeparationConflict> conflicts;
};

// Throws ValidationError when the base admits no morphism to the target.
SeparationReport separation_check(const AlignmentStudy& study, const Segment& target,
                                  Projection projection);

// Enumerates coarsenings of the base with at most max_black_positions
// positions kept at the threshold color as singleton patches (everything
// else lowered to the bottom color and merged maximally), and returns the
// separating ones that are inclusion-minimal: no separating coarsening uses
// a strict subset of their kept positions. Sorted by position count, then
// by positions.
std::vector<Segment> minimize_markers(const AlignmentStudy& study, int max_black_positions);

// The kept (threshold-colored) positions of a marker segment.
std::vector<int> marker_positions(const AlignmentStudy& study, const Segment& marker);

struct LegCheck {
    bool pass = true;
    std::vector<std::string> missing; // rendered words unreachable on this leg
};

struct FiberEntry {
    std::vector<std::string> names; // in study order
    IcmElement phenotype;           // union of the members' phenotype sets
};

// The three-step lift for an unseen haplogroup:
//   step 1 — per leg, is the target component a union of study allele pairs
//            (querying within the right gene pool);
//   step 2 — is there one subset of the table whose allele pairs hit every
//            leg component exactly (enough data for a prediction);
//   step 3 — every such subset, mapped through the phenotypic expression.
// step2 implies step1; the fiber is non-empty exactly when step 2 passes.
struct PredictionReport {
    std::string cone_id;
    HaplotypeTuple target;
    std::vector<LegCheck> step1;
    bool step1_pass = false;
    bool step2_pass = false;
    std::vector<std::string> allowed; // genotypes surviving per-leg pruning
    std::vector<FiberEntry> fiber;
    std::vector<IcmElement> predicted_phenotypes; // distinct fiber values
};

// Throws ValidationError on a segment mismatch and BudgetExceeded when more
// genotypes survive pruning than the subset budget allows to enumerate.
PredictionReport predict(const AlignmentStudy& study, const Chromology& chromology,
                         const std::string& cone_id, const std::set<Diploid>& query,
                         std::size_t subset_budget = 25);

// The fiber of one haplotype class, partitioned by phenotype value. One
// part per distinct value; several parts signal a dominance relationship
// the phenotype labels do not resolve.
struct FiberComponentReport {
    std::string cone_id;
    HaplotypeTuple haplotype_class;
    std::vector<std::pair<IcmElement, std::vector<std::vector<std::string>>>> components;
};

// Throws ValidationError when the class is not realizable by any subset of
// the table.
FiberComponentReport fiber_components(const AlignmentStudy& study, const Chromology& chromology,
                                      const std::string& cone_id, const HaplotypeTuple& cls,
                                      std::size_t subset_budget = 25);

} // namespace pedigrad
