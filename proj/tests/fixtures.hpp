#pragma once

// The worked 18-genotype corpus: three founders and fifteen descendants
// produced by homologous recombination of their alleles, with the diseased /
// healthy phenotype of each. Used across the unit, property and acceptance
// suites.

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pedigrad/analysis.hpp"
#include "pedigrad/genome.hpp"
#include "pedigrad/recombination.hpp"

namespace fixtures {

struct Row {
    const char* name;
    const char* allele1;
    const char* allele2;
    const char* phenotype;
};

inline const std::array<Row, 18>& corpus_rows() {
    static const std::array<Row, 18> rows = {{
        {"a", "ACCATTAGCTACCTATAC", "ACCACTAGCTACATATGC", "dis"},
        {"b", "AGCATTAGGTTCGTATGC", "ACCACTAGCTACCTATTC", "hea"},
        {"c", "AACATTAGGTTCTTATAC", "ACCACTAGGTTCATATTC", "dis"},
        {"p1", "ACCATTAGCTACATATGC", "AGCATTAGGTACCTATTC", "hea"},
        {"p2", "AGCATTAGCTTCGTATGC", "ACCACTAGCTACATATGC", "hea"},
        {"p3", "AGCATTAGGTACCTATTC", "ACCACTAGCTACCTATAC", "hea"},
        {"p4", "AGCATTAGCTACCTATTC", "ACCACTAGGTTCATATTC", "hea"},
        {"p5", "AACATTAGGTTCGTATGC", "ACCACTAGCTTCATATTC", "hea"},
        {"p6", "AACATTAGGTTCTTATAC", "ACCACTAGGTTCGTATGC", "hea"},
        {"p7", "ACCATTAGCTACATATGC", "AACATTAGGTTCATATTC", "dis"},
        {"p8", "ACCACTAGCTACATATGC", "AACATTAGGTTCTTATAC", "dis"},
        {"p9", "ACCACTAGGTTCTTATAC", "ACCATTAGCTACCTATAC", "hea"},
        {"p10", "ACCATTAGGTACATATGC", "ACCACTAGCTACCTATTC", "dis"},
        {"p11", "AACATTAGGTACATATGC", "ACCATTAGGTTCATATTC", "dis"},
        {"p12", "AACATTAGCTTCTTATAC", "AGCATTAGCTTCATATTC", "hea"},
        {"p13", "ACCACTAGCTACATATGC", "ACCACTAGCTACATATGC", "hea"},
        {"p14", "ACCACTAGGTTCGTATGC", "AGCATTAGGTTCGTATGC", "hea"},
        {"p15", "ACCACTAGGTTCATATTC", "ACCACTAGGTACCTATAC", "hea"},
    }};
    return rows;
}

inline pedigrad::Alphabet dna_alphabet() { return pedigrad::Alphabet{"ACGT", 'e'}; }

// seg_18: eighteen singleton patches, all at color 1.
inline pedigrad::Segment base_segment() {
    return pedigrad::Segment::make(std::vector<int>(18, 1),
                                   std::vector<std::string>(18, "1"),
                                   pedigrad::PreOrder::boolean());
}

inline pedigrad::AlignmentStudy corpus_study() {
    using namespace pedigrad;
    Segment base = base_segment();
    Alphabet alphabet = dna_alphabet();
    std::vector<std::pair<std::string, Diploid>> genotypes;
    std::map<std::string, std::vector<std::string>> phenotypes;
    for (const auto& row : corpus_rows()) {
        genotypes.emplace_back(row.name,
                               Diploid{make_word(base, "1", alphabet, row.allele1),
                                       make_word(base, "1", alphabet, row.allele2)});
        phenotypes[row.name] = {row.phenotype};
    }
    return AlignmentStudy(std::move(base), "1", alphabet, std::move(genotypes),
                          {"dis", "hea"}, std::move(phenotypes));
}

// rho: three black patches of six, one leg per patch.
// rho_prime: black patches of 6/3/9, one leg per patch.
inline pedigrad::Chromology corpus_chromology() {
    using namespace pedigrad;
    auto order = PreOrder::boolean();
    Segment tau = Segment::make({6, 6, 6}, {"1", "1", "1"}, order);
    Segment tau_prime = Segment::make({6, 3, 9}, {"1", "1", "1"}, order);
    std::vector<Cone> cones;
    cones.push_back(make_cone("rho", tau, {{1}, {2}, {3}}));
    cones.push_back(make_cone("rho_prime", tau_prime, {{1}, {2}, {3}}));
    return Chromology(order, std::move(cones));
}

// Sum of named genotypes, relabeled onto a cone's peak and segregated.
inline std::set<pedigrad::Word> segregated_sum(const pedigrad::AlignmentStudy& study,
                                               const pedigrad::Cone& cone,
                                               const std::vector<std::string>& names) {
    using namespace pedigrad;
    auto f = unique_quasi_homologous_morphism(study.base(), cone.peak);
    std::set<Diploid> diploids;
    for (const auto& n : names)
        diploids.insert(
            transport_diploid(*f, study.diploid(n), study.threshold(), study.alphabet()));
    return segregate(diploids);
}

// seg_18': black singletons at positions 2, 5 and 13.
inline pedigrad::Segment seg18_prime() {
    return pedigrad::Segment::make({1, 1, 2, 1, 7, 1, 5}, {"0", "1", "0", "1", "0", "1", "0"},
                                   pedigrad::PreOrder::boolean());
}

// seg_18'': black singletons at positions 2 and 5 only.
inline pedigrad::Segment seg18_second() {
    return pedigrad::Segment::make({1, 1, 2, 1, 13}, {"0", "1", "0", "1", "0"},
                                   pedigrad::PreOrder::boolean());
}

} // namespace fixtures
