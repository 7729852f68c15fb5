#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pedigrad/analysis.hpp"
#include "pedigrad/genome.hpp"
#include "pedigrad/recombination.hpp"
#include "pedigrad/segment.hpp"

namespace pedigrad {

// "(3:1)(2:0)(4:1)..." -> Segment. Colors are pre-order element names.
Segment parse_segment_literal(const std::string& text,
                              const std::shared_ptr<const PreOrder>& order);

// Alignment file: UTF-8, tab-separated.
//   #alphabet A,C,G,T gap=e          (required)
//   #segment (1:1)(1:1)...           (optional; defaults to singleton
//                                     patches at the threshold color)
//   #threshold 1                     (optional; default "1")
//   name<TAB>allele1<TAB>allele2<TAB>phenotypes
//   a<TAB>ACC...<TAB>ACC...<TAB>dis
// Phenotypes are a non-empty semicolon-separated label list. A non-empty
// threshold_override wins over the file's #threshold directive.
AlignmentStudy parse_alignment(const std::string& path,
                               const std::shared_ptr<const PreOrder>& order,
                               const std::string& threshold_override = "");

// Chromology file: JSON with a pre-order and a cone list, e.g.
//   { "preorder": {"elements": ["0","1"], "leq": [["0","1"]]},
//     "cones": [ {"id": "rho", "peak": "(6:1)(6:1)(6:1)",
//                 "legs": [[1],[2],[3]]} ] }
// Leg entries list the 1-based peak patches kept at the peak color.
Chromology parse_chromology(const std::string& path);
std::shared_ptr<const PreOrder> parse_chromology_preorder(const std::string& path);

// "WORD/WORD" with optional spaces; words on the target's truncation.
Diploid parse_diploid_literal(const std::string& text, const Segment& target,
                              const std::string& threshold, const Alphabet& alphabet);

// "b,c" -> {"b","c"}; rejects empty items.
std::vector<std::string> parse_name_list(const std::string& text);

enum class ReportFormat { Text, Json };

std::string render_haplotype(const Cone& cone, const HaplotypeTuple& tuple, ReportFormat format);
std::string render_separation(const SeparationReport& report, const AlignmentStudy& study,
                              ReportFormat format);
std::string render_markers(const std::vector<Segment>& markers, const AlignmentStudy& study,
                           ReportFormat format);
std::string render_prediction(const PredictionReport& report, ReportFormat format);
std::string render_fibers(const FiberComponentReport& report, ReportFormat format);

} // namespace pedigrad
