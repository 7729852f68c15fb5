#include "pedigrad/genome.hpp"

#include <algorithm>

#include "pedigrad/errors.hpp"

namespace pedigrad {

void Alphabet::validate() const {
    if (letters.empty()) throw ValidationError("alphabet has no letters");
    std::set<char> seen;
    for (char c : letters)
        if (!seen.insert(c).second)
            throw ValidationError(std::string("alphabet repeats letter '") + c + "'");
    if (is_letter(gap))
        throw ValidationError(std::string("gap symbol '") + gap + "' collides with a letter");
}

std::vector<int> truncate(const Segment& seg, int b_index) {
    const auto& order = *seg.order();
    if (b_index < 0 || b_index >= static_cast<int>(order.size()))
        throw ValidationError("truncation threshold is not in the pre-order");
    std::vector<int> out;
    int pos = 1;
    for (int p = 1; p <= seg.patch_count(); ++p) {
        bool keep = order.leq(b_index, seg.color_of_patch(p));
        for (int k = 0; k < seg.patch_sizes()[p - 1]; ++k, ++pos)
            if (keep) out.push_back(pos);
    }
    return out;
}

std::vector<int> truncate(const Segment& seg, const std::string& b) {
    return truncate(seg, seg.order()->require(b));
}

std::string Word::render(int domain_size) const {
    std::string out(static_cast<std::size_t>(domain_size), '-');
    for (std::size_t i = 0; i < positions.size(); ++i)
        out[positions[i] - 1] = symbols[i];
    return out;
}

Word make_word(const Segment& seg, const std::string& b, const Alphabet& alphabet,
               const std::string& text) {
    Word w;
    w.positions = truncate(seg, b);
    if (text.size() != w.positions.size())
        throw ValidationError("word has " + std::to_string(text.size()) + " symbols but the truncation has " +
                              std::to_string(w.positions.size()) + " positions");
    for (char c : text)
        if (!alphabet.is_symbol(c))
            throw ValidationError(std::string("symbol '") + c + "' is not a letter or the gap");
    w.symbols = text;
    return w;
}

Word make_word_projected(const Segment& seg, const std::string& b, const Alphabet& alphabet,
                         const std::string& text) {
    auto trunc = truncate(seg, b);
    if (text.size() == trunc.size()) return make_word(seg, b, alphabet, text);
    if (static_cast<int>(text.size()) != seg.domain_size())
        throw ValidationError("word has " + std::to_string(text.size()) +
                              " symbols; expected " + std::to_string(seg.domain_size()) +
                              " (one per position) or " + std::to_string(trunc.size()) +
                              " (one per truncated position)");
    std::string kept;
    for (int pos : trunc) kept += text[static_cast<std::size_t>(pos - 1)];
    for (char c : text)
        if (!alphabet.is_symbol(c))
            throw ValidationError(std::string("symbol '") + c + "' is not a letter or the gap");
    return make_word(seg, b, alphabet, kept);
}

Word transport_word(const SegmentMorphism& m, const Word& w, const std::string& b,
                    const Alphabet& alphabet) {
    auto src_trunc = truncate(m.src, b);
    if (w.positions != src_trunc)
        throw ValidationError("word does not live on the morphism's source truncation");

    // symbol at each truncated source position
    std::map<int, char> at;
    for (std::size_t i = 0; i < w.positions.size(); ++i) at[w.positions[i]] = w.symbols[i];

    // f1-image -> source position
    std::map<int, int> preimage;
    for (int pos = 1; pos <= m.src.domain_size(); ++pos) preimage[m.f1[pos - 1]] = pos;

    Word out;
    out.positions = truncate(m.dst, b);
    out.symbols.reserve(out.positions.size());
    for (int j : out.positions) {
        auto it = preimage.find(j);
        if (it != preimage.end() && at.count(it->second))
            out.symbols += at[it->second];
        else
            out.symbols += alphabet.gap;
    }
    return out;
}

Diploid transport_diploid(const SegmentMorphism& m, const Diploid& d, const std::string& b,
                          const Alphabet& alphabet) {
    return Diploid{transport_word(m, d.allele1, b, alphabet),
                   transport_word(m, d.allele2, b, alphabet)};
}

AlignmentStudy::AlignmentStudy(Segment base, std::string threshold, Alphabet alphabet,
                               std::vector<std::pair<std::string, Diploid>> genotypes,
                               std::vector<std::string> phenotype_labels,
                               std::map<std::string, std::vector<std::string>> phenotypes)
    : base_(std::move(base)), threshold_(std::move(threshold)), alphabet_(std::move(alphabet)) {
    alphabet_.validate();
    base_.order()->require(threshold_);
    phenotype_universe_ = std::make_shared<const AtomUniverse>(std::move(phenotype_labels));

    auto trunc = truncate(base_, threshold_);
    std::set<Diploid> distinct;
    for (auto& [name, dip] : genotypes) {
        if (by_name_.count(name))
            throw ValidationError("genotype '" + name + "' is declared twice");
        if (dip.allele1.positions != trunc || dip.allele2.positions != trunc)
            throw ValidationError("genotype '" + name +
                                  "' does not live on the base segment truncation");
        if (!distinct.insert(dip).second)
            throw ValidationError("genotype '" + name +
                                  "' duplicates another row's pair of alleles; the table must "
                                  "embed injectively");
        names_.push_back(name);
        by_name_.emplace(name, std::move(dip));
    }

    for (const auto& name : names_) {
        auto it = phenotypes.find(name);
        if (it == phenotypes.end() || it->second.empty())
            throw ValidationError("genotype '" + name + "' has no phenotype");
        phenotypes_.emplace(name, IcmElement(phenotype_universe_, it->second));
    }
}

const Diploid& AlignmentStudy::diploid(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw ValidationError("unknown genotype '" + name + "'");
    return it->second;
}

const IcmElement& AlignmentStudy::phenotype(const std::string& name) const {
    auto it = phenotypes_.find(name);
    if (it == phenotypes_.end()) throw ValidationError("unknown genotype '" + name + "'");
    return it->second;
}

KanImages kan_element_images(const AlignmentStudy& study, const Segment& target) {
    KanImages out;
    auto f = unique_quasi_homologous_morphism(study.base(), target);
    if (!f) return out;
    out.morphism_exists = true;
    for (const auto& name : study.names())
        out.rows.emplace_back(
            name, transport_diploid(*f, study.diploid(name), study.threshold(), study.alphabet()));
    return out;
}

} // namespace pedigrad
