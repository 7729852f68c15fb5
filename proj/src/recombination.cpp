#include "pedigrad/recombination.hpp"

#include <algorithm>
#include <functional>

#include "pedigrad/errors.hpp"

namespace pedigrad {

Cone make_cone(std::string id, const Segment& peak,
               const std::vector<std::vector<int>>& leg_masks) {
    Cone cone;
    cone.id = std::move(id);
    cone.peak = peak;

    auto bottom = peak.order()->bottom();
    if (!bottom)
        throw ValidationError("cone '" + cone.id +
                              "': the pre-order has no bottom color to lower patches to");

    for (std::size_t li = 0; li < leg_masks.size(); ++li) {
        std::vector<int> colors(peak.patch_count(), *bottom);
        for (int patch : leg_masks[li]) {
            if (patch < 1 || patch > peak.patch_count())
                throw ValidationError("cone '" + cone.id + "' leg " + std::to_string(li + 1) +
                                      " keeps patch " + std::to_string(patch) + " but the peak has " +
                                      std::to_string(peak.patch_count()) + " patches");
            colors[patch - 1] = peak.color_of_patch(patch);
        }
        Segment leg = Segment::make_indexed(peak.patch_sizes(), std::move(colors), peak.order());
        auto m = unique_quasi_homologous_morphism(peak, leg);
        if (!m)
            throw ValidationError("cone '" + cone.id + "' leg " + std::to_string(li + 1) +
                                  " admits no morphism from the peak");
        cone.legs.push_back(std::move(leg));
        cone.leg_morphisms.push_back(std::move(*m));
    }
    return cone;
}

Chromology::Chromology(std::shared_ptr<const PreOrder> order, std::vector<Cone> cones)
    : order_(std::move(order)), cones_(std::move(cones)) {
    std::set<std::string> ids;
    for (const auto& c : cones_) {
        if (!ids.insert(c.id).second)
            throw ValidationError("chromology declares cone '" + c.id + "' twice");
        if (!(*c.peak.order() == *order_))
            throw ValidationError("cone '" + c.id + "' is colored over a different pre-order");
    }
}

const Cone& Chromology::cone(const std::string& id) const {
    for (const auto& c : cones_)
        if (c.id == id) return c;
    throw ValidationError("unknown cone '" + id + "'");
}

bool Chromology::has_cone(const std::string& id) const {
    for (const auto& c : cones_)
        if (c.id == id) return true;
    return false;
}

std::set<Word> segregate(const std::set<Diploid>& diploids) {
    std::set<Word> out;
    for (const auto& d : diploids) {
        out.insert(d.allele1);
        out.insert(d.allele2);
    }
    return out;
}

HaplotypeTuple haplotype(const Cone& cone, const std::set<Word>& words, const std::string& b,
                         const Alphabet& alphabet) {
    HaplotypeTuple tuple;
    tuple.legs.resize(cone.legs.size());
    for (std::size_t i = 0; i < cone.legs.size(); ++i)
        for (const auto& w : words)
            tuple.legs[i].insert(transport_word(cone.leg_morphisms[i], w, b, alphabet));
    return tuple;
}

bool same_haplotype(const Cone& cone, const std::set<Word>& x, const std::set<Word>& y,
                    const std::string& b, const Alphabet& alphabet) {
    return haplotype(cone, x, b, alphabet) == haplotype(cone, y, b, alphabet);
}

std::set<Word> study_words_at(const AlignmentStudy& study, const Segment& target) {
    std::set<Word> out;
    if (study.base().domain_size() != target.domain_size()) return out;
    auto f = unique_quasi_homologous_morphism(study.base(), target);
    if (!f) return out;
    for (const auto& name : study.names()) {
        const Diploid& d = study.diploid(name);
        out.insert(transport_word(*f, d.allele1, study.threshold(), study.alphabet()));
        out.insert(transport_word(*f, d.allele2, study.threshold(), study.alphabet()));
    }
    return out;
}

std::string SchemeReport::summary() const {
    if (ok)
        return single_cone_shortcut ? "scheme: ok (single cone)" : "scheme: ok";
    std::string out = "scheme: failed";
    for (const auto& v : violations)
        out += "\n  leg " + std::to_string(v.leg_index) + " of cone '" + v.host_cone +
               "' is not irreducible: the arrow from cone '" + v.via_cone +
               "' does not collapse its congruence (witness " + v.witness + ")";
    return out;
}

namespace {

// The finite pool standing in for a functor's value at one peak, with
// rendered transports along arbitrary morphisms out of that peak.
struct AtomPool {
    std::vector<std::string> ids;
    std::function<std::string(std::size_t, const SegmentMorphism&)> image;
};

AtomPool pool_at(FunctorKind kind, const AlignmentStudy* study, const Segment& peak) {
    AtomPool pool;
    if (!study) {
        pool.image = [](std::size_t, const SegmentMorphism&) { return std::string(); };
        return pool;
    }
    const std::string b = study->threshold();
    const Alphabet alphabet = study->alphabet();
    const int n = peak.domain_size();

    switch (kind) {
        case FunctorKind::FreeWords: {
            auto words = std::make_shared<std::vector<Word>>();
            for (const auto& w : study_words_at(*study, peak)) words->push_back(w);
            for (const auto& w : *words) pool.ids.push_back(w.render(n));
            pool.image = [words, b, alphabet](std::size_t k, const SegmentMorphism& m) {
                return transport_word(m, (*words)[k], b, alphabet).render(m.dst.domain_size());
            };
            break;
        }
        case FunctorKind::FreeDiploids: {
            auto dips = std::make_shared<std::vector<Diploid>>();
            KanImages kan = kan_element_images(*study, peak);
            if (kan.morphism_exists)
                for (auto& [name, d] : kan.rows) dips->push_back(d);
            for (const auto& d : *dips)
                pool.ids.push_back(d.allele1.render(n) + "/" + d.allele2.render(n));
            pool.image = [dips, b, alphabet](std::size_t k, const SegmentMorphism& m) {
                Diploid t = transport_diploid(m, (*dips)[k], b, alphabet);
                return t.allele1.render(m.dst.domain_size()) + "/" +
                       t.allele2.render(m.dst.domain_size());
            };
            break;
        }
        case FunctorKind::FreeTable: {
            // Table entries relabel along morphisms without merging, so the
            // atom ids are the names themselves under every arrow.
            if (study->base().domain_size() == peak.domain_size() &&
                unique_quasi_homologous_morphism(study->base(), peak)) {
                for (const auto& name : study->names()) pool.ids.push_back(name);
            }
            auto names = std::make_shared<std::vector<std::string>>(pool.ids);
            pool.image = [names](std::size_t k, const SegmentMorphism&) { return (*names)[k]; };
            break;
        }
    }
    return pool;
}

} // namespace

SchemeReport check_scheme(const Chromology& chromology, FunctorKind kind,
                          const AlignmentStudy* study) {
    SchemeReport report;
    if (chromology.cones().size() <= 1) {
        report.single_cone_shortcut = chromology.cones().size() == 1;
        return report;
    }

    for (const auto& host : chromology.cones()) {
        for (int leg = 1; leg <= host.leg_count(); ++leg) {
            const Segment& target = host.legs[leg - 1];
            for (const auto& via : chromology.cones()) {
                const Segment& peak = via.peak;
                if (peak.domain_size() != target.domain_size()) continue;
                auto arrow = unique_quasi_homologous_morphism(peak, target);
                if (!arrow) continue;

                AtomPool pool = pool_at(kind, study, peak);
                if (pool.ids.empty()) continue;

                std::vector<std::string> images(pool.ids.size());
                for (std::size_t k = 0; k < pool.ids.size(); ++k)
                    images[k] = pool.image(k, *arrow);
                std::vector<std::vector<std::string>> keys(via.leg_count());
                for (int j = 0; j < via.leg_count(); ++j) {
                    keys[j].resize(pool.ids.size());
                    for (std::size_t k = 0; k < pool.ids.size(); ++k)
                        keys[j][k] = pool.image(k, via.leg_morphisms[j]);
                }

                // The arrow collapses the via-cone's congruence iff every
                // atom has some leg on which its restriction already pins
                // down its image under the arrow.
                for (std::size_t k = 0; k < pool.ids.size(); ++k) {
                    bool pinned = false;
                    for (int j = 0; j < via.leg_count() && !pinned; ++j) {
                        bool leg_pins = true;
                        for (std::size_t k2 = 0; k2 < pool.ids.size() && leg_pins; ++k2)
                            if (keys[j][k2] == keys[j][k] && images[k2] != images[k])
                                leg_pins = false;
                        pinned = leg_pins;
                    }
                    if (!pinned) {
                        report.ok = false;
                        report.violations.push_back(
                            {host.id, leg, via.id, pool.ids[k]});
                        break;
                    }
                }
            }
        }
    }
    return report;
}

RecombinationQuotient::RecombinationQuotient(const Chromology& chromology,
                                             const AlignmentStudy& study, std::string cone_id,
                                             std::size_t budget)
    : chromology_(chromology),
      study_(study),
      cone_id_(std::move(cone_id)),
      budget_(budget),
      scheme_(check_scheme(chromology, FunctorKind::FreeWords, &study)) {
    chromology_.cone(cone_id_); // existence check
}

const Cone& RecombinationQuotient::cone() const { return chromology_.cone(cone_id_); }

HaplotypeTuple RecombinationQuotient::class_of(const std::set<Word>& x) const {
    if (!scheme_.ok)
        throw ValidationError("chromology is not a recombination scheme; haplotype tuples are "
                              "not canonical here (" + scheme_.summary() + ")");
    return haplotype(cone(), x, study_.threshold(), study_.alphabet());
}

bool RecombinationQuotient::equal(const std::set<Word>& x, const std::set<Word>& y) const {
    if (scheme_.ok)
        return same_haplotype(cone(), x, y, study_.threshold(), study_.alphabet());
    return congruent_fallback(x, y);
}

bool RecombinationQuotient::congruent_fallback(const std::set<Word>& x,
                                               const std::set<Word>& y) const {
    const Segment& peak = cone().peak;
    const std::string& b = study_.threshold();
    const Alphabet& alphabet = study_.alphabet();
    const int n = peak.domain_size();
    Budget budget(budget_);

    std::set<Word> tau_words = study_words_at(study_, peak);
    tau_words.insert(x.begin(), x.end());
    tau_words.insert(y.begin(), y.end());

    // Collect congruence generators at the peak: for every cone whose peak
    // maps into it, the absorption pairs (A, A + w) where A picks, per leg,
    // a pool word with w's restriction. These generate the cone's
    // recombination congruence over the bounded pool.
    std::set<Word> universe_words = tau_words;
    std::vector<std::pair<std::set<Word>, std::set<Word>>> raw_pairs;

    for (const auto& via : chromology_.cones()) {
        if (via.peak.domain_size() != peak.domain_size()) continue;
        auto arrow = unique_quasi_homologous_morphism(via.peak, peak);
        if (!arrow) continue;

        std::set<Word> pool_set = study_words_at(study_, via.peak);
        if (via.peak == peak) pool_set.insert(tau_words.begin(), tau_words.end());
        std::vector<Word> pool(pool_set.begin(), pool_set.end());

        std::vector<std::vector<Word>> restricted(via.leg_count());
        for (int j = 0; j < via.leg_count(); ++j)
            for (const auto& w : pool)
                restricted[j].push_back(transport_word(via.leg_morphisms[j], w, b, alphabet));

        for (std::size_t wi = 0; wi < pool.size(); ++wi) {
            std::vector<std::vector<std::size_t>> matches(via.leg_count());
            for (int j = 0; j < via.leg_count(); ++j)
                for (std::size_t k = 0; k < pool.size(); ++k)
                    if (k != wi && restricted[j][k] == restricted[j][wi])
                        matches[j].push_back(k);

            bool absorbable = true;
            for (const auto& m : matches)
                if (m.empty()) absorbable = false;
            if (!absorbable) continue;

            // Enumerate one witness per leg (a cone with no legs absorbs
            // everything through the empty witness set).
            std::vector<std::size_t> choice(via.leg_count(), 0);
            bool done = false;
            while (!done) {
                budget.charge(1, "quotient fallback pair generation");
                std::set<Word> lhs, rhs;
                for (int j = 0; j < via.leg_count(); ++j)
                    lhs.insert(transport_word(*arrow, pool[matches[j][choice[j]]], b, alphabet));
                rhs = lhs;
                rhs.insert(transport_word(*arrow, pool[wi], b, alphabet));
                if (lhs != rhs) {
                    universe_words.insert(lhs.begin(), lhs.end());
                    universe_words.insert(rhs.begin(), rhs.end());
                    raw_pairs.emplace_back(std::move(lhs), std::move(rhs));
                }

                int j = via.leg_count() - 1;
                while (j >= 0 && ++choice[j] == matches[j].size()) choice[j--] = 0;
                done = j < 0;
            }
        }
    }

    std::vector<std::string> atoms;
    for (const auto& w : universe_words) atoms.push_back(w.render(n));
    auto universe = std::make_shared<const AtomUniverse>(std::move(atoms));

    auto element = [&](const std::set<Word>& words) {
        IcmElement e(universe);
        for (const auto& w : words) e.insert(*universe->index_of(w.render(n)));
        return e;
    };

    std::vector<std::pair<IcmElement, IcmElement>> pairs;
    for (const auto& [lhs, rhs] : raw_pairs) pairs.emplace_back(element(lhs), element(rhs));

    GeneratedCongruence congruence(universe, std::move(pairs), budget_);
    return congruence.congruent(element(x), element(y));
}

} // namespace pedigrad
