#include "pedigrad/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "pedigrad/errors.hpp"

namespace pedigrad {

std::string to_string(Projection p) {
    switch (p) {
        case Projection::Both: return "both";
        case Projection::Allele1: return "allele1";
        case Projection::Allele2: return "allele2";
    }
    return "?";
}

SeparationReport separation_check(const AlignmentStudy& study, const Segment& target,
                                  Projection projection) {
    KanImages kan = kan_element_images(study, target);
    if (!kan.morphism_exists)
        throw ValidationError("the base segment admits no morphism to " + target.literal());

    auto key_of = [&](const Diploid& d) -> std::string {
        switch (projection) {
            case Projection::Both: return "(" + d.allele1.text() + ", " + d.allele2.text() + ")";
            case Projection::Allele1: return d.allele1.text();
            case Projection::Allele2: return d.allele2.text();
        }
        return {};
    };

    SeparationReport report;
    report.target = target;
    report.projection = projection;
    for (std::size_t i = 0; i < kan.rows.size(); ++i) {
        for (std::size_t j = i + 1; j < kan.rows.size(); ++j) {
            const auto& [n1, d1] = kan.rows[i];
            const auto& [n2, d2] = kan.rows[j];
            std::string k1 = key_of(d1);
            if (k1 != key_of(d2)) continue;
            if (study.phenotype(n1) == study.phenotype(n2)) continue;
            report.conflicts.push_back(
                {n1, n2, k1, study.phenotype(n1), study.phenotype(n2)});
        }
    }
    report.separated = report.conflicts.empty();
    return report;
}

namespace {

Segment marker_segment(const AlignmentStudy& study, const std::vector<int>& black,
                       int black_color, int bottom_color) {
    const int n = study.base().domain_size();
    std::vector<int> sizes;
    std::vector<int> colors;
    int pos = 1;
    std::size_t next = 0;
    while (pos <= n) {
        if (next < black.size() && black[next] == pos) {
            sizes.push_back(1);
            colors.push_back(black_color);
            ++pos;
            ++next;
        } else {
            int end = (next < black.size()) ? black[next] : n + 1;
            sizes.push_back(end - pos);
            colors.push_back(bottom_color);
            pos = end;
        }
    }
    return Segment::make_indexed(std::move(sizes), std::move(colors), study.base().order());
}

} // namespace

std::vector<int> marker_positions(const AlignmentStudy& study, const Segment& marker) {
    return truncate(marker, study.threshold());
}

std::vector<Segment> minimize_markers(const AlignmentStudy& study, int max_black_positions) {
    const auto& order = *study.base().order();
    int black_color = order.require(study.threshold());
    auto bottom = order.bottom();
    if (!bottom) throw ValidationError("the pre-order has no bottom color for white patches");

    const int n = study.base().domain_size();
    if (max_black_positions > n) max_black_positions = n;
    if (max_black_positions < 0) max_black_positions = 0;

    std::vector<std::vector<int>> passing;
    std::vector<int> subset;
    auto probe = [&]() {
        Segment candidate = marker_segment(study, subset, black_color, *bottom);
        if (unique_quasi_homologous_morphism(study.base(), candidate) &&
            separation_check(study, candidate, Projection::Both).separated)
            passing.push_back(subset);
    };
    auto walk = [&](auto&& self, int start) -> void {
        probe();
        if (static_cast<int>(subset.size()) == max_black_positions) return;
        for (int p = start; p <= n; ++p) {
            subset.push_back(p);
            self(self, p + 1);
            subset.pop_back();
        }
    };
    walk(walk, 1);

    std::sort(passing.begin(), passing.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    // keep inclusion-minimal position sets only
    std::vector<std::vector<int>> minimal;
    for (const auto& cand : passing) {
        bool dominated = false;
        for (const auto& kept : minimal) {
            if (std::includes(cand.begin(), cand.end(), kept.begin(), kept.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(cand);
    }

    std::vector<Segment> out;
    for (const auto& positions : minimal)
        out.push_back(marker_segment(study, positions, black_color, *bottom));
    return out;
}

namespace {

// Shared core of predict and fiber_components: the study's allele pairs on
// every leg of a cone, pruned against a target tuple, and the exact-cover
// subset enumeration over what survives.
struct LiftContext {
    const Cone* cone = nullptr;
    std::vector<std::string> names;                  // study order
    std::vector<std::vector<std::set<Word>>> pairs;  // [genotype][leg] -> {a1|leg, a2|leg}
};

LiftContext lift_context(const AlignmentStudy& study, const Chromology& chromology,
                         const std::string& cone_id) {
    LiftContext ctx;
    ctx.cone = &chromology.cone(cone_id);
    KanImages kan = kan_element_images(study, ctx.cone->peak);
    if (!kan.morphism_exists)
        throw ValidationError("the study base admits no morphism to the peak of cone '" +
                              cone_id + "'");
    for (const auto& [name, dip] : kan.rows) {
        ctx.names.push_back(name);
        std::vector<std::set<Word>> per_leg;
        for (const auto& m : ctx.cone->leg_morphisms) {
            std::set<Word> pair;
            pair.insert(transport_word(m, dip.allele1, study.threshold(), study.alphabet()));
            pair.insert(transport_word(m, dip.allele2, study.threshold(), study.alphabet()));
            per_leg.push_back(std::move(pair));
        }
        ctx.pairs.push_back(std::move(per_leg));
    }
    return ctx;
}

struct FiberSearch {
    std::vector<std::string> allowed;
    std::vector<std::vector<std::string>> fiber; // name subsets, study order within each
};

FiberSearch enumerate_fiber(const LiftContext& ctx, const HaplotypeTuple& target,
                            std::size_t subset_budget, const char* activity) {
    FiberSearch out;
    const int legs = ctx.cone->leg_count();

    std::vector<std::size_t> allowed_idx;
    for (std::size_t g = 0; g < ctx.names.size(); ++g) {
        bool ok = true;
        for (int j = 0; j < legs && ok; ++j)
            for (const auto& w : ctx.pairs[g][j])
                if (!target.legs[j].count(w)) {
                    ok = false;
                    break;
                }
        if (ok) allowed_idx.push_back(g);
    }
    for (auto g : allowed_idx) out.allowed.push_back(ctx.names[g]);

    if (allowed_idx.size() > subset_budget)
        throw BudgetExceeded(std::string(activity) + ": " + std::to_string(allowed_idx.size()) +
                             " candidate genotypes exceed the subset budget of " +
                             std::to_string(subset_budget));

    // index the target words per leg so subsets reduce to bitmask unions
    std::vector<std::map<Word, int>> index(legs);
    std::vector<std::uint64_t> full(legs, 0);
    for (int j = 0; j < legs; ++j) {
        int bit = 0;
        for (const auto& w : target.legs[j]) {
            if (bit >= 64)
                throw BudgetExceeded(std::string(activity) +
                                     ": leg component too large to index");
            index[j][w] = bit;
            full[j] |= std::uint64_t{1} << bit;
            ++bit;
        }
    }
    std::vector<std::vector<std::uint64_t>> mask(allowed_idx.size(),
                                                 std::vector<std::uint64_t>(legs, 0));
    for (std::size_t a = 0; a < allowed_idx.size(); ++a)
        for (int j = 0; j < legs; ++j)
            for (const auto& w : ctx.pairs[allowed_idx[a]][j])
                mask[a][j] |= std::uint64_t{1} << index[j].at(w);

    const std::uint64_t total = std::uint64_t{1} << allowed_idx.size();
    for (std::uint64_t sub = 0; sub < total; ++sub) {
        bool exact = true;
        for (int j = 0; j < legs && exact; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t a = 0; a < allowed_idx.size(); ++a)
                if (sub & (std::uint64_t{1} << a)) acc |= mask[a][j];
            exact = acc == full[j];
        }
        if (!exact) continue;
        std::vector<std::string> names;
        for (std::size_t a = 0; a < allowed_idx.size(); ++a)
            if (sub & (std::uint64_t{1} << a)) names.push_back(ctx.names[allowed_idx[a]]);
        out.fiber.push_back(std::move(names));
    }

    std::sort(out.fiber.begin(), out.fiber.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

IcmElement phenotype_of_subset(const AlignmentStudy& study, const std::vector<std::string>& names) {
    IcmElement value = IcmElement::zero(study.phenotype_universe());
    for (const auto& n : names) value = add(value, study.phenotype(n));
    return value;
}

} // namespace

PredictionReport predict(const AlignmentStudy& study, const Chromology& chromology,
                         const std::string& cone_id, const std::set<Diploid>& query,
                         std::size_t subset_budget) {
    LiftContext ctx = lift_context(study, chromology, cone_id);

    PredictionReport report;
    report.cone_id = cone_id;
    report.target =
        haplotype(*ctx.cone, segregate(query), study.threshold(), study.alphabet());

    // step 1, leg by leg: a target word is reachable when some genotype
    // contributes it through a pair that stays inside the component
    const int legs = ctx.cone->leg_count();
    report.step1.resize(legs);
    for (int j = 0; j < legs; ++j) {
        for (const auto& w : report.target.legs[j]) {
            bool covered = false;
            for (std::size_t g = 0; g < ctx.names.size() && !covered; ++g) {
                if (!ctx.pairs[g][j].count(w)) continue;
                bool inside = true;
                for (const auto& pw : ctx.pairs[g][j])
                    if (!report.target.legs[j].count(pw)) inside = false;
                covered = inside;
            }
            if (!covered) report.step1[j].missing.push_back(w.text());
        }
        report.step1[j].pass = report.step1[j].missing.empty();
    }
    report.step1_pass = true;
    for (const auto& lc : report.step1) report.step1_pass = report.step1_pass && lc.pass;

    FiberSearch search = enumerate_fiber(ctx, report.target, subset_budget, "predict");
    report.allowed = search.allowed;
    report.step2_pass = !search.fiber.empty();

    std::set<IcmElement> values;
    for (auto& names : search.fiber) {
        IcmElement value = phenotype_of_subset(study, names);
        values.insert(value);
        report.fiber.push_back({std::move(names), std::move(value)});
    }
    report.predicted_phenotypes.assign(values.begin(), values.end());
    return report;
}

FiberComponentReport fiber_components(const AlignmentStudy& study, const Chromology& chromology,
                                      const std::string& cone_id, const HaplotypeTuple& cls,
                                      std::size_t subset_budget) {
    LiftContext ctx = lift_context(study, chromology, cone_id);
    FiberSearch search = enumerate_fiber(ctx, cls, subset_budget, "fiber enumeration");
    if (search.fiber.empty())
        throw ValidationError("no subset of the table realizes this haplotype class");

    FiberComponentReport report;
    report.cone_id = cone_id;
    report.haplotype_class = cls;

    std::map<IcmElement, std::vector<std::vector<std::string>>> by_value;
    for (auto& names : search.fiber)
        by_value[phenotype_of_subset(study, names)].push_back(std::move(names));
    for (auto& [value, members] : by_value)
        report.components.emplace_back(value, std::move(members));
    return report;
}

} // namespace pedigrad
