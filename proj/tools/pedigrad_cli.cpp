// pedigrad: haplotype analysis on sequence alignments.
//
// Reads an alignment table and a chromology (crossover topology) file and
// answers marker-localization, haplotype-equality and phenotype-prediction
// queries over them. Exit codes: 0 ok, 1 negative answer to a yes/no query,
// 2 parse error, 3 validation error, 4 budget exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "pedigrad/analysis.hpp"
#include "pedigrad/errors.hpp"
#include "pedigrad/io.hpp"

using namespace pedigrad;

namespace {

struct Options {
    std::string alignment_path;
    std::string chromology_path;
    std::string threshold;
    std::string format = "text";
    std::size_t budget = 25;
    bool budget_explicit = false;
};

ReportFormat format_of(const Options& opt) {
    if (opt.format == "json") return ReportFormat::Json;
    if (opt.format == "text") return ReportFormat::Text;
    throw ParseError("unknown format '" + opt.format + "'");
}

std::size_t effective_budget(const Options& opt) {
    if (opt.budget_explicit) return opt.budget;
    if (const char* env = std::getenv("PEDIGRAD_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw ParseError("PEDIGRAD_BUDGET must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return opt.budget;
}

struct Loaded {
    std::shared_ptr<const PreOrder> order;
    std::optional<AlignmentStudy> study;
    std::optional<Chromology> chromology;
};

Loaded load(const Options& opt, bool need_chromology) {
    Loaded out;
    if (need_chromology || !opt.chromology_path.empty()) {
        out.chromology = parse_chromology(opt.chromology_path);
        out.order = out.chromology->order();
    } else {
        out.order = PreOrder::boolean();
    }
    out.study = parse_alignment(opt.alignment_path, out.order, opt.threshold);
    return out;
}

// Named genotypes, relabeled onto the cone's peak and split into alleles.
std::set<Word> words_for_names(const AlignmentStudy& study, const Cone& cone,
                               const std::vector<std::string>& names) {
    auto f = unique_quasi_homologous_morphism(study.base(), cone.peak);
    if (!f)
        throw ValidationError("the study base admits no morphism to the peak of cone '" +
                              cone.id + "'");
    std::set<Diploid> diploids;
    for (const auto& n : names)
        diploids.insert(transport_diploid(*f, study.diploid(n), study.threshold(),
                                          study.alphabet()));
    return segregate(diploids);
}

int cmd_validate(const Options& opt) {
    Loaded in = load(opt, true);
    const auto& study = *in.study;
    const auto& chromology = *in.chromology;

    for (const auto& cone : chromology.cones()) {
        if (cone.peak.domain_size() == study.base().domain_size() &&
            !unique_quasi_homologous_morphism(study.base(), cone.peak))
            throw ValidationError("the study base admits no morphism to the peak of cone '" +
                                  cone.id + "'");
    }
    SchemeReport scheme = check_scheme(chromology, FunctorKind::FreeWords, &study);
    if (!scheme.ok)
        throw ValidationError("chromology is not a recombination scheme (" + scheme.summary() +
                              ")");

    // the report is assembled first so failures never leave a partial one
    std::string report = "alignment: " + std::to_string(study.size()) + " genotypes on " +
                         study.base().literal() + ", threshold " + study.threshold() + "\n";
    report += "chromology: " + std::to_string(chromology.cones().size()) + " cone(s)";
    for (const auto& c : chromology.cones()) report += " " + c.id;
    report += "\n" + scheme.summary() + "\nvalid\n";
    std::cout << report;
    return 0;
}

int cmd_haplotype(const Options& opt, const std::string& cone_id, const std::string& sum) {
    Loaded in = load(opt, true);
    const Cone& cone = in.chromology->cone(cone_id);
    auto words = words_for_names(*in.study, cone, parse_name_list(sum));
    HaplotypeTuple tuple = haplotype(cone, words, in.study->threshold(), in.study->alphabet());
    std::cout << render_haplotype(cone, tuple, format_of(opt));
    return 0;
}

int cmd_equal(const Options& opt, const std::string& cone_id, const std::string& lhs,
              const std::string& rhs) {
    Loaded in = load(opt, true);
    RecombinationQuotient quotient(*in.chromology, *in.study, cone_id,
                                   std::size_t{1} << 20);
    const Cone& cone = quotient.cone();
    bool equal = quotient.equal(words_for_names(*in.study, cone, parse_name_list(lhs)),
                                words_for_names(*in.study, cone, parse_name_list(rhs)));
    std::cout << (equal ? "true" : "false") << "\n";
    return equal ? 0 : 1;
}

int cmd_localize(const Options& opt, int max_black) {
    Loaded in = load(opt, false);
    auto markers = minimize_markers(*in.study, max_black);
    std::cout << render_markers(markers, *in.study, format_of(opt));
    return 0;
}

int cmd_predict(const Options& opt, const std::string& cone_id,
                const std::vector<std::string>& diploid_literals) {
    Loaded in = load(opt, true);
    const Cone& cone = in.chromology->cone(cone_id);
    std::set<Diploid> query;
    for (const auto& lit : diploid_literals)
        query.insert(parse_diploid_literal(lit, cone.peak, in.study->threshold(),
                                           in.study->alphabet()));
    PredictionReport report =
        predict(*in.study, *in.chromology, cone_id, query, effective_budget(opt));
    std::cout << render_prediction(report, format_of(opt));
    return 0;
}

int cmd_fibers(const Options& opt, const std::string& cone_id, const std::string& sum) {
    Loaded in = load(opt, true);
    const Cone& cone = in.chromology->cone(cone_id);
    auto words = words_for_names(*in.study, cone, parse_name_list(sum));
    HaplotypeTuple cls = haplotype(cone, words, in.study->threshold(), in.study->alphabet());
    FiberComponentReport report =
        fiber_components(*in.study, *in.chromology, cone_id, cls, effective_budget(opt));
    std::cout << render_fibers(report, format_of(opt));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"haplotype analysis on sequence alignments"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("-a,--alignment", opt.alignment_path, "alignment table (TSV)")
        ->required();
    app.add_option("-c,--chromology", opt.chromology_path, "chromology file (JSON)");
    app.add_option("--threshold", opt.threshold, "truncation color (default from file, else 1)");
    auto* budget_opt =
        app.add_option("--budget", opt.budget, "subset enumeration budget (default 25)");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* validate = app.add_subcommand("validate", "parse and validate both inputs");

    std::string cone_id, sum, lhs, rhs;
    auto* hap = app.add_subcommand("haplotype", "haplotype tuple of a sum of genotypes");
    hap->add_option("--cone", cone_id, "cone id")->required();
    hap->add_option("--sum", sum, "comma-separated genotype names")->required();

    auto* equal = app.add_subcommand("equal", "equality in the recombination quotient");
    equal->add_option("--cone", cone_id, "cone id")->required();
    equal->add_option("lhs", lhs, "first sum of genotype names")->required();
    equal->add_option("rhs", rhs, "second sum of genotype names")->required();

    int max_black = 3;
    auto* localize = app.add_subcommand("localize", "minimal separating marker sets");
    localize->add_option("--max-black", max_black, "most marker positions to keep")->required();

    std::vector<std::string> diploids;
    auto* predict_cmd = app.add_subcommand("predict", "phenotype prediction for a haplogroup");
    predict_cmd->add_option("--cone", cone_id, "cone id")->required();
    predict_cmd->add_option("--diploid", diploids, "diploid literal WORD/WORD (repeatable)")
        ->required();

    auto* fibers = app.add_subcommand("fibers", "phenotype components of a haplotype fiber");
    fibers->add_option("--cone", cone_id, "cone id")->required();
    fibers->add_option("--sum", sum, "comma-separated genotype names")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    opt.budget_explicit = budget_opt->count() > 0;

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (hap->parsed()) return cmd_haplotype(opt, cone_id, sum);
        if (equal->parsed()) return cmd_equal(opt, cone_id, lhs, rhs);
        if (localize->parsed()) return cmd_localize(opt, max_black);
        if (predict_cmd->parsed()) return cmd_predict(opt, cone_id, diploids);
        if (fibers->parsed()) return cmd_fibers(opt, cone_id, sum);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
