#include "pedigrad/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "pedigrad/errors.hpp"

namespace pedigrad {

using ordered_json = nlohmann::ordered_json;

Segment parse_segment_literal(const std::string& text,
                              const std::shared_ptr<const PreOrder>& order) {
    std::vector<int> sizes;
    std::vector<std::string> colors;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError("segment literal: expected '(' at offset " + std::to_string(i) +
                             " in '" + text + "'");
        std::size_t colon = text.find(':', i);
        std::size_t close = text.find(')', i);
        if (colon == std::string::npos || close == std::string::npos || colon > close)
            throw ParseError("segment literal: malformed patch at offset " + std::to_string(i) +
                             " in '" + text + "'");
        std::string len = text.substr(i + 1, colon - i - 1);
        std::string color = text.substr(colon + 1, close - colon - 1);
        if (len.empty() || len.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("segment literal: patch length '" + len + "' is not a number");
        if (color.empty()) throw ParseError("segment literal: empty color name");
        sizes.push_back(std::stoi(len));
        colors.push_back(color);
        i = close + 1;
    }
    if (sizes.empty() && !text.empty())
        throw ParseError("segment literal '" + text + "' contains no patches");
    return Segment::make(std::move(sizes), colors, order);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Alphabet parse_alphabet_line(const std::string& line, int lineno) {
    // "#alphabet A,C,G,T gap=e"
    std::istringstream in(line);
    std::string tag, letters_field, gap_field;
    in >> tag >> letters_field >> gap_field;
    if (letters_field.empty() || gap_field.rfind("gap=", 0) != 0 || gap_field.size() != 5)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected '#alphabet L,L,... gap=X'");
    Alphabet a;
    for (const auto& item : split(letters_field, ',')) {
        if (item.size() != 1)
            throw ParseError("line " + std::to_string(lineno) + ": alphabet letter '" + item +
                             "' must be a single character");
        a.letters += item[0];
    }
    a.gap = gap_field[4];
    a.validate();
    return a;
}

} // namespace

AlignmentStudy parse_alignment(const std::string& path,
                               const std::shared_ptr<const PreOrder>& order,
                               const std::string& threshold_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open alignment file '" + path + "'");

    std::optional<Alphabet> alphabet;
    std::optional<std::string> segment_literal;
    std::string threshold = "1";
    bool header_seen = false;
    std::vector<std::array<std::string, 4>> rows;
    std::vector<int> row_lines;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = strip(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            if (t.rfind("#alphabet", 0) == 0)
                alphabet = parse_alphabet_line(t, lineno);
            else if (t.rfind("#segment", 0) == 0)
                segment_literal = strip(t.substr(8));
            else if (t.rfind("#threshold", 0) == 0)
                threshold = strip(t.substr(10));
            else
                throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + t +
                                 "'");
            continue;
        }
        auto fields = split(line, '\t');
        if (fields.size() != 4)
            throw ParseError("line " + std::to_string(lineno) + ": expected 4 tab-separated "
                             "fields, found " + std::to_string(fields.size()));
        if (!header_seen) {
            if (strip(fields[0]) != "name" || strip(fields[1]) != "allele1" ||
                strip(fields[2]) != "allele2" || strip(fields[3]) != "phenotypes")
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header 'name\tallele1\tallele2\tphenotypes'");
            header_seen = true;
            continue;
        }
        rows.push_back({strip(fields[0]), strip(fields[1]), strip(fields[2]), strip(fields[3])});
        row_lines.push_back(lineno);
    }
    if (!threshold_override.empty()) threshold = threshold_override;
    if (!alphabet) throw ParseError("alignment file lacks the '#alphabet' directive");
    if (!header_seen) throw ParseError("alignment file lacks the header row");
    if (rows.empty()) throw ParseError("alignment file has no genotype rows");

    Segment base;
    if (segment_literal) {
        base = parse_segment_literal(*segment_literal, order);
    } else {
        int n = static_cast<int>(rows.front()[1].size());
        std::vector<int> sizes(n, 1);
        std::vector<std::string> colors(n, threshold);
        base = Segment::make(std::move(sizes), colors, order);
    }

    std::vector<std::pair<std::string, Diploid>> genotypes;
    std::set<std::string> labels_seen;
    std::vector<std::string> labels;
    std::map<std::string, std::vector<std::string>> phenotypes;

    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& [name, a1, a2, ph] = rows[r];
        auto where = [&] { return "row '" + name + "' (line " + std::to_string(row_lines[r]) + ")"; };
        if (name.empty()) throw ValidationError("line " + std::to_string(row_lines[r]) +
                                                ": empty genotype name");
        Diploid dip;
        try {
            dip.allele1 = make_word_projected(base, threshold, *alphabet, a1);
            dip.allele2 = make_word_projected(base, threshold, *alphabet, a2);
        } catch (const ValidationError& e) {
            throw ValidationError(where() + ": " + e.what());
        }
        genotypes.emplace_back(name, std::move(dip));

        std::vector<std::string> row_labels;
        for (const auto& item : split(ph, ';')) {
            std::string label = strip(item);
            if (label.empty())
                throw ValidationError(where() + ": empty phenotype label");
            row_labels.push_back(label);
            if (labels_seen.insert(label).second) labels.push_back(label);
        }
        phenotypes[name] = std::move(row_labels);
    }
    std::sort(labels.begin(), labels.end());

    return AlignmentStudy(std::move(base), threshold, *alphabet, std::move(genotypes),
                          std::move(labels), std::move(phenotypes));
}

namespace {

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open chromology file '" + path + "'");
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("chromology '" + path + "': " + e.what());
    }
}

std::shared_ptr<const PreOrder> preorder_from_json(const ordered_json& doc,
                                                   const std::string& path) {
    try {
        if (!doc.contains("preorder")) return PreOrder::boolean();
        const auto& po = doc.at("preorder");
        std::vector<std::string> elements = po.at("elements").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> relations;
        if (po.contains("leq"))
            for (const auto& pair : po.at("leq")) {
                if (!pair.is_array() || pair.size() != 2)
                    throw ParseError("chromology '" + path + "': each leq entry must be a pair");
                relations.emplace_back(pair.at(0).get<std::string>(),
                                       pair.at(1).get<std::string>());
            }
        return std::make_shared<const PreOrder>(std::move(elements), relations);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("chromology '" + path + "': " + e.what());
    }
}

} // namespace

std::shared_ptr<const PreOrder> parse_chromology_preorder(const std::string& path) {
    return preorder_from_json(load_json(path), path);
}

Chromology parse_chromology(const std::string& path) {
    ordered_json doc = load_json(path);
    auto order = preorder_from_json(doc, path);

    std::vector<Cone> cones;
    try {
        for (const auto& entry : doc.at("cones")) {
            std::string id = entry.at("id").get<std::string>();
            Segment peak = parse_segment_literal(entry.at("peak").get<std::string>(), order);
            std::vector<std::vector<int>> masks;
            for (const auto& leg : entry.at("legs"))
                masks.push_back(leg.get<std::vector<int>>());
            cones.push_back(make_cone(std::move(id), peak, masks));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("chromology '" + path + "': " + e.what());
    }
    return Chromology(order, std::move(cones));
}

Diploid parse_diploid_literal(const std::string& text, const Segment& target,
                              const std::string& threshold, const Alphabet& alphabet) {
    std::string compact;
    for (char c : text)
        if (c != ' ') compact += c;
    auto slash = compact.find('/');
    if (slash == std::string::npos || compact.find('/', slash + 1) != std::string::npos)
        throw ParseError("diploid literal '" + text + "' must be WORD/WORD");
    return Diploid{make_word_projected(target, threshold, alphabet, compact.substr(0, slash)),
                   make_word_projected(target, threshold, alphabet, compact.substr(slash + 1))};
}

std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& item : split(text, ',')) {
        std::string name = strip(item);
        if (name.empty()) throw ParseError("empty name in list '" + text + "'");
        out.push_back(name);
    }
    return out;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string join_words(const std::set<Word>& words) {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += " + ";
        out += w.text();
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> word_list(const std::set<Word>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(w.text());
    return out;
}

std::string join_names(const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ",";
        out += names[i];
    }
    return out + "}";
}

ordered_json tuple_json(const HaplotypeTuple& tuple) {
    ordered_json legs = ordered_json::array();
    for (const auto& leg : tuple.legs) legs.push_back(word_list(leg));
    return legs;
}

} // namespace

std::string render_haplotype(const Cone& cone, const HaplotypeTuple& tuple, ReportFormat format) {
    if (format == ReportFormat::Json) {
        ordered_json doc;
        doc["cone"] = cone.id;
        doc["peak"] = cone.peak.literal();
        ordered_json legs = ordered_json::array();
        for (std::size_t i = 0; i < tuple.legs.size(); ++i) {
            ordered_json leg;
            leg["segment"] = cone.legs[i].literal();
            leg["words"] = word_list(tuple.legs[i]);
            legs.push_back(std::move(leg));
        }
        doc["legs"] = std::move(legs);
        return doc.dump(2) + "\n";
    }
    std::string out = "cone " + cone.id + " peak " + cone.peak.literal() + "\n";
    for (std::size_t i = 0; i < tuple.legs.size(); ++i)
        out += "leg " + std::to_string(i + 1) + " " + cone.legs[i].literal() + ": " +
               join_words(tuple.legs[i]) + "\n";
    return out;
}

std::string render_separation(const SeparationReport& report, const AlignmentStudy& study,
                              ReportFormat format) {
    (void)study;
    if (format == ReportFormat::Json) {
        ordered_json doc;
        doc["target"] = report.target.literal();
        doc["projection"] = to_string(report.projection);
        doc["separated"] = report.separated;
        ordered_json conflicts = ordered_json::array();
        for (const auto& c : report.conflicts) {
            ordered_json entry;
            entry["first"] = c.name1;
            entry["second"] = c.name2;
            entry["shared"] = c.shared;
            entry["phenotype_first"] = c.phenotype1.to_string();
            entry["phenotype_second"] = c.phenotype2.to_string();
            conflicts.push_back(std::move(entry));
        }
        doc["conflicts"] = std::move(conflicts);
        return doc.dump(2) + "\n";
    }
    std::string out = "target " + report.target.literal() + " projection " +
                      to_string(report.projection) + ": " +
                      (report.separated ? "separated" : "not separated") + "\n";
    for (const auto& c : report.conflicts)
        out += "conflict (" + c.name1 + ", " + c.name2 + ") share " + c.shared + " but " +
               c.phenotype1.to_string() + " != " + c.phenotype2.to_string() + "\n";
    return out;
}

std::string render_markers(const std::vector<Segment>& markers, const AlignmentStudy& study,
                           ReportFormat format) {
    if (format == ReportFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const auto& m : markers) {
            ordered_json entry;
            entry["positions"] = marker_positions(study, m);
            entry["segment"] = m.literal();
            doc.push_back(std::move(entry));
        }
        return doc.dump(2) + "\n";
    }
    if (markers.empty()) return "no separating marker set within budget\n";
    std::string out;
    for (const auto& m : markers) {
        auto positions = marker_positions(study, m);
        out += "markers {";
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(positions[i]);
        }
        out += "}: " + m.literal() + "\n";
    }
    return out;
}

std::string render_prediction(const PredictionReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        ordered_json doc;
        doc["cone"] = report.cone_id;
        doc["target"] = tuple_json(report.target);
        ordered_json step1 = ordered_json::array();
        for (const auto& lc : report.step1) {
            ordered_json leg;
            leg["pass"] = lc.pass;
            leg["missing"] = lc.missing;
            step1.push_back(std::move(leg));
        }
        doc["step1"] = std::move(step1);
        doc["step1_pass"] = report.step1_pass;
        doc["step2_pass"] = report.step2_pass;
        doc["allowed"] = report.allowed;
        ordered_json fiber = ordered_json::array();
        for (const auto& entry : report.fiber) {
            ordered_json e;
            e["names"] = entry.names;
            e["phenotype"] = entry.phenotype.to_string();
            fiber.push_back(std::move(e));
        }
        doc["fiber"] = std::move(fiber);
        ordered_json predicted = ordered_json::array();
        for (const auto& v : report.predicted_phenotypes) predicted.push_back(v.to_string());
        doc["predicted_phenotypes"] = std::move(predicted);
        return doc.dump(2) + "\n";
    }
    std::string out = "cone " + report.cone_id + "\n";
    for (std::size_t i = 0; i < report.target.legs.size(); ++i)
        out += "target leg " + std::to_string(i + 1) + ": " + join_words(report.target.legs[i]) +
               "\n";
    out += "step 1 (gene pool): " + std::string(report.step1_pass ? "pass" : "fail") + "\n";
    for (std::size_t i = 0; i < report.step1.size(); ++i) {
        out += "  leg " + std::to_string(i + 1) + ": " +
               (report.step1[i].pass ? "pass" : "fail");
        if (!report.step1[i].missing.empty()) {
            out += " missing";
            for (const auto& w : report.step1[i].missing) out += " " + w;
        }
        out += "\n";
    }
    out += "step 2 (joint lift): " + std::string(report.step2_pass ? "pass" : "fail") + "\n";
    out += "fiber (" + std::to_string(report.fiber.size()) + " subsets):\n";
    for (const auto& entry : report.fiber)
        out += "  " + join_names(entry.names) + " -> " + entry.phenotype.to_string() + "\n";
    out += "predicted phenotypes:";
    if (report.predicted_phenotypes.empty()) out += " none";
    for (const auto& v : report.predicted_phenotypes) out += " " + v.to_string();
    out += "\n";
    return out;
}

std::string render_fibers(const FiberComponentReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        ordered_json doc;
        doc["cone"] = report.cone_id;
        doc["class"] = tuple_json(report.haplotype_class);
        ordered_json components = ordered_json::array();
        for (const auto& [value, members] : report.components) {
            ordered_json entry;
            entry["phenotype"] = value.to_string();
            ordered_json subsets = ordered_json::array();
            for (const auto& names : members) subsets.push_back(names);
            entry["members"] = std::move(subsets);
            components.push_back(std::move(entry));
        }
        doc["components"] = std::move(components);
        return doc.dump(2) + "\n";
    }
    std::string out = "cone " + report.cone_id + "\n";
    for (std::size_t i = 0; i < report.haplotype_class.legs.size(); ++i)
        out += "class leg " + std::to_string(i + 1) + ": " +
               join_words(report.haplotype_class.legs[i]) + "\n";
    out += std::to_string(report.components.size()) + " phenotype component(s)\n";
    for (const auto& [value, members] : report.components) {
        out += "component " + value.to_string() + " (" + std::to_string(members.size()) +
               " subsets):";
        for (const auto& names : members) out += " " + join_names(names);
        out += "\n";
    }
    return out;
}

} // namespace pedigrad
