// End-to-end checks of the command-line surface: exit codes, error paths
// and the budget override.
//
// usage: cli_checks <path-to-cli-binary> <path-to-data-dir>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string g_cli;
std::string g_data;
int g_failures = 0;

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& args, const std::string& env = "") {
    CommandResult result;
    std::string cmd = env + " " + g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool condition, const std::string& label, const std::string& detail = "") {
    if (condition) {
        std::cout << "ok: " << label << "\n";
    } else {
        std::cout << "FAIL: " << label << (detail.empty() ? "" : " — " + detail) << "\n";
        ++g_failures;
    }
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& contents) : path(name) {
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: cli_checks <cli-binary> <data-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_data = argv[2];
    const std::string base = "-a " + g_data + "/corpus_alignment.tsv -c " + g_data +
                             "/corpus_chromology.json ";

    // exit 0: a valid corpus validates
    auto v = run_command(base + "validate");
    expect(v.exit_code == 0, "validate exits 0 on the corpus", v.output);
    expect(v.output.find("valid") != std::string::npos, "validate reports success");

    // exit 1: a negative yes/no answer
    auto eq_false = run_command(base + "equal --cone rho a,b,c p4,p5,p6");
    expect(eq_false.exit_code == 1 && eq_false.output == "false\n",
           "equal exits 1 and prints false on a negative answer", eq_false.output);
    auto eq_true = run_command(base + "equal --cone rho b,c p4,p6");
    expect(eq_true.exit_code == 0 && eq_true.output == "true\n",
           "equal exits 0 and prints true on a positive answer", eq_true.output);
    auto eq_prime = run_command(base + "equal --cone rho_prime b,c p4,p5,p6");
    expect(eq_prime.exit_code == 0 && eq_prime.output == "true\n",
           "equal under rho_prime identifies b+c with p4+p5+p6", eq_prime.output);

    // exit 2: parse errors
    {
        TempFile bad("cli_checks_bad_chromology.json", "{ not json");
        auto r = run_command("-a " + g_data + "/corpus_alignment.tsv -c " + bad.path +
                             " validate");
        expect(r.exit_code == 2, "malformed chromology JSON exits 2", r.output);
    }
    {
        TempFile bad("cli_checks_missing_column.tsv",
                     "#alphabet A,C,G,T gap=e\n"
                     "name\tallele1\tallele2\tphenotypes\n"
                     "x\tAC\tGT\n");
        auto r = run_command("-a " + bad.path + " -c " + g_data +
                             "/corpus_chromology.json validate");
        expect(r.exit_code == 2, "a row with a missing column exits 2", r.output);
    }
    {
        auto r = run_command(base + "predict --cone rho --diploid ACGT");
        expect(r.exit_code == 2, "a malformed diploid literal exits 2", r.output);
    }

    // exit 3: invariant violations
    {
        TempFile bad("cli_checks_short_allele.tsv",
                     "#alphabet A,C,G,T gap=e\n"
                     "name\tallele1\tallele2\tphenotypes\n"
                     "x\tACCATTAGCTACCTATAC\tACCACTAGCTACATATGC\tdis\n"
                     "y\tACCATTAGCTACCTATA\tACCACTAGCTACATATGG\thea\n");
        auto r = run_command("-a " + bad.path + " -c " + g_data +
                             "/corpus_chromology.json validate");
        expect(r.exit_code == 3, "a 17-letter allele in an 18-length study exits 3", r.output);
        expect(r.output.find("'y'") != std::string::npos, "the message names the offending row",
               r.output);
    }
    {
        TempFile bad("cli_checks_bad_leg.json",
                     R"json({"preorder": {"elements": ["0","1"], "leq": [["0","1"]]},
                         "cones": [{"id": "r", "peak": "(6:1)(6:1)(6:1)", "legs": [[4]]}]})json");
        auto r = run_command("-a " + g_data + "/corpus_alignment.tsv -c " + bad.path +
                             " validate");
        expect(r.exit_code == 3, "a leg past the peak's patches exits 3", r.output);
    }
    {
        auto r = run_command(base + "haplotype --cone nope --sum b,c");
        expect(r.exit_code == 3, "an unknown cone id exits 3", r.output);
        auto r2 = run_command(base + "haplotype --cone rho --sum b,zz");
        expect(r2.exit_code == 3, "an unknown genotype name exits 3", r2.output);
    }

    // exit 4: subset budget, via flag and via environment
    const std::string z3 = "predict --cone rho"
                           " --diploid ACCACTAGCTTCGTATGC/ACCACTAGGTTCATATTC"
                           " --diploid AGCATTAGCTACCTATTC/AACATTAGGTTCTTATAC";
    {
        auto r = run_command(base + "--budget 3 " + z3);
        expect(r.exit_code == 4, "a too-small --budget exits 4", r.output);
        auto r2 = run_command(base + z3, "PEDIGRAD_BUDGET=3");
        expect(r2.exit_code == 4, "PEDIGRAD_BUDGET overrides the default budget", r2.output);
        auto r3 = run_command(base + "--budget 7 " + z3);
        expect(r3.exit_code == 0, "an explicit --budget beats the environment", r3.output);
    }

    // reports match the worked values
    {
        auto r = run_command(base + "localize --max-black 2");
        expect(r.exit_code == 0 && r.output == "markers {9,13}: (8:0)(1:1)(3:0)(1:1)(5:0)\n",
               "localize --max-black 2 finds exactly {9,13}", r.output);
    }
    {
        auto r = run_command(base + "fibers --cone rho --sum b,c");
        expect(r.exit_code == 0 &&
                   r.output.find("2 phenotype component(s)") != std::string::npos &&
                   r.output.find("{b,c}") != std::string::npos &&
                   r.output.find("{p4,p6}") != std::string::npos,
               "fibers report shows both components", r.output);
    }

    if (g_failures) std::cout << g_failures << " check(s) failed\n";
    return g_failures == 0 ? 0 : 1;
}
