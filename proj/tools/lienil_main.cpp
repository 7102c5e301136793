// Command-line front end: analyze documents, print M tables and the
// equality-region chart, emit block-staircase constructions, fuzz the
// dimension bound, and dump chain traces.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lienil/cli.hpp"

namespace {

int with_output(const std::string& path, const std::function<int(std::ostream&)>& body) {
    if (path.empty()) return body(std::cout);
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 2;
    }
    return body(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Lie nilpotent matrix subalgebras"};
    app.require_subcommand(1);

    std::string output;

    lienil::cli::AnalyzeOptions analyze;
    auto* cmd_analyze = app.add_subcommand("analyze", "close a document and check the bounds");
    cmd_analyze->add_option("--input", analyze.input, "algebra document (JSON)")->required();
    cmd_analyze->add_flag("--peirce", analyze.peirce, "decompose along central idempotents");
    cmd_analyze->add_flag("--triangularize", analyze.triangularize,
                          "conjugate split local algebras to triangular form");
    cmd_analyze->add_option("--output", output, "write the report here instead of stdout");

    lienil::cli::MtableOptions mtable;
    auto* cmd_mtable = app.add_subcommand("mtable", "tab-separated M(l,n) grid");
    cmd_mtable->add_option("--lmax", mtable.lmax)->required();
    cmd_mtable->add_option("--nmax", mtable.nmax)->required();
    cmd_mtable->add_flag("--check-bruteforce", mtable.check_bruteforce,
                         "cross-check every cell against enumeration");
    cmd_mtable->add_option("--output", output);

    lienil::cli::RegionOptions region;
    auto* cmd_region = app.add_subcommand("region", "equality-region classification table");
    cmd_region->add_option("--lmax", region.lmax)->required();
    cmd_region->add_option("--nmax", region.nmax)->required();
    cmd_region->add_option("--output", output);

    lienil::cli::ConstructOptions construct;
    auto* cmd_construct = app.add_subcommand("construct", "emit a block-staircase algebra document");
    cmd_construct->add_option("--type", construct.type, "comma-separated positive parts");
    cmd_construct->add_option("--balanced", construct.balanced, "\"L N\" balanced parts");
    cmd_construct->add_option("--field", construct.field, "q | gfP | gfP^K")->required();
    cmd_construct->add_option("--output", output);

    lienil::cli::FuzzOptions fuzz;
    auto* cmd_fuzz = app.add_subcommand("fuzz", "randomized bound verification");
    cmd_fuzz->add_option("--n", fuzz.n)->required();
    cmd_fuzz->add_option("--field", fuzz.field)->required();
    cmd_fuzz->add_option("--trials", fuzz.trials)->required();
    cmd_fuzz->add_option("--seed", fuzz.seed);
    cmd_fuzz->add_option("--density", fuzz.density);
    cmd_fuzz->add_option("--output", output);

    lienil::cli::ChainOptions chain;
    auto* cmd_chain = app.add_subcommand("chain", "chain trace for a document");
    cmd_chain->add_option("--input", chain.input)->required();
    cmd_chain->add_option("--strategy", chain.strategy, "det | seeded");
    cmd_chain->add_option("--seed", chain.seed);
    cmd_chain->add_option("--trials", chain.trials);
    cmd_chain->add_option("--output", output);

    CLI11_PARSE(app, argc, argv);

    if (cmd_analyze->parsed())
        return with_output(output, [&](std::ostream& out) {
            return lienil::cli::cmd_analyze(analyze, out, std::cerr);
        });
    if (cmd_mtable->parsed())
        return with_output(output, [&](std::ostream& out) {
            return lienil::cli::cmd_mtable(mtable, out, std::cerr);
        });
    if (cmd_region->parsed())
        return with_output(output, [&](std::ostream& out) {
            return lienil::cli::cmd_region(region, out, std::cerr);
        });
    if (cmd_construct->parsed())
        return with_output(output, [&](std::ostream& out) {
            return lienil::cli::cmd_construct(construct, out, std::cerr);
        });
    if (cmd_fuzz->parsed())
        return with_output(output, [&](std::ostream& out) {
            return lienil::cli::cmd_fuzz(fuzz, out, std::cerr);
        });
    if (cmd_chain->parsed())
        return with_output(output, [&](std::ostream& out) {
            return lienil::cli::cmd_chain(chain, out, std::cerr);
        });
    return 2;
}
