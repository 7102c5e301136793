#pragma once

// Command implementations behind the CLI front end. Each command takes its
// parsed options plus output/diagnostic streams and returns the process
// exit code: 0 success, 1 verified-property violation, 2 input error.

#include <iosfwd>
#include <string>

#include "lienil/io.hpp"

namespace lienil::cli {

struct AnalyzeOptions {
    std::string input;
    bool peirce = false;
    bool triangularize = false;
};
int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);

struct MtableOptions {
    int lmax = 8;
    i64 nmax = 12;
    bool check_bruteforce = false;
};
int cmd_mtable(const MtableOptions& opt, std::ostream& out, std::ostream& err);

struct RegionOptions {
    int lmax = 12;
    i64 nmax = 40;
};
int cmd_region(const RegionOptions& opt, std::ostream& out, std::ostream& err);

struct ConstructOptions {
    std::string type;      // comma-separated parts, e.g. "2,3"
    std::string balanced;  // "L N"
    std::string field = "q";
};
int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err);

struct FuzzOptions {
    int n = 4;
    std::string field = "gf2";
    int trials = 100;
    u64 seed = 1;
    int density = 2;
};
int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err);

struct ChainOptions {
    std::string input;
    std::string strategy = "det";  // det | seeded
    u64 seed = 1;
    int trials = 1;
};
int cmd_chain(const ChainOptions& opt, std::ostream& out, std::ostream& err);

/// One fuzz trial's generator set: `density` strictly upper triangular
/// matrices over the field, entries drawn from the trial rng.
std::vector<Matrix> sample_strict_upper(const FieldPtr& field, int n, int density,
                                        std::mt19937_64& rng);

}  // namespace lienil::cli
