// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [zeros-file] [--full] [--only N]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "ppz/errors.hpp"
#include "ppz/verify.hpp"
#include "ppz/zetazeros.hpp"

int main(int argc, char** argv) {
    std::string zeros_path = std::string(PPZ_DATA_DIR) + "/zeros_10k.txt";
    ppz::VerifyOptions options;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--full") {
            options.full = true;
        } else if (arg == "--only" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            zeros_path = arg;
        }
    }
    const ppz::ZeroSet zeros = ppz::load_zeros(zeros_path);
    options.zeros = &zeros;

    int failed = 0;
    for (int id = 1; id <= 12; ++id) {
        if (only != 0 && id != only) continue;
        ppz::CriterionResult r;
        try {
            r = ppz::run_criterion(id, options);
        } catch (const std::exception& e) {
            r.id = id;
            r.name = "error";
            r.measured["exception"] = e.what();
        }
        if (!r.passed) ++failed;
        std::printf("criterion %2d %-24s %s  %.2fs  %s\n", id, r.name.c_str(), r.passed ? "PASS" : "FAIL",
                    r.seconds, r.measured.dump().substr(0, 600).c_str());
        std::fflush(stdout);
    }
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
