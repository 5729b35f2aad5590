#include <iostream>
#include <string>

#include "pentacover/acceptance.hpp"

int main(int argc, char** argv) {
    pentacover::AcceptanceOptions opts;
    bool expect_documented_red = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--quick")
            opts.quick = true;
        else if (a == "--manifest" && i + 1 < argc)
            opts.manifest_path = argv[++i];
        else if (a == "--expect-documented-red")
            expect_documented_red = true;
        else {
            std::cerr << "usage: acceptance [--quick] [--manifest FILE] "
                         "[--expect-documented-red]\n";
            return 2;
        }
    }
    try {
        auto rs = pentacover::run_acceptance(opts, std::cout);
        if (!expect_documented_red) return pentacover::all_passed(rs) ? 0 : 1;
        // Regression-gate mode: succeed exactly when every check passes
        // except 6b, which must stay red with the verified quaternion
        // diagnostic (g48 is a symmetric Q_8-cover of K_6, not dihedral).
        bool ok = true;
        for (const auto& r : rs) {
            if (r.id == "6b")
                ok = ok && !r.skipped && !r.passed &&
                     r.detail.find("Q_8") != std::string::npos;
            else
                ok = ok && (r.skipped || r.passed);
        }
        if (!ok) std::cerr << "suite state differs from the documented expectation\n";
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "acceptance harness error: " << e.what() << "\n";
        return 1;
    }
}
