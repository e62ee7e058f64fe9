#include "charvar/verify.hpp"

#include "charvar/genus1.hpp"
#include "charvar/mirror.hpp"
#include "charvar/moduli.hpp"
#include "charvar/recursion.hpp"

namespace charvar {

Report run_full_verification(const VerifyOptions& options) {
    Report report = genus1::verify_genus1();

    PolyMatrix m = recursion::matrix_M();
    if (options.fault_entry) {
        const auto [row, col] = *options.fault_entry;
        m.at(row, col) += Poly(1);
    }
    report.merge(recursion::verify_recursion(options.genus_max, m, options.threads));
    report.merge(moduli::verify_moduli(options.genus_max, options.threads));
    report.merge(mirror::verify_mirror(options.genus_max, options.threads));
    return report;
}

}  // namespace charvar
