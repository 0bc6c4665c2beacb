#include "zcl/verify.hpp"

#include <sstream>

namespace zcl {

Certificate verify_theorem(unsigned g, unsigned m, unsigned s) {
    if (g < 2 || m < 2)
        throw std::invalid_argument("verify_theorem: requires g >= 2 and m >= 2");
    if (s < 3) throw std::invalid_argument("verify_theorem: requires s >= 3");

    const ProductRing pr(rp_sum_ring(g, m), s);
    const FactorList witness = witness_factors(pr);

    Certificate cert = make_certificate(pr, witness);

    for (std::size_t i = 0; i < cert.factors.size(); ++i)
        if (!cert.factors[i].zero_divisor) {
            std::ostringstream msg;
            msg << "factor " << i << " is not a zero divisor";
            cert.failure = msg.str();
            cert.conclusion = "bounds-only";
            return cert;
        }

    // Locate the first vanishing step, if any, for the failure report.
    if (cert.zcl_lower == 0) {
        ClassVector acc = pr.basis_class(0);
        unsigned step = 0;
        for (std::size_t i = 0; i < witness.factors.size(); ++i)
            for (unsigned k = 0; k < witness.factors[i].multiplicity; ++k) {
                const ClassVector next = pr.mul(acc, witness.factors[i].cls);
                ++step;
                if (next.is_zero()) {
                    std::ostringstream msg;
                    msg << "witness product vanished at multiplication " << step
                        << " (factor index " << i << "); partial product before it: "
                        << class_to_string(pr, acc);
                    cert.failure = msg.str();
                    return cert;
                }
                acc = next;
            }
    }

    const ClassVector expected = pr.top_class();
    const ClassVector expanded =
        parse_tuple_class(pr, cert.expanded);  // what the certificate records
    if (!(expanded == expected)) {
        cert.failure = "expanded witness product differs from the top class";
        cert.conclusion = "bounds-only";
        return cert;
    }
    return cert;
}

TcBounds tc_bounds(unsigned g, unsigned m, unsigned s) {
    if (g < 1) throw std::invalid_argument("tc_bounds: requires g >= 1");
    if (m < 2) throw std::invalid_argument("tc_bounds: requires m >= 2");
    if (s < 2) throw std::invalid_argument("tc_bounds: requires s >= 2");

    TcBounds out;
    out.upper = s * m;
    if (g >= 2 && s >= 3) {
        out.certificate = verify_theorem(g, m, s);
        out.lower = out.certificate.zcl_lower;
        return out;
    }
    const ProductRing pr(rp_sum_ring(g, m), s);
    SearchOptions opts;
    opts.pool = PoolKind::Degree1;
    opts.strategy = Strategy::Exhaustive;
    out.certificate = zcl_search(pr, opts).certificate;
    out.lower = out.certificate.zcl_lower;
    return out;
}

}  // namespace zcl
