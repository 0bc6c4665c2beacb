#include "zcl/certificate.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "zcl/version.hpp"

namespace zcl {

namespace {

std::vector<std::string> sorted_labels(const ProductRing& pr, const ClassVector& c) {
    std::vector<std::string> out;
    out.reserve(c.terms().size());
    for (Index t : c.terms()) out.push_back(pr.label_of(t));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Certificate make_certificate(const ProductRing& pr, const FactorList& list,
                             std::vector<std::string> notes,
                             std::vector<std::string> warnings) {
    Certificate cert;
    cert.family = pr.factor().family();
    cert.source = cert.family ? "family" : "presentation";
    cert.s = pr.slots();
    cert.factor_top = pr.factor().top_degree();
    cert.notes = std::move(notes);
    cert.warnings = std::move(warnings);

    for (const auto& f : list.factors) {
        CertFactor cf;
        cf.terms = sorted_labels(pr, f.cls);
        cf.multiplicity = f.multiplicity;
        const auto deg = pr.homogeneous_degree(f.cls);
        cf.zero_divisor = deg.has_value() && is_zero_divisor(pr, f.cls);
        cert.factors.push_back(std::move(cf));
    }

    const ClassVector expanded = expand(pr, list);
    cert.expanded = sorted_labels(pr, expanded);
    cert.zcl_lower = expanded.is_zero() ? 0 : list.total_length();
    cert.dim_upper = cert.s * cert.factor_top;
    cert.conclusion =
        (cert.zcl_lower == cert.dim_upper && cert.zcl_lower > 0) ? "exact"
                                                                 : "bounds-only";
    if (cert.family && cert.family->m == 2 && cert.family->g >= 2 && cert.s >= 3)
        cert.notes.push_back("m=2 instance (surface case)");
    return cert;
}

Index parse_tuple_label(const ProductRing& pr, const std::string& label) {
    if (label.size() < 2 || label.front() != '(' || label.back() != ')')
        throw std::invalid_argument("malformed tuple label '" + label + "'");
    std::vector<Index> digits;
    std::size_t start = 1;
    while (start < label.size()) {
        std::size_t end = label.find_first_of(",)", start);
        const std::string part = label.substr(start, end - start);
        const auto idx = pr.factor().index_of_label(part);
        if (!idx)
            throw std::invalid_argument("unknown factor label '" + part + "'");
        digits.push_back(*idx);
        start = end + 1;
    }
    if (digits.size() != pr.slots())
        throw std::invalid_argument("tuple label '" + label + "' has wrong arity");
    return pr.encode(digits);
}

ClassVector parse_tuple_class(const ProductRing& pr,
                              const std::vector<std::string>& labels) {
    std::vector<Index> terms;
    terms.reserve(labels.size());
    for (const auto& l : labels) terms.push_back(parse_tuple_label(pr, l));
    return {pr.id(), std::move(terms)};
}

bool certificate_self_check(const Certificate& cert, const ProductRing& pr) {
    if (cert.s != pr.slots() || cert.factor_top != pr.factor().top_degree())
        return false;
    FactorList list;
    for (const auto& cf : cert.factors) {
        if (cf.multiplicity < 1) return false;
        list.factors.push_back({parse_tuple_class(pr, cf.terms), cf.multiplicity});
        if (is_zero_divisor(pr, list.factors.back().cls) != cf.zero_divisor)
            return false;
    }
    const ClassVector expanded = expand(pr, list);
    if (sorted_labels(pr, expanded) != cert.expanded) return false;
    const unsigned lower = expanded.is_zero() ? 0 : list.total_length();
    if (lower != cert.zcl_lower) return false;
    if (cert.dim_upper != cert.s * cert.factor_top) return false;
    const bool exact = cert.zcl_lower == cert.dim_upper && cert.zcl_lower > 0;
    return cert.conclusion == (exact ? "exact" : "bounds-only");
}

bool certificate_self_check(const Certificate& cert) {
    if (!cert.family)
        throw std::invalid_argument(
            "self-check without a ring needs a family certificate");
    const ProductRing pr(rp_sum_ring(cert.family->g, cert.family->m), cert.s);
    return certificate_self_check(cert, pr);
}

std::string certificate_record(const Certificate& cert) {
    nlohmann::json j;
    nlohmann::json params;
    if (cert.family) {
        params["g"] = cert.family->g;
        params["m"] = cert.family->m;
    }
    params["s"] = cert.s;
    params["top_degree"] = cert.factor_top;
    params["source"] = cert.source;
    j["params"] = params;

    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : cert.factors)
        factors.push_back({{"terms", f.terms},
                           {"multiplicity", f.multiplicity},
                           {"zero_divisor", f.zero_divisor}});
    j["factors"] = factors;
    j["expanded"] = cert.expanded;
    j["zcl_lower"] = cert.zcl_lower;
    j["dim_upper"] = cert.dim_upper;
    j["conclusion"] = cert.conclusion;
    j["tool_version"] = tool_version;
    if (!cert.notes.empty()) j["notes"] = cert.notes;
    if (!cert.warnings.empty()) j["warnings"] = cert.warnings;
    if (cert.failure) j["failure"] = *cert.failure;
    return j.dump();
}

std::string certificate_text(const Certificate& cert) {
    std::ostringstream out;
    out << "parameters: ";
    if (cert.family)
        out << "g=" << cert.family->g << " m=" << cert.family->m << " ";
    out << "s=" << cert.s << " (source: " << cert.source
        << ", factor top degree " << cert.factor_top << ")\n";
    out << "factors (" << cert.factors.size() << " distinct, total length ";
    unsigned total = 0;
    for (const auto& f : cert.factors) total += f.multiplicity;
    out << total << "):\n";
    for (const auto& f : cert.factors) {
        out << "  (";
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
            if (i) out << " + ";
            out << f.terms[i];
        }
        out << ")^" << f.multiplicity
            << (f.zero_divisor ? "  [zero divisor]" : "  [NOT a zero divisor]")
            << "\n";
    }
    out << "expanded product: ";
    if (cert.expanded.empty())
        out << "0";
    else
        for (std::size_t i = 0; i < cert.expanded.size(); ++i) {
            if (i) out << " + ";
            out << cert.expanded[i];
        }
    out << "\n";
    out << "zcl lower bound: " << cert.zcl_lower << "\n";
    out << "dimensional upper bound: " << cert.dim_upper << "\n";
    out << "conclusion: " << cert.conclusion;
    if (cert.conclusion == "exact")
        out << " (TC_" << cert.s << " = " << cert.zcl_lower << ")";
    else
        out << " (" << cert.zcl_lower << " <= TC_" << cert.s << " <= "
            << cert.dim_upper << ")";
    out << "\n";
    for (const auto& n : cert.notes) out << "note: " << n << "\n";
    for (const auto& w : cert.warnings) out << "warning: " << w << "\n";
    if (cert.failure) out << "FAILURE: " << *cert.failure << "\n";
    return out.str();
}

}  // namespace zcl
