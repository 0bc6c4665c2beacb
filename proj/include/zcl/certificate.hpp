#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zcl/engine.hpp"

namespace zcl {

struct CertFactor {
    std::vector<std::string> terms;  // basis labels, sorted
    unsigned multiplicity = 1;
    bool zero_divisor = false;
};

/// A machine-checkable record of one zero-divisor cup-length computation.
/// Everything is rendered to labels and numbers so the record stands on its
/// own; certificate_self_check re-parses the factors, re-expands them and
/// compares bit-for-bit.
struct Certificate {
    std::optional<FamilyTag> family;  // set when the factor ring is g#RP^m
    std::string source;               // "family" or "presentation"
    unsigned s = 0;
    unsigned factor_top = 0;          // top degree of the factor ring (dim X)

    std::vector<CertFactor> factors;
    std::vector<std::string> expanded;  // labels of the expanded product, sorted
    unsigned zcl_lower = 0;
    unsigned dim_upper = 0;
    std::string conclusion;  // "exact" or "bounds-only"

    std::vector<std::string> notes;
    std::vector<std::string> warnings;
    std::optional<std::string> failure;  // first violated step, when any

    bool ok() const { return !failure.has_value(); }
};

/// Renders a certificate for a factor list living in `pr`. zcl_lower is the
/// total length when the expansion is nonzero, else 0; the conclusion is
/// "exact" exactly when the lower bound meets the dimensional upper bound.
Certificate make_certificate(const ProductRing& pr, const FactorList& list,
                             std::vector<std::string> notes = {},
                             std::vector<std::string> warnings = {});

/// Tuple index for a label of the form "(l1,l2,...,ls)".
Index parse_tuple_label(const ProductRing& pr, const std::string& label);

/// Class from a list of tuple labels.
ClassVector parse_tuple_class(const ProductRing& pr,
                              const std::vector<std::string>& labels);

/// Re-expands the recorded factors inside `pr` and verifies the recorded
/// expansion, the per-factor zero-divisor flags, and the bound arithmetic.
bool certificate_self_check(const Certificate& cert, const ProductRing& pr);

/// Self-check for family certificates; rebuilds the ring from the recorded
/// parameters.
bool certificate_self_check(const Certificate& cert);

/// Canonical machine-readable form: one JSON object, sorted keys, sorted
/// term labels. Byte-identical across runs for equal inputs.
std::string certificate_record(const Certificate& cert);

/// Human-readable multi-line rendering.
std::string certificate_text(const Certificate& cert);

}  // namespace zcl
