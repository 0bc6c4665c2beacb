#include "zcl/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zcl/certificate.hpp"
#include "zcl/search.hpp"
#include "zcl/structure_spec.hpp"
#include "zcl/verify.hpp"
#include "zcl/version.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zcl {

namespace {

std::string poincare_string(const std::vector<std::uint64_t>& coeff) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        if (coeff[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << coeff[k];
            continue;
        }
        if (coeff[k] != 1) out << coeff[k];
        out << "q";
        if (k >= 2) out << "^" << k;
    }
    if (first) out << "0";
    return out.str();
}

RingTable load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open presentation file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return ring_from_spec(parse_structure_spec(buffer.str()));
}

struct RangeSpec {
    unsigned lo = 0;
    unsigned hi = 0;
};

RangeSpec parse_range(const std::string& text) {
    RangeSpec r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = static_cast<unsigned>(std::stoul(text));
        } else {
            r.lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
            r.hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed range '" + text + "' (want N or A..B)");
    }
    if (r.lo > r.hi)
        throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

void print_ring(const RingTable& r, bool record, std::ostream& out) {
    if (record) {
        nlohmann::json j;
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& e : r.basis())
            basis.push_back({{"degree", e.degree}, {"label", e.label}});
        j["basis"] = basis;
        j["dim"] = r.dim();
        if (r.family())
            j["family"] = {{"g", r.family()->g}, {"m", r.family()->m}};
        j["poincare"] = r.poincare_polynomial();
        j["top_degree"] = r.top_degree();
        j["tool_version"] = tool_version;
        out << j.dump() << "\n";
        return;
    }
    if (r.family())
        out << "ring: connected sum of " << r.family()->g << " copies of RP^"
            << r.family()->m << "\n";
    out << "dim " << r.dim() << ", top degree " << r.top_degree() << "\n";
    out << "basis:\n";
    for (const auto& e : r.basis())
        out << "  " << std::setw(3) << e.index << "  " << std::setw(8)
            << std::left << e.label << std::right << "  degree " << e.degree
            << "\n";
    out << "Poincare polynomial: " << poincare_string(r.poincare_polynomial())
        << "\n";
}

void print_certificate(const Certificate& cert, bool record, std::ostream& out) {
    if (record)
        out << certificate_record(cert) << "\n";
    else
        out << certificate_text(cert);
}

PoolKind pool_from_string(const std::string& s) {
    return s == "kernel" ? PoolKind::FullKernel : PoolKind::Degree1;
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "greedy") return Strategy::Greedy;
    if (s == "dfs") return Strategy::Dfs;
    return Strategy::Exhaustive;
}

struct SweepRow {
    unsigned g, m, s;
    unsigned lower, upper;
    std::string conclusion;
    bool failed;
};

int run_sweep(const RangeSpec& gr, const RangeSpec& mr, const RangeSpec& sr,
              bool record, std::ostream& out) {
    if (gr.lo < 1) throw std::invalid_argument("sweep: g must be >= 1");
    if (mr.lo < 2) throw std::invalid_argument("sweep: m must be >= 2");
    if (sr.lo < 2) throw std::invalid_argument("sweep: s must be >= 2");

    std::vector<std::array<unsigned, 3>> cells;
    for (unsigned g = gr.lo; g <= gr.hi; ++g)
        for (unsigned m = mr.lo; m <= mr.hi; ++m)
            for (unsigned s = sr.lo; s <= sr.hi; ++s) cells.push_back({g, m, s});

    std::vector<SweepRow> rows(cells.size());
    // Cells are independent; buffered rows keep the output order canonical.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
        const auto [g, m, s] = cells[static_cast<std::size_t>(i)];
        SweepRow row{g, m, s, 0, 0, "error", true};
        try {
            const TcBounds b = tc_bounds(g, m, s);
            row = SweepRow{g,       m,       s, b.lower, b.upper,
                           b.certificate.conclusion, !b.certificate.ok()};
        } catch (const std::exception&) {
            // Exceptions must not escape the parallel region; the row says "error".
        }
        rows[static_cast<std::size_t>(i)] = std::move(row);
    }

    bool any_failed = false;
    if (record) {
        for (const auto& r : rows) {
            nlohmann::json j;
            j["g"] = r.g;
            j["m"] = r.m;
            j["s"] = r.s;
            j["zcl_lower"] = r.lower;
            j["dim_upper"] = r.upper;
            j["conclusion"] = r.conclusion;
            out << j.dump() << "\n";
            any_failed |= r.failed;
        }
    } else {
        out << "   g    m    s  zcl_lower  dim_upper  conclusion\n";
        for (const auto& r : rows) {
            out << std::setw(4) << r.g << " " << std::setw(4) << r.m << " "
                << std::setw(4) << r.s << " " << std::setw(10) << r.lower << " "
                << std::setw(10) << r.upper << "  " << r.conclusion << "\n";
            any_failed |= r.failed;
        }
    }
    return any_failed ? 1 : 0;
}

}  // namespace

FactorList parse_factor_expression(const ProductRing& pr, const std::string& text) {
    FactorList list;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& what) -> std::invalid_argument {
        return std::invalid_argument("factor expression: " + what + " at position " +
                                     std::to_string(pos));
    };

    skip_ws();
    if (pos == text.size()) throw fail("empty expression");
    for (;;) {
        skip_ws();
        if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
        ++pos;
        ClassVector sum = pr.zero_class();
        for (;;) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != ',') ++pos;
            if (pos >= text.size()) throw fail("expected ',' inside term");
            std::string label = text.substr(start, pos - start);
            while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
                label.pop_back();
            const auto idx = pr.factor().index_of_label(label);
            if (!idx) throw fail("unknown factor label '" + label + "'");
            ++pos;
            skip_ws();
            start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos) throw fail("expected slot number");
            const unsigned slot =
                static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
            if (slot < 1 || slot > pr.slots())
                throw fail("slot " + std::to_string(slot) + " out of range");
            sum = add(sum, pr.inject(slot, pr.factor().basis_class(*idx)));
            skip_ws();
            if (pos < text.size() && text[pos] == '+') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            throw fail("expected '+' or ')'");
        }
        unsigned multiplicity = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos) throw fail("expected exponent");
            multiplicity =
                static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
            if (multiplicity < 1) throw fail("exponent must be >= 1");
        }
        list.factors.push_back({std::move(sum), multiplicity});
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '*') throw fail("expected '*'");
        ++pos;
    }
    return list;
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             [[maybe_unused]] std::ostream& err) {
    CLI::App app{"zero-divisor cup-length certificates for connected sums of "
                 "real projective spaces"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string presentation;
    std::vector<unsigned> params;
    std::string pool_s = "std1", strategy_s = "exhaustive", factors_expr;
    unsigned max_len = 0;
    std::uint64_t budget = std::uint64_t{1} << 20;
    std::uint64_t node_budget = std::uint64_t{1} << 22;
    bool use_cache = false;
    std::vector<std::string> ranges;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "record"}));
    };

    CLI::App* ring = app.add_subcommand("ring", "print a ring presentation");
    ring->add_option("params", params, "g m");
    ring->add_option("--presentation", presentation, "ring presentation file");
    add_format(ring);

    CLI::App* verify = app.add_subcommand(
        "verify", "verify TC_s(g#RP^m) = s*m via the explicit witness product");
    verify->add_option("params", params, "g m s")->expected(3);
    add_format(verify);

    CLI::App* steps = app.add_subcommand(
        "steps", "replay the s=3 witness collapse step by step");
    steps->add_option("params", params, "g m")->expected(2);
    add_format(steps);

    CLI::App* zclcmd = app.add_subcommand(
        "zcl", "search for the longest nonzero product of zero divisors");
    zclcmd->add_option("params", params, "g m s, or s with --presentation");
    zclcmd->add_option("--presentation", presentation, "ring presentation file");
    zclcmd->add_option("--pool", pool_s, "candidate pool")
        ->check(CLI::IsMember({"std1", "kernel"}));
    zclcmd->add_option("--strategy", strategy_s, "search strategy")
        ->check(CLI::IsMember({"greedy", "dfs", "exhaustive"}));
    zclcmd->add_option("--max-len", max_len, "cap on the product length");
    zclcmd->add_option("--budget", budget, "kernel combinations per degree");
    zclcmd->add_option("--node-budget", node_budget, "dfs node visit cap");
    zclcmd->add_flag("--cache", use_cache, "retain cup matrices across degrees");
    add_format(zclcmd);

    CLI::App* bounds = app.add_subcommand(
        "bounds", "report zcl_s <= TC_s <= s*m for one parameter triple");
    bounds->add_option("params", params, "g m s")->expected(3);
    add_format(bounds);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "tabulate bounds over parameter ranges");
    sweep->add_option("ranges", ranges, "g-range m-range s-range (N or A..B)")
        ->expected(3);
    add_format(sweep);

    CLI::App* expand_cmd = app.add_subcommand(
        "expand", "expand a product of injected classes in (g#RP^m)^s");
    expand_cmd->add_option("params", params, "g m s, or s with --presentation");
    expand_cmd->add_option("--presentation", presentation, "ring presentation file");
    expand_cmd->add_option("--factors", factors_expr, "factor-list expression")
        ->required();
    add_format(expand_cmd);

    std::vector<const char*> argv;
    argv.push_back("zcl");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }

    const bool record = format == "record";

    if (ring->parsed()) {
        if (!presentation.empty()) {
            if (!params.empty())
                throw std::invalid_argument("ring: give g m or --presentation, not both");
            print_ring(load_presentation(presentation), record, out);
        } else {
            if (params.size() != 2)
                throw std::invalid_argument("ring: expected g m");
            print_ring(rp_sum_ring(params[0], params[1]), record, out);
        }
        return 0;
    }

    if (verify->parsed()) {
        const Certificate cert = verify_theorem(params[0], params[1], params[2]);
        print_certificate(cert, record, out);
        return cert.ok() && cert.conclusion == "exact" ? 0 : 1;
    }

    if (steps->parsed()) {
        const unsigned g = params[0], m = params[1];
        if (g < 2 || m < 2)
            throw std::invalid_argument("steps: requires g >= 2 and m >= 2");
        const ProductRing pr(rp_sum_ring(g, m), 3);
        const auto records = witness_reduction_steps(pr);
        bool all = true;
        if (record) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : records) {
                j.push_back({{"name", r.name}, {"detail", r.detail}, {"holds", r.holds}});
                all &= r.holds;
            }
            out << j.dump() << "\n";
        } else {
            for (const auto& r : records) {
                out << (r.holds ? "PASS" : "FAIL") << "  " << r.name << ": "
                    << r.detail << "\n";
                all &= r.holds;
            }
        }
        return all ? 0 : 1;
    }

    if (zclcmd->parsed()) {
        std::optional<RingTable> factor;
        unsigned s = 0;
        if (!presentation.empty()) {
            if (params.size() != 1)
                throw std::invalid_argument("zcl: expected s with --presentation");
            s = params[0];
            factor = load_presentation(presentation);
        } else {
            if (params.size() != 3)
                throw std::invalid_argument("zcl: expected g m s");
            s = params[2];
            factor = rp_sum_ring(params[0], params[1]);
        }
        const ProductRing pr(std::move(*factor), s);
        SearchOptions opts;
        opts.pool = pool_from_string(pool_s);
        opts.strategy = strategy_from_string(strategy_s);
        opts.max_len = max_len;
        opts.pool_budget = budget;
        opts.node_budget = node_budget;
        CupMapCache cache;
        if (use_cache) opts.cache = &cache;
        const SearchResult result = zcl_search(pr, opts);
        print_certificate(result.certificate, record, out);
        return 0;
    }

    if (bounds->parsed()) {
        const TcBounds b = tc_bounds(params[0], params[1], params[2]);
        if (record) {
            out << certificate_record(b.certificate) << "\n";
        } else {
            out << b.lower << " <= TC_" << params[2] << "(" << params[0]
                << "#RP^" << params[1] << ") <= " << b.upper << "\n";
            out << certificate_text(b.certificate);
        }
        return b.certificate.ok() ? 0 : 1;
    }

    if (sweep->parsed())
        return run_sweep(parse_range(ranges[0]), parse_range(ranges[1]),
                         parse_range(ranges[2]), record, out);

    if (expand_cmd->parsed()) {
        std::optional<RingTable> factor;
        unsigned s = 0;
        if (!presentation.empty()) {
            if (params.size() != 1)
                throw std::invalid_argument("expand: expected s with --presentation");
            s = params[0];
            factor = load_presentation(presentation);
        } else {
            if (params.size() != 3)
                throw std::invalid_argument("expand: expected g m s");
            s = params[2];
            factor = rp_sum_ring(params[0], params[1]);
        }
        const ProductRing pr(std::move(*factor), s);
        const FactorList list = parse_factor_expression(pr, factors_expr);
        const ClassVector result = expand(pr, list);
        std::vector<std::string> labels;
        for (Index t : result.terms()) labels.push_back(pr.label_of(t));
        std::sort(labels.begin(), labels.end());
        const bool is_top =
            pr.factor().has_unique_top() && result == pr.top_class();
        if (record) {
            nlohmann::json j;
            j["expanded"] = labels;
            j["is_zero"] = result.is_zero();
            j["is_top_class"] = is_top;
            j["total_length"] = list.total_length();
            const auto deg = pr.homogeneous_degree(result);
            if (deg)
                j["degree"] = *deg;
            else
                j["degree"] = nullptr;
            out << j.dump() << "\n";
        } else {
            out << "expanded: ";
            if (labels.empty()) out << "0";
            for (std::size_t i = 0; i < labels.size(); ++i)
                out << (i ? " + " : "") << labels[i];
            out << "\n";
            if (is_top) out << "the product is the top class\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace zcl
