#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "identities.hpp"
#include "oeis.hpp"
#include "riordan.hpp"
#include "sequences.hpp"

namespace symlat::cli {

// Exit codes: 0 success / all checks pass, 1 a check or comparison
// failed, 2 usage or environment error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr long max_seq_count = 1000;
inline constexpr long max_matrix_rows = 64;
inline constexpr long max_stats_n = 2000;

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> term_strings(const std::vector<Int>& terms) {
    std::vector<std::string> out;
    out.reserve(terms.size());
    for (const Int& t : terms) out.push_back(t.str());
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace detail

inline int cmd_seq(std::string_view name, long count, std::string_view format, std::ostream& out,
                   std::ostream& err) {
    if (count < 1 || count > max_seq_count) {
        err << "seq: count must be between 1 and " << max_seq_count << "\n";
        return exit_usage;
    }
    SequenceRecord rec;
    try {
        rec = named_sequence(name, static_cast<std::size_t>(count));
    } catch (const std::exception& e) {
        err << "seq: " << e.what() << "\n";
        return exit_usage;
    }
    const auto terms = detail::term_strings(rec.terms);
    if (format == "plain") {
        out << detail::join(terms, " ") << "\n";
    } else if (format == "csv") {
        out << detail::join(terms, ",") << "\n";
    } else if (format == "bfile") {
        out << format_bfile(rec);
    } else if (format == "json") {
        Json j;
        j["name"] = rec.name;
        j["oeis"] = rec.oeis_id;
        j["offset"] = rec.offset;
        j["terms"] = terms;
        out << j.dump() << "\n";
    } else {
        err << "seq: unknown format '" << format << "'\n";
        return exit_usage;
    }
    return exit_ok;
}

inline int cmd_matrix(std::string_view name, long row_count, std::string_view format,
                      std::ostream& out, std::ostream& err) {
    if (row_count < 1 || row_count > max_matrix_rows) {
        err << "matrix: rows must be between 1 and " << max_matrix_rows << "\n";
        return exit_usage;
    }
    std::vector<std::vector<Int>> rows;
    try {
        const std::size_t order = static_cast<std::size_t>(row_count) < 2 ? 2 : static_cast<std::size_t>(row_count);
        rows = named_array(name, order).rows(static_cast<std::size_t>(row_count));
    } catch (const std::exception& e) {
        err << "matrix: " << e.what() << "\n";
        return exit_usage;
    }
    if (format == "plain" || format == "csv") {
        const std::string_view sep = format == "plain" ? " " : ",";
        for (const auto& row : rows) out << detail::join(detail::term_strings(row), sep) << "\n";
    } else if (format == "json") {
        Json j;
        j["name"] = std::string(name);
        Json jrows = Json::array();
        for (const auto& row : rows) jrows.push_back(detail::term_strings(row));
        j["rows"] = std::move(jrows);
        out << j.dump() << "\n";
    } else {
        err << "matrix: unknown format '" << format << "'\n";
        return exit_usage;
    }
    return exit_ok;
}

namespace detail {

inline std::string report_status(const IdentityReport& rep) {
    if (!rep.any_available()) return "unavailable";
    return rep.failed() ? "fail" : "pass";
}

inline Json report_json(const IdentityReport& rep) {
    Json j;
    j["id"] = rep.id;
    j["max_n"] = rep.max_checked();
    Json modes = Json::array();
    for (const auto& m : rep.modes)
        if (m.available) modes.push_back(std::string(mode_name(m.mode)));
    j["modes"] = std::move(modes);
    j["status"] = report_status(rep);
    if (auto f = rep.first_failure()) {
        Json jf;
        jf["n"] = f->n;
        jf["expected"] = f->expected;
        jf["got"] = f->got;
        jf["mode"] = std::string(mode_name(f->mode));
        j["first_failure"] = std::move(jf);
    }
    return j;
}

inline void report_text(const IdentityReport& rep, std::ostream& out) {
    out << rep.id << " " << report_status(rep);
    for (const auto& m : rep.modes) {
        out << " " << mode_name(m.mode) << "[";
        if (!m.available) {
            out << "unavailable";
        } else if (m.failure) {
            out << "n<=" << m.checked_up_to << " fail at n=" << m.failure->n << ": expected "
                << m.failure->expected << ", got " << m.failure->got;
        } else {
            out << "n<=" << m.checked_up_to << " ok";
        }
        out << "]";
    }
    out << "\n";
}

}  // namespace detail

inline int cmd_check(const IdentityRegistry& registry, std::string_view id, long max_n,
                     const std::vector<CheckMode>& modes, std::string_view format, std::ostream& out,
                     std::ostream& err) {
    if (format != "text" && format != "json") {
        err << "check: unknown format '" << format << "'\n";
        return exit_usage;
    }
    std::vector<IdentityReport> reports;
    try {
        if (id == "all")
            reports = registry.check_all(max_n, modes);
        else
            reports.push_back(registry.check(id, max_n, modes));
    } catch (const std::exception& e) {
        err << "check: " << e.what() << "\n";
        err << "usage: check <id|all> [--max-n N] [--modes closed_form,riordan,oracle]\n";
        return exit_usage;
    }
    bool any_failed = false;
    std::size_t passed = 0;
    for (const auto& rep : reports) {
        if (rep.failed()) any_failed = true;
        if (rep.passed()) ++passed;
    }
    if (format == "json") {
        if (id == "all") {
            Json arr = Json::array();
            for (const auto& rep : reports) arr.push_back(detail::report_json(rep));
            out << arr.dump() << "\n";
        } else {
            out << detail::report_json(reports.front()).dump() << "\n";
        }
    } else {
        for (const auto& rep : reports) detail::report_text(rep, out);
        if (id == "all")
            out << "identities: " << reports.size() << " checked, " << passed << " passed\n";
    }
    return any_failed ? exit_failed : exit_ok;
}

inline int cmd_stats(std::string_view kind, long n, std::string_view format, std::ostream& out,
                     std::ostream& err) {
    if (n < 0 || n > max_stats_n) {
        err << "stats: n must be between 0 and " << max_stats_n << "\n";
        return exit_usage;
    }
    if (format != "text" && format != "json") {
        err << "stats: unknown format '" << format << "'\n";
        return exit_usage;
    }
    Int total, paths;
    if (kind == "mid-height") {
        total = mid_height_total(static_cast<int>(n));
        paths = count(FamilySpec::dyck(), static_cast<int>(n));
    } else if (kind == "axis-points") {
        total = axis_points_total(static_cast<int>(n));
        paths = count(FamilySpec::dyck(), static_cast<int>(n));
    } else {
        err << "stats: unknown kind '" << kind << "' (use mid-height or axis-points)\n";
        return exit_usage;
    }
    const Rat average(total, paths);
    if (format == "json") {
        Json j;
        j["kind"] = std::string(kind);
        j["n"] = n;
        j["total"] = total.str();
        j["paths"] = paths.str();
        j["average"] = rational_string(average);
        j["average_decimal"] = decimal_string(average, 6);
        out << j.dump() << "\n";
    } else {
        out << "kind=" << kind << " n=" << n << " total=" << total << " paths=" << paths
            << " average=" << rational_string(average) << " average_decimal="
            << decimal_string(average, 6) << "\n";
    }
    return exit_ok;
}

using BFileFetcher = std::function<BFile(std::string_view)>;

inline int cmd_oeis_compare(std::string_view name, std::string_view oeis_id, std::string_view source,
                            const std::string& fixtures_dir, bool network_allowed,
                            const BFileFetcher& fetcher, std::string_view format, std::ostream& out,
                            std::ostream& err) {
    if (format != "text" && format != "json") {
        err << "oeis: unknown format '" << format << "'\n";
        return exit_usage;
    }
    BFile bfile;
    SequenceRecord rec;
    std::string id;
    try {
        // Probe with one term to resolve the canonical id and offset.
        rec = named_sequence(name, 1);
        id = oeis_id.empty() ? rec.oeis_id : std::string(oeis_id);
        if (id.empty()) {
            err << "oeis: sequence '" << name << "' has no OEIS id; pass --id\n";
            return exit_usage;
        }
        if (source == "fixture") {
            bfile = load_bfile(fixtures_dir + "/" + fixture_filename(id));
        } else if (source == "fetch") {
            if (!network_allowed) {
                err << "oeis: fetch mode requires SYMLAT_OEIS_FETCH=1 in the environment\n";
                return exit_usage;
            }
            bfile = fetcher(id);
        } else {
            err << "oeis: unknown source '" << source << "' (use fixture or fetch)\n";
            return exit_usage;
        }
        const long want = bfile.last_index() - rec.offset + 1;
        const long count = std::min(std::max(want, 1L), max_seq_count);
        rec = named_sequence(name, static_cast<std::size_t>(count));
    } catch (const std::exception& e) {
        err << "oeis: " << e.what() << "\n";
        return exit_usage;
    }
    const OeisCompareReport rep = compare_with_bfile(rec, bfile, id);
    if (format == "json") {
        Json j;
        j["name"] = rep.name;
        j["oeis"] = rep.oeis_id;
        j["fixture_range"] = {rep.fixture_first, rep.fixture_last};
        j["overlap"] = {rep.overlap_first, rep.overlap_last};
        j["status"] = rep.agreed() ? "agree" : "mismatch";
        j["agreement_length"] = rep.agreed() ? rep.overlap_length() : 0;
        if (rep.first_mismatch) {
            Json jm;
            jm["index"] = rep.first_mismatch->index;
            jm["generated"] = rep.first_mismatch->generated.str();
            jm["fixture"] = rep.first_mismatch->fixture.str();
            j["first_mismatch"] = std::move(jm);
        }
        out << j.dump() << "\n";
    } else {
        out << "name=" << rep.name << " oeis=" << rep.oeis_id << " fixture_range=["
            << rep.fixture_first << "," << rep.fixture_last << "]"
            << " overlap=[" << rep.overlap_first << "," << rep.overlap_last << "]";
        if (rep.agreed()) {
            out << " result=agree length=" << rep.overlap_length() << "\n";
        } else if (rep.first_mismatch) {
            out << " result=mismatch first_mismatch_index=" << rep.first_mismatch->index
                << " generated=" << rep.first_mismatch->generated
                << " fixture=" << rep.first_mismatch->fixture << "\n";
        } else {
            out << " result=mismatch (no overlapping indices)\n";
        }
    }
    return rep.agreed() ? exit_ok : exit_failed;
}

}  // namespace symlat::cli
