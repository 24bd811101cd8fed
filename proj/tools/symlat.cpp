// symlat: exact sequences, Riordan triangles, identity checks, path
// statistics, and OEIS b-file comparison for symmetric lattice paths.

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symlat/cli.hpp"
#include "symlat/oeis_fetch.hpp"

namespace {

std::vector<symlat::CheckMode> parse_modes(const std::string& csv) {
    std::vector<symlat::CheckMode> modes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        modes.push_back(symlat::mode_from_name(item));
    }
    if (modes.empty()) throw std::invalid_argument("no check modes given");
    return modes;
}

std::string default_fixtures_dir() {
    if (const char* env = std::getenv("SYMLAT_FIXTURES_DIR")) return env;
    return "data/oeis";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric lattice paths, Riordan arrays, and their identities"};
    app.require_subcommand(1);

    std::string seq_name, seq_format = "plain";
    long seq_count = 8;
    auto* seq = app.add_subcommand("seq", "Emit a named sequence");
    seq->add_option("name", seq_name, "d, m, s, pell, ms, catalan, central_binomial")->required();
    seq->add_option("--count", seq_count, "number of terms (<= 1000)");
    seq->add_option("--format", seq_format, "plain, csv, json, bfile");

    std::string matrix_name, matrix_format = "plain";
    long matrix_rows = 8;
    auto* matrix = app.add_subcommand("matrix", "Emit rows of a named Riordan array");
    matrix->add_option("name", matrix_name, "P, P_inv, D, D_inv, D_star, E, E_star, E_inv")->required();
    matrix->add_option("--rows", matrix_rows, "row count (<= 64)");
    matrix->add_option("--format", matrix_format, "plain, csv, json");

    std::string check_id, check_modes = "closed_form,riordan,oracle", check_format = "text";
    long check_max_n = -1;
    auto* check = app.add_subcommand("check", "Verify identities by independent routes");
    check->add_option("id", check_id, "identity id or 'all'")->required();
    check->add_option("--max-n", check_max_n, "check n = 0..max-n (default: per-mode caps)");
    check->add_option("--modes", check_modes, "comma list of closed_form, riordan, oracle");
    check->add_option("--format", check_format, "text, json");

    std::string stats_kind, stats_format = "text";
    long stats_n = 0;
    auto* stats = app.add_subcommand("stats", "Path statistics for symmetric Dyck paths");
    stats->add_option("kind", stats_kind, "mid-height or axis-points")->required();
    stats->add_option("--n", stats_n, "half-length n")->required();
    stats->add_option("--format", stats_format, "text, json");

    std::string oeis_name, oeis_id, oeis_source = "fixture", oeis_format = "text";
    std::string fixtures_dir = default_fixtures_dir();
    auto* oeis = app.add_subcommand("oeis", "Compare a sequence against an OEIS b-file");
    oeis->add_option("name", oeis_name, "sequence name (as in seq)")->required();
    oeis->add_option("--id", oeis_id, "OEIS id (default: the sequence's own)");
    oeis->add_option("--source", oeis_source, "fixture or fetch");
    oeis->add_option("--fixtures-dir", fixtures_dir, "directory with vendored b-files");
    oeis->add_option("--format", oeis_format, "text, json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (seq->parsed())
            return symlat::cli::cmd_seq(seq_name, seq_count, seq_format, std::cout, std::cerr);
        if (matrix->parsed())
            return symlat::cli::cmd_matrix(matrix_name, matrix_rows, matrix_format, std::cout, std::cerr);
        if (check->parsed()) {
            const auto registry = symlat::IdentityRegistry::standard();
            return symlat::cli::cmd_check(registry, check_id, check_max_n, parse_modes(check_modes),
                                          check_format, std::cout, std::cerr);
        }
        if (stats->parsed())
            return symlat::cli::cmd_stats(stats_kind, stats_n, stats_format, std::cout, std::cerr);
        if (oeis->parsed()) {
            const bool network_allowed = [] {
                const char* env = std::getenv("SYMLAT_OEIS_FETCH");
                return env != nullptr && std::string(env) == "1";
            }();
            return symlat::cli::cmd_oeis_compare(
                oeis_name, oeis_id, oeis_source, fixtures_dir, network_allowed,
                [](std::string_view id) { return symlat::fetch_bfile(id); }, oeis_format, std::cout,
                std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "symlat: " << e.what() << "\n";
        return symlat::cli::exit_usage;
    }
    return symlat::cli::exit_usage;
}
