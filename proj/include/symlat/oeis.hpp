#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sequences.hpp"

namespace symlat {

/// One OEIS b-file: "index value" lines with consecutive indices,
/// optionally preceded or interleaved with '#' comment lines.
struct BFile {
    struct Entry {
        long index = 0;
        Int value;
    };
    std::vector<Entry> entries;

    long first_index() const { return entries.front().index; }
    long last_index() const { return entries.back().index; }
    const Int& at(long index) const { return entries[static_cast<std::size_t>(index - first_index())].value; }
};

inline BFile parse_bfile(std::istream& in) {
    BFile out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t')) sv.remove_suffix(1);
        if (sv.empty() || sv.front() == '#') continue;
        std::istringstream fields{std::string(sv)};
        BFile::Entry e;
        if (!(fields >> e.index >> e.value))
            throw std::runtime_error("b-file: malformed line " + std::to_string(lineno) + ": '" + line + "'");
        std::string trailing;
        if (fields >> trailing)
            throw std::runtime_error("b-file: trailing junk on line " + std::to_string(lineno));
        if (!out.entries.empty() && e.index != out.entries.back().index + 1)
            throw std::runtime_error("b-file: index " + std::to_string(e.index) + " on line " +
                                     std::to_string(lineno) + " is not consecutive");
        out.entries.push_back(std::move(e));
    }
    if (out.entries.empty()) throw std::runtime_error("b-file: no entries");
    return out;
}

inline BFile parse_bfile_text(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

inline BFile load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("b-file: cannot open '" + path + "'");
    return parse_bfile(in);
}

inline std::string format_bfile(const SequenceRecord& rec) {
    std::string out;
    for (std::size_t i = 0; i < rec.terms.size(); ++i) {
        out += std::to_string(rec.offset + static_cast<long>(i));
        out += ' ';
        out += rec.terms[i].str();
        out += '\n';
    }
    return out;
}

/// "A001405" -> "b001405.txt"
inline std::string fixture_filename(std::string_view oeis_id) {
    if (oeis_id.size() < 2 || oeis_id.front() != 'A')
        throw std::invalid_argument("fixture_filename: bad OEIS id '" + std::string(oeis_id) + "'");
    return "b" + std::string(oeis_id.substr(1)) + ".txt";
}

struct OeisMismatch {
    long index = 0;
    Int generated;
    Int fixture;
};

struct OeisCompareReport {
    std::string name;
    std::string oeis_id;
    long fixture_first = 0, fixture_last = 0;
    long overlap_first = 0, overlap_last = -1;  // empty when last < first
    std::optional<OeisMismatch> first_mismatch;

    long overlap_length() const { return overlap_last < overlap_first ? 0 : overlap_last - overlap_first + 1; }
    bool agreed() const { return overlap_length() > 0 && !first_mismatch.has_value(); }
};

/// Compare generated terms against a b-file over the overlapping index
/// range, honoring the record's offset. An empty overlap never counts as
/// agreement.
inline OeisCompareReport compare_with_bfile(const SequenceRecord& rec, const BFile& bfile,
                                            std::string_view against_id) {
    OeisCompareReport rep;
    rep.name = rec.name;
    rep.oeis_id = std::string(against_id);
    rep.fixture_first = bfile.first_index();
    rep.fixture_last = bfile.last_index();
    const long rec_first = rec.offset;
    const long rec_last = rec.offset + static_cast<long>(rec.terms.size()) - 1;
    rep.overlap_first = std::max(rec_first, rep.fixture_first);
    rep.overlap_last = std::min(rec_last, rep.fixture_last);
    for (long idx = rep.overlap_first; idx <= rep.overlap_last; ++idx) {
        const Int& gen = rec.terms[static_cast<std::size_t>(idx - rec.offset)];
        const Int& fix = bfile.at(idx);
        if (gen != fix) {
            rep.first_mismatch = OeisMismatch{idx, gen, fix};
            break;
        }
    }
    return rep;
}

}  // namespace symlat
