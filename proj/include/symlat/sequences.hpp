#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"
#include "paths.hpp"

namespace symlat {

/// A named integer sequence with its OEIS identity. `offset` is the OEIS
/// index of terms[0]; the m and Pell/MS sequences sit one index into
/// their OEIS entries, which is encoded here rather than by shifting
/// terms.
struct SequenceRecord {
    std::string name;
    std::string oeis_id;  // empty when not cross-referenced
    long offset = 0;
    std::vector<Int> terms;
};

inline SequenceRecord named_sequence(std::string_view name, std::size_t count) {
    if (count == 0) throw std::invalid_argument("named_sequence: count must be >= 1");
    SequenceRecord rec;
    rec.name = std::string(name);
    rec.terms.reserve(count);
    const int max_n = static_cast<int>(count) - 1;
    if (name == "d") {
        rec.oeis_id = "A001405";
        for (long n = 0; n <= max_n; ++n) rec.terms.push_back(binomial(n, n / 2));
    } else if (name == "m") {
        rec.oeis_id = "A005773";
        rec.offset = 1;  // m_n counts directed animals of size n+1
        rec.terms = count_table(FamilySpec::motzkin(), max_n);
    } else if (name == "s") {
        rec.oeis_id = "A026003";
        rec.terms = count_table(FamilySpec::schroeder(), max_n);
    } else if (name == "pell") {
        rec.oeis_id = "A000129";
        rec.offset = 1;  // terms are p_(n+1)
        rec.terms = {Int(1)};
        if (count > 1) rec.terms.push_back(2);
        for (std::size_t n = 2; n < count; ++n)
            rec.terms.push_back(2 * rec.terms[n - 1] + rec.terms[n - 2]);
    } else if (name == "ms") {
        rec.oeis_id = "A006190";
        rec.offset = 1;  // terms are h_(n+1)
        rec.terms = {Int(1)};
        if (count > 1) rec.terms.push_back(3);
        for (std::size_t n = 2; n < count; ++n)
            rec.terms.push_back(3 * rec.terms[n - 1] + rec.terms[n - 2]);
    } else if (name == "catalan") {
        rec.oeis_id = "A000108";
        for (long n = 0; n <= max_n; ++n) rec.terms.push_back(catalan(n));
    } else if (name == "central_binomial") {
        rec.oeis_id = "A000984";
        for (long n = 0; n <= max_n; ++n) rec.terms.push_back(binomial(2 * n, n));
    } else {
        throw std::invalid_argument("named_sequence: unknown name '" + std::string(name) + "'");
    }
    return rec;
}

}  // namespace symlat
