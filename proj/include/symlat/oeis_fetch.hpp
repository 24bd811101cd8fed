#pragma once

// Optional network path for `oeis --source fetch`. Kept out of oeis.hpp so
// the offline code never drags in the HTTP client.

#include <stdexcept>
#include <string>
#include <string_view>

#include <httplib.h>

#include "oeis.hpp"

namespace symlat {

/// Download the b-file for an OEIS id. Any failure throws; there is no
/// fallback to fixtures.
inline BFile fetch_bfile(std::string_view oeis_id) {
    const std::string path = "/" + std::string(oeis_id) + "/" + fixture_filename(oeis_id);
    httplib::Client client("http://oeis.org");
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res)
        throw std::runtime_error("oeis fetch: no response from oeis.org for " + std::string(oeis_id));
    if (res->status != 200)
        throw std::runtime_error("oeis fetch: HTTP " + std::to_string(res->status) + " for " + path);
    return parse_bfile_text(res->body);
}

}  // namespace symlat
