#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "smorder/s_order.hpp"

namespace smorder {

// One tree of a ranked catalog in serializable form.  Moments are decimal
// strings: values outgrow 53-bit-safe integers well before the enumeration
// cap, and JSON consumers routinely truncate past that.
struct CatalogRecord {
    std::string graph6;
    int n = 0;
    int p = 0;
    int q = 0;
    std::vector<std::string> moments;  // length n
    int rank = 0;
    std::string canonical_code;

    bool operator==(const CatalogRecord&) const = default;
};

std::vector<CatalogRecord> catalog_records(const RankedCatalog& catalog);

// JSON-lines, one record per line, sorted by rank then canonical code.
void write_catalog(const std::vector<CatalogRecord>& records, std::ostream& out);
void write_catalog(const std::vector<CatalogRecord>& records, const std::string& path);

// Inverse of write_catalog.  Malformed input raises std::runtime_error
// naming the offending line.
std::vector<CatalogRecord> read_catalog(std::istream& in);
std::vector<CatalogRecord> read_catalog(const std::string& path);

}  // namespace smorder
