#include "smorder/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "smorder/graph6.hpp"

namespace smorder {

std::vector<CatalogRecord> catalog_records(const RankedCatalog& catalog) {
    std::vector<CatalogRecord> out;
    out.reserve(catalog.entries.size());
    for (const auto& e : catalog.entries) {
        CatalogRecord r;
        r.graph6 = to_graph6(e.tree);
        r.n = e.tree.n;
        auto b = bipartition(e.tree);
        r.p = b.p;
        r.q = b.q;
        r.moments.reserve(e.moments.values.size());
        for (const auto& m : e.moments.values) r.moments.push_back(m.str());
        r.rank = e.rank;
        r.canonical_code = e.code.to_string();
        out.push_back(std::move(r));
    }
    return out;
}

void write_catalog(const std::vector<CatalogRecord>& records, std::ostream& out) {
    std::vector<const CatalogRecord*> order;
    order.reserve(records.size());
    for (const auto& r : records) order.push_back(&r);
    std::stable_sort(order.begin(), order.end(),
                     [](const CatalogRecord* a, const CatalogRecord* b) {
                         if (a->rank != b->rank) return a->rank < b->rank;
                         return a->canonical_code < b->canonical_code;
                     });
    for (const CatalogRecord* r : order) {
        nlohmann::json j;
        j["canonical_code"] = r->canonical_code;
        j["graph6"] = r->graph6;
        j["moments"] = r->moments;
        j["n"] = r->n;
        j["p"] = r->p;
        j["q"] = r->q;
        j["rank"] = r->rank;
        out << j.dump() << '\n';
    }
    if (!out) throw std::runtime_error("write_catalog: stream write failed");
}

void write_catalog(const std::vector<CatalogRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_catalog: cannot open " + path);
    write_catalog(records, out);
}

namespace {

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
    throw std::runtime_error("catalog line " + std::to_string(lineno) + ": " + what);
}

CatalogRecord parse_record(const std::string& line, std::size_t lineno) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        bad_line(lineno, e.what());
    }
    if (!j.is_object()) bad_line(lineno, "not a JSON object");
    CatalogRecord r;
    try {
        r.graph6 = j.at("graph6").get<std::string>();
        r.n = j.at("n").get<int>();
        r.p = j.at("p").get<int>();
        r.q = j.at("q").get<int>();
        r.moments = j.at("moments").get<std::vector<std::string>>();
        r.rank = j.at("rank").get<int>();
        r.canonical_code = j.at("canonical_code").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        bad_line(lineno, e.what());
    }
    if (static_cast<int>(r.moments.size()) != r.n)
        bad_line(lineno, "moments length " + std::to_string(r.moments.size()) +
                             " does not match n=" + std::to_string(r.n));
    try {
        Tree t = tree_from_graph6(r.graph6);
        if (t.n != r.n) bad_line(lineno, "graph6 order disagrees with n");
        auto b = bipartition(t);
        if (b.p != r.p || b.q != r.q) bad_line(lineno, "graph6 bipartition disagrees with (p,q)");
    } catch (const std::invalid_argument& e) {
        bad_line(lineno, std::string("graph6: ") + e.what());
    }
    return r;
}

}  // namespace

std::vector<CatalogRecord> read_catalog(std::istream& in) {
    std::vector<CatalogRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        out.push_back(parse_record(line, lineno));
    }
    return out;
}

std::vector<CatalogRecord> read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_catalog: cannot open " + path);
    return read_catalog(in);
}

}  // namespace smorder
