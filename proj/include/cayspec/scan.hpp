#ifndef CAYSPEC_SCAN_HPP
#define CAYSPEC_SCAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayspec/integrality.hpp"

namespace cayspec {

// One line of the JSONL scan cache, keyed by canonical form.
struct ScanRecord {
    int schema_version = 1;
    std::string key;
    int n = 0;
    int edges = 0;
    bool laplacian_integral = false;
    bool gcm_present = false;
    int gcm_type = 0; // 0 when absent
    bool cayley_integral = false;
    std::string path;   // decision path of the verdict
    std::string digest; // spectrum / witness-factor summary
    std::string timestamp;
    std::string version;

    bool disagreement() const { return cayley_integral != gcm_present; }
};

struct ScanOptions {
    int vertices = 4;
    bool force_full = false;       // run the representation stage on every class
    int jobs = 0;
    bool no_cache = false;
    std::string cache_path;        // empty = env CAYSPEC_CACHE or default file
};

struct ScanSummary {
    int vertices = 0;
    int classes = 0;
    int computed = 0; // fresh this run
    int cached = 0;   // reused from the cache file
    std::vector<ScanRecord> records;               // sorted by key
    std::vector<ScanRecord> disagreements;         // cayley_integral != gcm_present
};

std::string default_cache_path();

// Enumerates connected isomorphism classes on opts.vertices vertices, checks
// each one (reusing cached records), appends fresh records to the cache, and
// reports every cayley/gcm disagreement verbatim.
ScanSummary run_scan(const ScanOptions& opts);

ScanRecord scan_one(const TGraph& g, const std::string& key, bool force_full, int jobs);

} // namespace cayspec

#endif
