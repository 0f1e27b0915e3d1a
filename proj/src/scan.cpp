#include "cayspec/scan.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <stdexcept>

#include "cayspec/enumerate.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/parallel.hpp"
#include "cayspec/report_json.hpp"
#include "cayspec/version.hpp"

namespace cayspec {

namespace {

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string spectrum_digest(const std::map<std::int64_t, std::int64_t>& spec) {
    std::string s;
    for (auto it = spec.rbegin(); it != spec.rend(); ++it) {
        if (!s.empty()) s += ",";
        s += std::to_string(it->first) + "^" + std::to_string(it->second);
    }
    return s;
}

} // namespace

std::string default_cache_path() {
    if (const char* env = std::getenv("CAYSPEC_CACHE"); env && *env) return env;
    return "cayspec-scan-cache.jsonl";
}

ScanRecord scan_one(const TGraph& g, const std::string& key, bool force_full, int jobs) {
    ScanRecord rec;
    rec.key = key;
    rec.n = g.n();
    rec.edges = g.edge_count();
    rec.timestamp = iso_timestamp();
    rec.version = kVersion;

    auto lap = is_laplacian_integral(g);
    rec.laplacian_integral = lap.integral;
    auto gcm = gcm_decompose(g);
    rec.gcm_present = gcm.has_value();
    rec.gcm_type = gcm ? gcm->type_number : 0;

    bool need_full = force_full || (lap.integral && !gcm);
    if (need_full) {
        auto spec = cayley_spectrum(g.n(), g.transpositions(), jobs);
        rec.cayley_integral = spec.integral;
        rec.path = to_string(DecisionPath::FullRepresentation);
        rec.digest = spec.integral
                         ? "spectrum:" + spectrum_digest(spec.spectrum)
                         : "witness:alpha=" + spec.witness->alpha.to_string() +
                               ";factor=" + spec.witness->factor.to_string();
    } else if (!lap.integral) {
        rec.cayley_integral = false;
        rec.path = to_string(DecisionPath::LaplacianPrefilterFail);
        rec.digest = "laplacian-factor:" + lap.remainder.to_string();
    } else {
        rec.cayley_integral = true;
        rec.path = to_string(DecisionPath::GcmSufficient);
        rec.digest = "gcm:type=" + std::to_string(rec.gcm_type);
    }
    return rec;
}

ScanSummary run_scan(const ScanOptions& opts) {
    ScanSummary sum;
    sum.vertices = opts.vertices;

    auto classes = connected_graphs_up_to_iso(opts.vertices);
    sum.classes = static_cast<int>(classes.size());

    std::string cache_path = opts.cache_path.empty() ? default_cache_path() : opts.cache_path;
    std::map<std::string, ScanRecord> cache;
    if (!opts.no_cache) {
        std::ifstream in(cache_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                auto rec = scan_record_from_json(json::parse(line));
                cache[rec.key] = std::move(rec);
            } catch (const json::exception&) {
                // a corrupt line never poisons a scan; the record is recomputed
            }
        }
    }

    // a cached record only satisfies --force-full if its verdict came from
    // the representation stage
    auto usable = [&](const ScanRecord& rec) {
        return !opts.force_full || rec.path == to_string(DecisionPath::FullRepresentation);
    };

    std::vector<ScanRecord> records(classes.size());
    std::vector<char> fresh(classes.size(), 0);
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        auto it = cache.find(classes[i].key);
        if (it != cache.end() && it->second.n == opts.vertices && usable(it->second)) {
            records[i] = it->second;
        } else {
            todo.push_back(i);
            fresh[i] = 1;
        }
    }

    int outer_jobs = resolve_jobs(opts.jobs);
    parallel_for(todo.size(), outer_jobs, [&](std::size_t k) {
        std::size_t i = todo[k];
        records[i] = scan_one(classes[i].graph, classes[i].key, opts.force_full,
                              /*inner jobs=*/outer_jobs > 1 ? 1 : opts.jobs);
    });

    if (!opts.no_cache && !todo.empty()) {
        std::ofstream out(cache_path, std::ios::app);
        if (!out)
            throw std::runtime_error("cannot open scan cache for append: " + cache_path);
        for (std::size_t i = 0; i < records.size(); ++i)
            if (fresh[i]) out << to_json(records[i]).dump() << "\n";
    }

    sum.computed = static_cast<int>(todo.size());
    sum.cached = sum.classes - sum.computed;
    for (auto& rec : records) {
        if (rec.disagreement()) sum.disagreements.push_back(rec);
        sum.records.push_back(std::move(rec));
    }
    return sum;
}

} // namespace cayspec
