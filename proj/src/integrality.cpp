#include "cayspec/integrality.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayspec/char_poly.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/parallel.hpp"
#include "cayspec/seminormal.hpp"

namespace cayspec {

std::string to_string(DecisionPath p) {
    switch (p) {
    case DecisionPath::LaplacianPrefilterFail: return "laplacian-prefilter-fail";
    case DecisionPath::GcmSufficient: return "gcm-sufficient";
    case DecisionPath::FullRepresentation: return "full-representation";
    case DecisionPath::BruteForceOracle: return "brute-force-oracle";
    }
    return "?";
}

namespace {

void validate_t_set(int n, const std::vector<Transposition>& t_set) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    for (const auto& t : t_set)
        if (t.j > n)
            throw std::invalid_argument("transposition (" + std::to_string(t.i) + "," +
                                        std::to_string(t.j) + ") exceeds n=" + std::to_string(n));
    auto sorted = t_set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate transposition in T");
}

} // namespace

SpectrumReport cayley_spectrum(int n, const std::vector<Transposition>& t_set, int jobs) {
    if (n < 2) throw std::invalid_argument("cayley_spectrum needs n >= 2");
    validate_t_set(n, t_set);
    if (t_set.empty()) throw std::invalid_argument("cayley_spectrum needs a nonempty T");
    if (n > kMaxPipelineN)
        throw CapacityError("full representation computation capped at n = " +
                            std::to_string(kMaxPipelineN));

    SpectrumReport rep;
    rep.n = n;
    rep.t_set = t_set;

    auto alphas = partitions_of(n);
    std::int64_t bound = static_cast<std::int64_t>(t_set.size()); // Cay(S_n,T) is |T|-regular
    std::vector<PartitionBlock> blocks;
    blocks.reserve(alphas.size());
    for (const auto& a : alphas)
        blocks.push_back(PartitionBlock{a, a.dimension(), IntPolynomial::one(), {}, IntPolynomial::one()});

    parallel_for(alphas.size(), jobs, [&](std::size_t idx) {
        SeminormalRep rho(alphas[idx]);
        auto split_input = char_poly(rho.sum_over(t_set));
        auto split = integer_root_split(split_input, bound);
        blocks[idx].charpoly = split_input;
        blocks[idx].integer_roots = split.roots;
        blocks[idx].remainder = split.remainder;
    });

    rep.integral = true;
    for (const auto& b : blocks) rep.integral = rep.integral && b.integral();

    if (rep.integral) {
        for (const auto& b : blocks)
            for (auto [root, mult] : b.integer_roots)
                rep.spectrum[root] += static_cast<std::int64_t>(mult) * b.dim;
    } else {
        // witness: the smallest failing block (ties broken by partition order)
        const PartitionBlock* best = nullptr;
        for (const auto& b : blocks)
            if (!b.integral() && (!best || b.dim < best->dim)) best = &b;
        rep.witness = SpectrumWitness{best->alpha, best->remainder};
    }
    rep.per_partition = std::move(blocks);
    return rep;
}

Verdict is_integral(int n, const std::vector<Transposition>& t_set, const PipelineOptions& opts) {
    validate_t_set(n, t_set);
    Verdict v;
    v.n = n;

    TGraph g = TGraph::from_transpositions(n, t_set);
    auto core = strip_isolated(g);
    v.isolated = core.isolated;
    v.reduced_n = core.graph.n();

    if (t_set.empty()) {
        // edgeless G_T: Cay(S_n, {}) has no edges and the zero spectrum
        v.integral = true;
        v.path = DecisionPath::GcmSufficient;
        v.detail = "empty transposition set (edgeless graph, trivially integral)";
        v.gcm = gcm_decompose(g);
        return v;
    }

    const TGraph& h = core.graph;
    auto reduced_t = h.transpositions();

    // stage 1: Laplacian prefilter (necessary condition)
    v.laplacian = is_laplacian_integral(h);
    if (!v.laplacian->integral) {
        v.integral = false;
        v.path = DecisionPath::LaplacianPrefilterFail;
        v.detail = "Laplacian spectrum not integral; rootless factor " +
                   v.laplacian->remainder.to_string();
        if (opts.force_full) {
            v.spectrum = cayley_spectrum(v.reduced_n, reduced_t, opts.jobs);
            if (v.spectrum->integral)
                throw InternalError("necessary condition contradicted: Laplacian non-integral "
                                    "but block spectra split over Z");
        }
        return v;
    }

    // stage 2: generalized complete multipartite (sufficient condition)
    v.gcm = gcm_decompose(h);
    if (v.gcm) {
        v.integral = true;
        v.path = DecisionPath::GcmSufficient;
        v.detail = "generalized complete multipartite of type " +
                   std::to_string(v.gcm->type_number);
        if (opts.force_full) {
            v.spectrum = cayley_spectrum(v.reduced_n, reduced_t, opts.jobs);
            if (!v.spectrum->integral)
                throw InternalError("sufficient condition contradicted: decomposition found "
                                    "but a block has an integer-rootless factor");
        }
        return v;
    }

    // stage 3: full representation computation
    v.spectrum = cayley_spectrum(v.reduced_n, reduced_t, opts.jobs);
    v.integral = v.spectrum->integral;
    v.path = DecisionPath::FullRepresentation;
    if (v.integral) {
        v.detail = "all " + std::to_string(v.spectrum->per_partition.size()) +
                   " representation blocks split over Z";
    } else {
        v.detail = "block at alpha=" + v.spectrum->witness->alpha.to_string() +
                   " has integer-rootless factor " + v.spectrum->witness->factor.to_string();
    }
    return v;
}

std::map<std::int64_t, std::int64_t> complete_graph_spectrum(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    std::map<std::int64_t, std::int64_t> spec;
    for (const auto& a : partitions_of(n)) {
        std::int64_t f = a.dimension();
        spec[q_alpha(a)] += f * f;
    }
    return spec;
}

} // namespace cayspec
