#ifndef CAYSPEC_INTEGRALITY_HPP
#define CAYSPEC_INTEGRALITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayspec/gcm.hpp"
#include "cayspec/int_polynomial.hpp"
#include "cayspec/partition.hpp"
#include "cayspec/perm.hpp"
#include "cayspec/tgraph.hpp"

namespace cayspec {

inline constexpr int kMaxPipelineN = 8; // full representation budget
inline constexpr int kMaxOracleN = 7;   // n! adjacency budget

// One irreducible block: A_alpha = sum of rho_alpha(t) over T.
struct PartitionBlock {
    Partition alpha;
    std::int64_t dim = 0;
    IntPolynomial charpoly{IntPolynomial::one()};
    std::map<std::int64_t, int> integer_roots;
    IntPolynomial remainder{IntPolynomial::one()}; // constant 1 iff block fully splits

    bool integral() const { return remainder.degree() == 0; }

    bool operator==(const PartitionBlock& o) const = default;
};

struct SpectrumWitness {
    Partition alpha;
    IntPolynomial factor{IntPolynomial::one()};

    bool operator==(const SpectrumWitness& o) const = default;
};

// Full spectral report for Cay(S_n, T). Eigenvalue multiplicities carry the
// f_alpha weights of the block decomposition.
struct SpectrumReport {
    int n = 0;
    std::vector<Transposition> t_set;
    bool integral = false;
    std::map<std::int64_t, std::int64_t> spectrum; // populated only when integral
    std::optional<SpectrumWitness> witness;        // smallest failing block otherwise
    std::vector<PartitionBlock> per_partition;

    bool operator==(const SpectrumReport& o) const = default;
};

enum class DecisionPath {
    LaplacianPrefilterFail, // necessary condition violated => NonIntegral
    GcmSufficient,          // sufficient condition met => Integral
    FullRepresentation,
    BruteForceOracle,
};
std::string to_string(DecisionPath p);

struct Verdict {
    bool integral = false;
    DecisionPath path = DecisionPath::FullRepresentation;
    std::string detail;
    int n = 0;           // as given
    int reduced_n = 0;   // after stripping isolated vertices
    int isolated = 0;
    std::optional<LaplacianReport> laplacian;
    std::optional<GcmTree> gcm;
    std::optional<SpectrumReport> spectrum;
};

struct PipelineOptions {
    bool force_full = false; // run the representation stage even when 1/2 decide
    int jobs = 0;            // 0 = available parallelism
};

// For each alpha |- n: char poly of A_alpha, integer roots split with the
// regularity bound |T|. Integral iff every remainder is constant. jobs as above.
SpectrumReport cayley_spectrum(int n, const std::vector<Transposition>& t_set, int jobs = 0);

// Staged verdict: (1) Laplacian prefilter, (2) generalized-complete-multipartite
// sufficient check, (3) full representation computation. Isolated vertices of
// G_T are stripped first; the verdict is unchanged by them (the Cayley graph
// becomes n!/m! disjoint copies of the reduced instance).
Verdict is_integral(int n, const std::vector<Transposition>& t_set,
                    const PipelineOptions& opts = {});

// Spectrum {q_alpha with multiplicity f_alpha^2} of Cay(S_n, all transpositions).
std::map<std::int64_t, std::int64_t> complete_graph_spectrum(int n);

} // namespace cayspec

#endif
