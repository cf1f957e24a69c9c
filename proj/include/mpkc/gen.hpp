#ifndef MPKC_GEN_HPP
#define MPKC_GEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mpkc/decompose.hpp"
#include "mpkc/graph.hpp"
#include "mpkc/instance.hpp"
#include "mpkc/patterns.hpp"

namespace mpkc {

// Deterministic splitmix64 stream; identical output on every platform, which
// the reproducibility guarantees depend on (std distributions are not).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound); // uniform in [0, bound)
    int range(int lo, int hi);                // uniform in [lo, hi]
    double unit();                            // uniform in [0, 1)
    bool chance(double p) { return unit() < p; }
};

// Independent per-item seed derived from a base seed and a counter.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter);

enum class Family { RandomClass, FatPath, FatCycle, CoBipartite, Named, Decomposable };
enum class ClassFilter { None, Chair, E };

struct GenSpec {
    Family family = Family::RandomClass;
    std::string named;       // bull | chair | e | path | cycle | complete | star
    int n = 8;               // vertex count (path/cycle/complete length, star leaves)
    double edge_prob = 0.3;  // random families: edge probability (intra-part for fat ones)
    ClassFilter filter = ClassFilter::None;
    std::uint64_t seed = 1;
    int parts = 0;           // fat families: number of parts (0 = derive from n)
    int max_part = 2;        // fat families: largest part size
    int reject_budget = 64;  // resamples before the delete-a-witness repair kicks in
};

// Deterministic in (spec, seed). Class-filtered output is certified by the
// pattern matcher; when resampling fails, witnesses are repaired away by
// deleting one of their vertices, which biases the distribution but keeps
// certification exact.
Graph gen_graph(const GenSpec& spec);

bool passes_filter(const ClassMembership& m, ClassFilter filter);

// Random connected graph, no class filter: G(n, p) plus uniformly chosen
// cross edges until connected.
Graph gen_connected_graph(int n, double p, std::uint64_t seed);

// Integer revenues uniform in [min_value, max_value], each entry then zeroed
// independently with the given probability.
Revenue gen_revenue(int n, int k, long long min_value, long long max_value, double zero_fraction,
                    std::uint64_t seed);

// Random fat path or fat cycle with its part structure, for exercising the
// subset DP directly.
struct FatSample {
    Graph graph;
    std::vector<VertexSet> parts;
    SpineKind kind = SpineKind::Path;
};
FatSample gen_fat_sample(int parts, int max_part, double intra_prob, SpineKind kind,
                         std::uint64_t seed);

} // namespace mpkc

#endif
