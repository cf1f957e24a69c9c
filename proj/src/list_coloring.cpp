#include "mpkc/list_coloring.hpp"

namespace mpkc {

bool is_list_colorable(const Graph& g, const std::vector<std::uint32_t>& lists, int k,
                       const SolverConfig& cfg) {
    if (g.n() == 0) return true;
    if (clique_number(g) > k) return false;
    Instance inst = from_list_coloring(g, lists, k);
    Solution opt = solve(inst, cfg);
    return opt.value == Rational(g.n());
}

} // namespace mpkc
