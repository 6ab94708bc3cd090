#pragma once

// Brute-force answers for the source problems behind the reductions.

#include <optional>
#include <vector>

#include "ggasp/generators.hpp"

namespace sources {

// First k distinct-colored, pairwise non-adjacent edges of the path.
std::optional<std::vector<int>> rainbow_matching(const ggasp::EdgeColoredPath& src);
// A maximal matching with at most k edges.
std::optional<std::vector<int>> small_maximal_matching(const ggasp::BipartiteMMM& src);
std::optional<std::vector<bool>> satisfying_assignment(const ggasp::B2Formula& f);
std::optional<std::vector<int>> exact_cover(const ggasp::X3CInput& src);
std::optional<std::vector<int>> clique_of_size(int vertices, const std::vector<std::pair<int, int>>& edges, int k);
// chosen[i] in color class i; independent when `independent`, else a clique.
std::optional<std::vector<int>> colorful_set(const ggasp::MulticoloredInput& src, bool independent);

}  // namespace sources
