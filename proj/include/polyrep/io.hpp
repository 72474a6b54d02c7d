#pragma once

#include <string>

#include "polyrep/ode.hpp"
#include "polyrep/poisson.hpp"

namespace polyrep {

/// Character table as CSV (rows = vertices, columns = facets, "*" where the
/// vertex is off the facet, fractions as "p/q").
std::string character_csv(const CellComplex& cells, const CharacterTable& ct);

/// Flowing edges as directed arcs labeled g<k>, neutral edges dashed.
std::string flow_graph_dot(const CellComplex& cells, const FlowGraph& fg);

std::string orbit_csv(const OrbitRecord& orbit);

std::string trajectory_csv(const Trajectory& tr);

std::string convergence_csv(const ConvergenceTable& table);

std::string polygon_csv(const LevelPolygon& poly);

/// 2-D projection of the polygon onto coordinates (i, j), 0-based.
std::string polygon_svg(const LevelPolygon& poly, int i, int j);

/// Machine-readable conservativity record.
std::string conservativity_json(const GameSpec& g, const ConservativityRecord& rec);

std::string path_poisson_json(int branch_id, const Branch& branch,
                              const PathPoissonReport& report);

std::string matrix_pretty(const MatQ& m);

/// The worked example game bundled with the tool.
const std::string& fish_game_text();

}  // namespace polyrep
