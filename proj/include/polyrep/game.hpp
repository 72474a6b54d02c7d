#pragma once

#include <string>
#include <vector>

#include "polyrep/rational.hpp"

namespace polyrep {

/// A polymatrix game: group sizes and the exact payoff matrix.
/// Strategies are indexed 0..n-1 internally; all I/O is 1-based.
class GameSpec {
 public:
  GameSpec(std::vector<int> groups, MatQ payoff);

  int num_groups() const { return (int)groups_.size(); }
  int num_strategies() const { return (int)payoff_.rows(); }
  const std::vector<int>& groups() const { return groups_; }
  const MatQ& payoff() const { return payoff_; }

  int group_of(int strategy) const { return group_of_[strategy]; }
  /// First strategy of group a.
  int group_begin(int a) const { return group_begin_[a]; }
  int group_end(int a) const { return group_begin_[a] + groups_[a]; }

  /// Payoff block A^{a,b} as a copy.
  MatQ block(int a, int b) const;

 private:
  std::vector<int> groups_;
  MatQ payoff_;
  std::vector<int> group_of_;
  std::vector<int> group_begin_;
};

/// Parse a game document (JSON with keys "groups" and "payoff"). Entries may
/// be integers, "p/q" strings, or decimal strings (converted exactly).
GameSpec parse_game(const std::string& text);

/// Canonical serialization; fractions as "p/q" strings. Parsing the output
/// reproduces it byte for byte.
std::string serialize_game(const GameSpec& g);

/// Replicator vector field at x (exact).
VecQ vector_field(const GameSpec& g, const VecQ& x);

/// Same value computed by an independent term-by-term expansion; used as a
/// test oracle against vector_field.
VecQ vector_field_termwise(const GameSpec& g, const VecQ& x);

/// True iff a1 and a2 induce the same replicator field, i.e. every block of
/// a1 - a2 has equal rows.
bool equal_rows_equivalent(const MatQ& a1, const MatQ& a2, const GameSpec& g);

/// Restriction of the game to the strategies in subset (0-based, ascending).
/// Throws if some group is missed.
GameSpec restrict_to_face(const GameSpec& g, const std::vector<int>& subset);

/// Is x inside the state polytope (componentwise >= 0, unit group sums)?
bool in_polytope(const GameSpec& g, const VecQ& x);

/// Barycenter of the state polytope.
VecQ barycenter(const GameSpec& g);

}  // namespace polyrep
