#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace curio {

/// Cell coordinates, 0-indexed, row 0 at the top, col 0 at the left.
struct GridPosition {
  int row = 0;
  int col = 0;
  bool operator==(const GridPosition&) const = default;
};

/// The six-way action alphabet. There are no downward moves.
/// Order matters: greedy argmax scans and uniform draws use this order.
enum class MoveAction { Left = 0, UpLeft, Up, UpRight, Right, Stay };

inline constexpr std::array<MoveAction, 6> kAllActions = {
    MoveAction::Left,  MoveAction::UpLeft, MoveAction::Up,
    MoveAction::UpRight, MoveAction::Right, MoveAction::Stay};

std::string_view action_name(MoveAction a);

/// What happens when a move exits the top edge: teleport to a fixed
/// bottom-row junction cell, or wrap cylinder-style to the bottom row in
/// the column the move attempted (clamped at side edges).
struct TopEdgeRule {
  enum class Kind { JunctionTeleport, Cylinder };
  Kind kind = Kind::JunctionTeleport;
  GridPosition junction{};  // meaningful only for JunctionTeleport

  static TopEdgeRule junction_at(GridPosition j) {
    return TopEdgeRule{Kind::JunctionTeleport, j};
  }
  static TopEdgeRule cylinder() { return TopEdgeRule{Kind::Cylinder, {}}; }
  bool operator==(const TopEdgeRule&) const = default;
};

/// Full geometry and mechanics of one gridworld variant. Immutable after
/// construction; safe to share across concurrently running trials.
struct DomainSpec {
  int rows = 0;
  int cols = 0;
  TopEdgeRule top_edge{};
  GridPosition inducing_pos{};
  int target_row = 0;
  int target_col_min = 0;
  int target_col_max = 0;

  bool in_grid(GridPosition p) const {
    return p.row >= 0 && p.row < rows && p.col >= 0 && p.col < cols;
  }
  int cell_count() const { return rows * cols; }
  int cell_index(GridPosition p) const { return p.row * cols + p.col; }
  int target_count() const { return target_col_max - target_col_min + 1; }

  /// The inducing cell plus every potential target cell, in column order.
  std::vector<GridPosition> tracked_cells() const;

  bool operator==(const DomainSpec&) const = default;
};

/// Names accepted by make_scenario; stable identifiers for the CLI.
std::vector<std::string> scenario_names();

/// Builds one of the named domain variants:
///   primary          11x11,  junction (10,5),  inducing (5,5),   targets (1,1)..(1,9)
///   wide             11x101, junction (10,50), inducing (5,50),  targets (1,1)..(1,99)
///   wide_no_junction as wide but with cylinder wrapping at the top edge
///   tall_low         101x11, junction (100,5), inducing (95,5),  targets (1,1)..(1,9)
///   tall_mid         as tall_low but inducing (50,5)
/// Throws std::invalid_argument naming any unknown scenario.
DomainSpec make_scenario(const std::string& name);

/// The deterministic transition function.
///
/// Stay keeps the position. A Left/Right move off a side boundary returns
/// the agent to the square where it attempted the action. A diagonal move
/// off a side boundary moves the agent straight up instead. Any upward
/// move from row 0 exits the top edge: under JunctionTeleport the agent
/// lands on the junction cell; under Cylinder it lands in the bottom row,
/// in the column the move attempted (same column at side edges).
GridPosition transition(const DomainSpec& spec, GridPosition pos, MoveAction action);

/// Minimum number of actions from `from` to `to` under `transition`,
/// by breadth-first search. This is the independent oracle used by the
/// planner tests. Throws std::runtime_error if `to` is unreachable
/// (cannot happen in the named scenarios).
int shortest_distance(const DomainSpec& spec, GridPosition from, GridPosition to);

}  // namespace curio
