#include "curio/gridworld.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace curio {

std::string_view action_name(MoveAction a) {
  switch (a) {
    case MoveAction::Left: return "Left";
    case MoveAction::UpLeft: return "UpLeft";
    case MoveAction::Up: return "Up";
    case MoveAction::UpRight: return "UpRight";
    case MoveAction::Right: return "Right";
    case MoveAction::Stay: return "Stay";
  }
  return "?";
}

std::vector<GridPosition> DomainSpec::tracked_cells() const {
  std::vector<GridPosition> cells;
  cells.reserve(1 + static_cast<std::size_t>(target_count()));
  cells.push_back(inducing_pos);
  for (int c = target_col_min; c <= target_col_max; ++c) {
    cells.push_back({target_row, c});
  }
  return cells;
}

std::vector<std::string> scenario_names() {
  return {"primary", "wide", "wide_no_junction", "tall_low", "tall_mid"};
}

DomainSpec make_scenario(const std::string& name) {
  if (name == "primary") {
    return DomainSpec{11, 11, TopEdgeRule::junction_at({10, 5}), {5, 5}, 1, 1, 9};
  }
  if (name == "wide") {
    return DomainSpec{11, 101, TopEdgeRule::junction_at({10, 50}), {5, 50}, 1, 1, 99};
  }
  if (name == "wide_no_junction") {
    return DomainSpec{11, 101, TopEdgeRule::cylinder(), {5, 50}, 1, 1, 99};
  }
  if (name == "tall_low") {
    return DomainSpec{101, 11, TopEdgeRule::junction_at({100, 5}), {95, 5}, 1, 1, 9};
  }
  if (name == "tall_mid") {
    return DomainSpec{101, 11, TopEdgeRule::junction_at({100, 5}), {50, 5}, 1, 1, 9};
  }
  throw std::invalid_argument("unknown scenario: " + name);
}

GridPosition transition(const DomainSpec& spec, GridPosition pos, MoveAction action) {
  assert(spec.in_grid(pos));
  switch (action) {
    case MoveAction::Stay:
      return pos;
    case MoveAction::Left:
      return pos.col > 0 ? GridPosition{pos.row, pos.col - 1} : pos;
    case MoveAction::Right:
      return pos.col < spec.cols - 1 ? GridPosition{pos.row, pos.col + 1} : pos;
    case MoveAction::Up:
    case MoveAction::UpLeft:
    case MoveAction::UpRight:
      break;
  }
  int dc = action == MoveAction::UpLeft ? -1 : action == MoveAction::UpRight ? 1 : 0;
  if (pos.row == 0) {
    if (spec.top_edge.kind == TopEdgeRule::Kind::JunctionTeleport) {
      return spec.top_edge.junction;
    }
    int col = std::clamp(pos.col + dc, 0, spec.cols - 1);
    return {spec.rows - 1, col};
  }
  int col = pos.col + dc;
  if (col < 0 || col >= spec.cols) col = pos.col;  // diagonal clamps to straight up
  return {pos.row - 1, col};
}

int shortest_distance(const DomainSpec& spec, GridPosition from, GridPosition to) {
  assert(spec.in_grid(from) && spec.in_grid(to));
  std::vector<int> dist(static_cast<std::size_t>(spec.cell_count()), -1);
  std::deque<GridPosition> frontier;
  dist[static_cast<std::size_t>(spec.cell_index(from))] = 0;
  frontier.push_back(from);
  while (!frontier.empty()) {
    GridPosition p = frontier.front();
    frontier.pop_front();
    int d = dist[static_cast<std::size_t>(spec.cell_index(p))];
    if (p == to) return d;
    for (MoveAction a : kAllActions) {
      GridPosition q = transition(spec, p, a);
      int& dq = dist[static_cast<std::size_t>(spec.cell_index(q))];
      if (dq < 0) {
        dq = d + 1;
        frontier.push_back(q);
      }
    }
  }
  throw std::runtime_error("shortest_distance: target unreachable");
}

}  // namespace curio
