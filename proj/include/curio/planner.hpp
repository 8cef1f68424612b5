#pragma once

#include <vector>

#include "curio/gridworld.hpp"
#include "curio/rng.hpp"

namespace curio {

/// Shape of the temporary reward model built when curiosity is induced.
///   Aversive: 0 when leaving the target, -1 everywhere else.
///   Positive: 1 when leaving the target, 0 everywhere else.
///   Ablated:  identically 0 (no field is planned; callers keep zeros).
enum class CuriosityRewardMode { Aversive, Positive, Ablated };

std::string_view reward_mode_name(CuriosityRewardMode mode);

/// One real number per grid cell. The all-zeros field is the canonical
/// "not curious" field.
class ValueField {
 public:
  ValueField() = default;
  ValueField(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}
  explicit ValueField(const DomainSpec& spec) : ValueField(spec.rows, spec.cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool matches(const DomainSpec& spec) const {
    return rows_ == spec.rows && cols_ == spec.cols;
  }

  double& at(int row, int col) { return data_[index(row, col)]; }
  double at(int row, int col) const { return data_[index(row, col)]; }
  double& at(GridPosition p) { return at(p.row, p.col); }
  double at(GridPosition p) const { return at(p.row, p.col); }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const ValueField&) const = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(col);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline constexpr double kDefaultViTolerance = 1e-9;

/// Solves V(s) = max_a [ r(s) + gamma * V(transition(s,a)) ] for the given
/// target and reward mode by Jacobi value iteration: full row-major sweeps
/// against the previous iterate, repeated until the maximum absolute
/// per-cell change falls below `tolerance`. Sweeps are cell-parallel
/// (OpenMP); the result is bitwise identical to value_iteration_serial
/// because every cell update reads only the previous iterate.
///
/// Under Aversive the fixed point at shortest distance d from the target
/// is -(1 - gamma^d)/(1 - gamma); under Positive it is gamma^d/(1 - gamma).
///
/// Callers with mode == Ablated skip planning and keep the zero field.
/// Throws std::runtime_error if the sweep cap (10*rows*cols) is hit.
ValueField value_iteration(const DomainSpec& spec, GridPosition target,
                           CuriosityRewardMode mode, double gamma_curious,
                           double tolerance = kDefaultViTolerance);

/// Plain serial reference for the kernel above; kept for tests and the
/// benchmark.
ValueField value_iteration_serial(const DomainSpec& spec, GridPosition target,
                                  CuriosityRewardMode mode, double gamma_curious,
                                  double tolerance = kDefaultViTolerance);

/// One-step greedy lookahead: an action maximizing field(transition(pos,a))
/// over all six actions, ties broken by an equiprobable draw over the
/// argmax set. The draw consumes randomness only when two or more actions
/// tie.
MoveAction greedy_curious_action(const DomainSpec& spec, const ValueField& field,
                                 GridPosition pos, Pcg32& rng);

}  // namespace curio
