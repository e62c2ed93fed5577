// Copyright 2026 The TMDP Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef TMDP_ENV_GRIDWORLD_HPP_
#define TMDP_ENV_GRIDWORLD_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace tmdp::env {

enum class Cell { kWall, kFloor, kStart, kTarget1, kTarget2 };
enum class Move { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };
inline constexpr int kNumMoves = 4;

// Static room description. Cells are indexed row * width + col.
class GridLayout {
 public:
  // '#' wall, '.' floor, 'S' start, '1' and '2' targets. Rows must share a
  // width; trailing '\r' is ignored. Throws ConfigError on malformed maps.
  static GridLayout parse(std::string_view ascii);
  static GridLayout load(const std::string& path);
  // Walled room with a corridor from S that forks to two targets at equal
  // path length.
  static GridLayout default_layout();

  int width() const { return width_; }
  int height() const { return height_; }
  int n_cells() const { return width_ * height_; }
  Cell cell(int index) const;
  int start() const { return start_; }
  // target is 0 or 1.
  int target_cell(int target) const;
  // -1 when the cell is not a target.
  int target_at(int index) const;
  // Shortest number of moves from start to the given target.
  int shortest_path(int target) const;
  std::string to_ascii() const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Cell> cells_;
  int start_ = -1;
  int targets_[2] = {-1, -1};
  int distances_[2] = {-1, -1};
};

struct GridParams {
  double step_penalty = -1.0;
  double target_magnitude = 50.0;
  int max_steps = 50;
};

struct GridStep {
  int next_state;
  double r_dm;
  double r_adversary;
  bool terminal;
  // Target the DM entered, -1 if none.
  int reached_target;
};

class GridWorld {
 public:
  explicit GridWorld(GridLayout layout, GridParams params = {});

  const GridLayout& layout() const { return layout_; }
  const GridParams& params() const { return params_; }
  int n_states() const { return layout_.n_cells(); }

  int reset();
  int position() const { return position_; }
  int steps() const { return steps_; }
  bool terminal() const { return terminal_; }

  // Moves the DM. The adversary's reward is the zero-sum mirror of the DM's.
  GridStep step(Move move, int adversary_target);

 private:
  GridLayout layout_;
  GridParams params_;
  int position_ = 0;
  int steps_ = 0;
  bool terminal_ = false;
};

GridStep grid_step(GridWorld& world, Move move, int adversary_target);

}  // namespace tmdp::env

#endif  // TMDP_ENV_GRIDWORLD_HPP_
