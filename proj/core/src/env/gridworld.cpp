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
#include "tmdp/env/gridworld.hpp"

#include <deque>
#include <fstream>
#include <sstream>

#include "tmdp/errors.hpp"

namespace tmdp::env {

namespace {

constexpr int kRowStep[kNumMoves] = {-1, 1, 0, 0};
constexpr int kColStep[kNumMoves] = {0, 0, -1, 1};

constexpr const char* kDefaultMap =
    "#########\n"
    "#1#####2#\n"
    "#.......#\n"
    "#.......#\n"
    "####.####\n"
    "####S####\n"
    "#########\n";

}  // namespace

GridLayout GridLayout::parse(std::string_view ascii) {
  GridLayout layout;
  std::vector<std::string> rows;
  std::istringstream in{std::string(ascii)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw ConfigError("grid map is empty");
  layout.height_ = static_cast<int>(rows.size());
  layout.width_ = static_cast<int>(rows.front().size());
  for (int r = 0; r < layout.height_; ++r) {
    if (static_cast<int>(rows[r].size()) != layout.width_) {
      throw ConfigError("grid map row " + std::to_string(r) +
                        " has a different width");
    }
    for (int c = 0; c < layout.width_; ++c) {
      const int index = r * layout.width_ + c;
      Cell cell;
      switch (rows[r][c]) {
        case '#': cell = Cell::kWall; break;
        case '.': cell = Cell::kFloor; break;
        case 'S': cell = Cell::kStart; break;
        case '1': cell = Cell::kTarget1; break;
        case '2': cell = Cell::kTarget2; break;
        default:
          throw ConfigError(std::string("grid map has unknown cell '") +
                            rows[r][c] + "'");
      }
      auto claim = [&](int& slot, const char* name) {
        if (slot >= 0) {
          throw ConfigError(std::string("grid map has more than one ") + name);
        }
        slot = index;
      };
      if (cell == Cell::kStart) claim(layout.start_, "start");
      if (cell == Cell::kTarget1) claim(layout.targets_[0], "target 1");
      if (cell == Cell::kTarget2) claim(layout.targets_[1], "target 2");
      layout.cells_.push_back(cell);
    }
  }
  if (layout.start_ < 0) throw ConfigError("grid map has no start");
  if (layout.targets_[0] < 0) throw ConfigError("grid map has no target 1");
  if (layout.targets_[1] < 0) throw ConfigError("grid map has no target 2");

  // BFS from the start; targets absorb, so paths may not pass through them.
  std::vector<int> dist(layout.cells_.size(), -1);
  std::deque<int> frontier{layout.start_};
  dist[layout.start_] = 0;
  while (!frontier.empty()) {
    const int at = frontier.front();
    frontier.pop_front();
    if (layout.target_at(at) >= 0) continue;
    const int r = at / layout.width_;
    const int c = at % layout.width_;
    for (int m = 0; m < kNumMoves; ++m) {
      const int nr = r + kRowStep[m];
      const int nc = c + kColStep[m];
      if (nr < 0 || nr >= layout.height_ || nc < 0 || nc >= layout.width_) {
        continue;
      }
      const int next = nr * layout.width_ + nc;
      if (layout.cells_[next] == Cell::kWall || dist[next] >= 0) continue;
      dist[next] = dist[at] + 1;
      frontier.push_back(next);
    }
  }
  for (int t = 0; t < 2; ++t) {
    layout.distances_[t] = dist[layout.targets_[t]];
    if (layout.distances_[t] < 0) {
      throw ConfigError("grid map target " + std::to_string(t + 1) +
                        " is unreachable from the start");
    }
  }
  return layout;
}

GridLayout GridLayout::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open grid map '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

GridLayout GridLayout::default_layout() { return parse(kDefaultMap); }

Cell GridLayout::cell(int index) const {
  if (index < 0 || index >= n_cells()) {
    throw IndexError("grid cell " + std::to_string(index));
  }
  return cells_[index];
}

int GridLayout::target_cell(int target) const {
  if (target < 0 || target > 1) {
    throw IndexError("target " + std::to_string(target));
  }
  return targets_[target];
}

int GridLayout::target_at(int index) const {
  if (index == targets_[0]) return 0;
  if (index == targets_[1]) return 1;
  return -1;
}

int GridLayout::shortest_path(int target) const {
  if (target < 0 || target > 1) {
    throw IndexError("target " + std::to_string(target));
  }
  return distances_[target];
}

std::string GridLayout::to_ascii() const {
  std::string out;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      switch (cells_[r * width_ + c]) {
        case Cell::kWall: out += '#'; break;
        case Cell::kFloor: out += '.'; break;
        case Cell::kStart: out += 'S'; break;
        case Cell::kTarget1: out += '1'; break;
        case Cell::kTarget2: out += '2'; break;
      }
    }
    out += '\n';
  }
  return out;
}

GridWorld::GridWorld(GridLayout layout, GridParams params)
    : layout_(std::move(layout)), params_(params) {
  if (params_.max_steps <= 0) {
    throw ContractViolation("max_steps must be positive");
  }
  reset();
}

int GridWorld::reset() {
  position_ = layout_.start();
  steps_ = 0;
  terminal_ = false;
  return position_;
}

GridStep GridWorld::step(Move move, int adversary_target) {
  if (terminal_) throw ContractViolation("step after terminal state");
  if (adversary_target < 0 || adversary_target > 1) {
    throw IndexError("adversary target " + std::to_string(adversary_target));
  }
  const int m = static_cast<int>(move);
  if (m < 0 || m >= kNumMoves) throw IndexError("move " + std::to_string(m));

  const int r = position_ / layout_.width() + kRowStep[m];
  const int c = position_ % layout_.width() + kColStep[m];
  if (r >= 0 && r < layout_.height() && c >= 0 && c < layout_.width()) {
    const int next = r * layout_.width() + c;
    if (layout_.cell(next) != Cell::kWall) position_ = next;
  }
  ++steps_;

  double r_dm = params_.step_penalty;
  const int reached = layout_.target_at(position_);
  if (reached >= 0) {
    r_dm += reached == adversary_target ? params_.target_magnitude
                                        : -params_.target_magnitude;
  }
  terminal_ = reached >= 0 || steps_ >= params_.max_steps;
  return {position_, r_dm, -r_dm, terminal_, reached};
}

GridStep grid_step(GridWorld& world, Move move, int adversary_target) {
  return world.step(move, adversary_target);
}

}  // namespace tmdp::env
