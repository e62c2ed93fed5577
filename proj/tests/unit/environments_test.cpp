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
#include <gtest/gtest.h>

#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "tmdp/env/gridworld.hpp"
#include "tmdp/env/matrix_game.hpp"
#include "tmdp/errors.hpp"

namespace tmdp::env {
namespace {

TEST(Bimatrix, PresetTables) {
  const auto pd = prisoners_dilemma();
  EXPECT_EQ(pd.at(0, 0), std::make_pair(-1.0, -1.0));
  EXPECT_EQ(pd.at(0, 1), std::make_pair(-3.0, 0.0));
  EXPECT_EQ(pd.at(1, 0), std::make_pair(0.0, -3.0));
  EXPECT_EQ(pd.at(1, 1), std::make_pair(-2.0, -2.0));
  const auto sh = stag_hunt();
  EXPECT_EQ(sh.at(0, 0), std::make_pair(2.0, 2.0));
  EXPECT_EQ(sh.at(1, 1), std::make_pair(1.0, 1.0));
  const auto ch = chicken();
  EXPECT_EQ(ch.at(1, 0), std::make_pair(1.0, -2.0));
  EXPECT_EQ(ch.at(1, 1), std::make_pair(-4.0, -4.0));
  EXPECT_THROW(pd.at(2, 0), IndexError);
}

TEST(Bimatrix, PrisonersDilemmaHasDominantDefection) {
  const auto pd = prisoners_dilemma();
  for (int b = 0; b < 2; ++b) EXPECT_GT(pd.at(1, b).first, pd.at(0, b).first);
  for (int a = 0; a < 2; ++a) EXPECT_GT(pd.at(a, 1).second, pd.at(a, 0).second);
}

TEST(Bimatrix, RejectsRaggedRows) {
  EXPECT_THROW(PayoffBimatrix({{{0, 0}, {1, 1}}, {{0, 0}}}), ContractViolation);
}

TEST(FriendOrFoe, Scalings) {
  EXPECT_EQ(foe_stateless_step(0, 0), std::make_pair(50.0, -50.0));
  EXPECT_EQ(foe_stateless_step(1, 0), std::make_pair(-50.0, 50.0));
  EXPECT_EQ(foe_stateless_step(1, 0, 50.0, AdversaryScaling::kBinary),
            std::make_pair(-50.0, 1.0));
  EXPECT_EQ(foe_stateless_step(1, 1, 50.0, AdversaryScaling::kBinary),
            std::make_pair(50.0, 0.0));
  EXPECT_EQ(foe_stateless_step(0, 0, 50.0, AdversaryScaling::kSign),
            std::make_pair(50.0, -1.0));
  EXPECT_THROW(foe_stateless_step(2, 0), IndexError);
  const auto g = friend_or_foe(10.0);
  EXPECT_EQ(g.at(1, 1), std::make_pair(10.0, -10.0));
}

TEST(Memory1, EncodeDecodeBijection) {
  Memory1Encoding enc(2, 3);
  EXPECT_EQ(enc.n_states(), 7);
  std::vector<bool> seen(enc.n_states(), false);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) {
      const int s = enc.encode(a, b);
      EXPECT_NE(s, Memory1Encoding::kInitialState);
      EXPECT_FALSE(seen[s]);
      seen[s] = true;
      EXPECT_EQ(enc.decode(s).own_action, a);
      EXPECT_EQ(enc.decode(s).opp_action, b);
    }
  }
  EXPECT_THROW(enc.decode(0), ContractViolation);
  EXPECT_THROW(enc.decode(7), ContractViolation);
  EXPECT_EQ(memory1_transition(enc, 3, 1, 2), enc.encode(1, 2));
}

TEST(RepeatedGame, OpponentSeesMirroredState) {
  RepeatedGame g(prisoners_dilemma(), true);
  EXPECT_EQ(g.reset(), Memory1Encoding::kInitialState);
  EXPECT_EQ(g.opponent_state(), Memory1Encoding::kInitialState);
  const auto r = g.step(0, 1);
  EXPECT_EQ(r.r_dm, -3.0);
  EXPECT_EQ(r.r_opp, 0.0);
  Memory1Encoding enc(2, 2);
  EXPECT_EQ(r.dm_state, enc.encode(0, 1));
  EXPECT_EQ(r.opponent_state, enc.encode(1, 0));
  RepeatedGame plain(stag_hunt(), false);
  EXPECT_EQ(plain.n_states(), 1);
  EXPECT_EQ(plain.step(1, 0).dm_state, 0);
}

// Independent breadth-first search on the ASCII map.
int bfs(const std::vector<std::string>& rows, char goal) {
  const int h = static_cast<int>(rows.size());
  const int w = static_cast<int>(rows[0].size());
  std::vector<int> dist(h * w, -1);
  std::deque<int> q;
  for (int i = 0; i < h * w; ++i) {
    if (rows[i / w][i % w] == 'S') {
      dist[i] = 0;
      q.push_back(i);
    }
  }
  while (!q.empty()) {
    const int i = q.front();
    q.pop_front();
    if (rows[i / w][i % w] == goal) return dist[i];
    const char here = rows[i / w][i % w];
    if (here == '1' || here == '2') continue;
    const int dr[] = {-1, 1, 0, 0};
    const int dc[] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k) {
      const int r = i / w + dr[k];
      const int c = i % w + dc[k];
      if (r < 0 || r >= h || c < 0 || c >= w || rows[r][c] == '#') continue;
      const int j = r * w + c;
      if (dist[j] < 0) {
        dist[j] = dist[i] + 1;
        q.push_back(j);
      }
    }
  }
  return -1;
}

TEST(GridLayout, DefaultMapDistancesMatchBfs) {
  const auto layout = GridLayout::default_layout();
  std::vector<std::string> rows;
  std::string line;
  std::istringstream in(layout.to_ascii());
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(line);
  }
  EXPECT_EQ(layout.shortest_path(0), bfs(rows, '1'));
  EXPECT_EQ(layout.shortest_path(1), bfs(rows, '2'));
  EXPECT_EQ(layout.shortest_path(0), layout.shortest_path(1));
}

TEST(GridLayout, FileMatchesBuiltIn) {
  const auto file = GridLayout::load(TMDP_MAPS_DIR "/friend_or_foe.txt");
  EXPECT_EQ(file.to_ascii(), GridLayout::default_layout().to_ascii());
}

TEST(GridLayout, RejectsBadMaps) {
  EXPECT_THROW(GridLayout::parse("###\n#S#\n###\n"), ConfigError);
  EXPECT_THROW(GridLayout::parse("#####\n#1S2#\n##\n"), ConfigError);
  EXPECT_THROW(GridLayout::parse("#####\n#1SX2#\n#####\n"), ConfigError);
  EXPECT_THROW(GridLayout::parse("#####\n#1#S2\n#####\n"), ConfigError);
  EXPECT_NO_THROW(GridLayout::parse("#####\n#1S2#\n#####\n"));
}

TEST(GridWorld, RewardsAndTermination) {
  const auto layout = GridLayout::parse("#####\n#1S2#\n#####\n");
  GridWorld w(layout);
  w.reset();
  const auto bump = w.step(Move::kUp, 0);
  EXPECT_EQ(bump.next_state, layout.start());
  EXPECT_DOUBLE_EQ(bump.r_dm, -1.0);
  EXPECT_FALSE(bump.terminal);
  const auto hit = w.step(Move::kLeft, 0);
  EXPECT_DOUBLE_EQ(hit.r_dm, 49.0);
  EXPECT_DOUBLE_EQ(hit.r_adversary, -49.0);
  EXPECT_TRUE(hit.terminal);
  EXPECT_EQ(hit.reached_target, 0);
  EXPECT_THROW(w.step(Move::kLeft, 0), ContractViolation);

  w.reset();
  const auto miss = grid_step(w, Move::kRight, 0);
  EXPECT_DOUBLE_EQ(miss.r_dm, -51.0);
  EXPECT_EQ(miss.reached_target, 1);
}

TEST(GridWorld, StepCapEndsEpisode) {
  GridWorld w(GridLayout::default_layout(), GridParams{-1.0, 50.0, 5});
  w.reset();
  GridStep last{};
  for (int i = 0; i < 5; ++i) last = w.step(Move::kDown, 0);
  EXPECT_TRUE(last.terminal);
  EXPECT_EQ(last.reached_target, -1);
  EXPECT_EQ(w.steps(), 5);
}

}  // namespace
}  // namespace tmdp::env
