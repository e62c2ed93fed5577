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
#ifndef TMDP_SNAPSHOT_HPP_
#define TMDP_SNAPSHOT_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tmdp/beliefs.hpp"
#include "tmdp/bloom.hpp"
#include "tmdp/q_table.hpp"

namespace tmdp {

// Plain-text checkpoint: one "key=value" per line, keys sorted. Reals use the
// shortest round-trip decimal form; bloom counters are hex, eight digits per
// counter.
class Snapshot {
 public:
  void set(const std::string& key, std::string value);
  void set_real(const std::string& key, double value);
  void set_int(const std::string& key, long long value);
  void set_reals(const std::string& key, const std::vector<double>& values);

  bool contains(const std::string& key) const;
  const std::string& get(const std::string& key) const;
  double get_real(const std::string& key) const;
  long long get_int(const std::string& key) const;
  std::vector<double> get_reals(const std::string& key) const;

  std::string to_string() const;
  static Snapshot parse(std::string_view text);

  void save(const std::filesystem::path& path) const;
  static Snapshot load(const std::filesystem::path& path);

 private:
  std::map<std::string, std::string> entries_;
};

// Shortest decimal string that parses back to exactly the same double.
std::string format_real(double value);
double parse_real(std::string_view text);

void put(Snapshot& snap, const std::string& prefix, const DirichletBelief& b);
void put(Snapshot& snap, const std::string& prefix,
         const BloomConditionalModel& m);
void put(Snapshot& snap, const std::string& prefix, const QTable& q);
void put(Snapshot& snap, const std::string& prefix, const JointQTable& q);

DirichletBelief get_dirichlet(const Snapshot& snap, const std::string& prefix);
BloomConditionalModel get_bloom(const Snapshot& snap,
                                const std::string& prefix);
QTable get_q_table(const Snapshot& snap, const std::string& prefix);
JointQTable get_joint_q_table(const Snapshot& snap, const std::string& prefix);

}  // namespace tmdp

#endif  // TMDP_SNAPSHOT_HPP_
