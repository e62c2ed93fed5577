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
#include "tmdp/snapshot.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tmdp/errors.hpp"

namespace tmdp {

std::string format_real(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
  double value = 0.0;
  const auto res =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ContractViolation("not a real number: '" + std::string(text) + "'");
  }
  return value;
}

void Snapshot::set(const std::string& key, std::string value) {
  if (key.empty() || key.find_first_of("=\n") != std::string::npos ||
      value.find('\n') != std::string::npos) {
    throw ContractViolation("invalid snapshot key or value for '" + key + "'");
  }
  entries_[key] = std::move(value);
}

void Snapshot::set_real(const std::string& key, double value) {
  set(key, format_real(value));
}

void Snapshot::set_int(const std::string& key, long long value) {
  set(key, std::to_string(value));
}

void Snapshot::set_reals(const std::string& key,
                         const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_real(values[i]);
  }
  set(key, std::move(out));
}

bool Snapshot::contains(const std::string& key) const {
  return entries_.count(key) != 0;
}

const std::string& Snapshot::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw ContractViolation("snapshot is missing key '" + key + "'");
  }
  return it->second;
}

double Snapshot::get_real(const std::string& key) const {
  return parse_real(get(key));
}

long long Snapshot::get_int(const std::string& key) const {
  const auto& text = get(key);
  long long value = 0;
  const auto res =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ContractViolation("snapshot key '" + key + "' is not an integer");
  }
  return value;
}

std::vector<double> Snapshot::get_reals(const std::string& key) const {
  std::vector<double> out;
  std::string_view text = get(key);
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_real(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string Snapshot::to_string() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

Snapshot Snapshot::parse(std::string_view text) {
  Snapshot snap;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ContractViolation("snapshot line " + std::to_string(line_no) +
                              " has no '='");
    }
    snap.set(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
  }
  return snap;
}

void Snapshot::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write snapshot " + path.string());
  out << to_string();
  if (!out) throw std::runtime_error("failed writing snapshot " + path.string());
}

Snapshot Snapshot::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read snapshot " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

namespace {

std::string to_hex(const std::vector<std::uint32_t>& cells) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(cells.size() * 8, '0');
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::uint32_t v = cells[i];
    for (int d = 7; d >= 0; --d) {
      out[i * 8 + d] = kDigits[v & 0xfu];
      v >>= 4;
    }
  }
  return out;
}

std::vector<std::uint32_t> from_hex(std::string_view text) {
  if (text.size() % 8 != 0) {
    throw ContractViolation("bloom cell hex length is not a multiple of 8");
  }
  std::vector<std::uint32_t> cells(text.size() / 8);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::uint32_t v = 0;
    const auto* first = text.data() + i * 8;
    const auto res = std::from_chars(first, first + 8, v, 16);
    if (res.ec != std::errc() || res.ptr != first + 8) {
      throw ContractViolation("bad hex in bloom cells");
    }
    cells[i] = v;
  }
  return cells;
}

}  // namespace

void put(Snapshot& snap, const std::string& prefix, const DirichletBelief& b) {
  snap.set(prefix + ".type", "dirichlet");
  snap.set_reals(prefix + ".pseudocounts", b.pseudocounts());
  snap.set_real(prefix + ".forget_lambda", b.forget_lambda());
}

DirichletBelief get_dirichlet(const Snapshot& snap, const std::string& prefix) {
  if (snap.get(prefix + ".type") != "dirichlet") {
    throw ContractViolation(prefix + " is not a dirichlet snapshot");
  }
  return DirichletBelief(snap.get_reals(prefix + ".pseudocounts"),
                         snap.get_real(prefix + ".forget_lambda"));
}

void put(Snapshot& snap, const std::string& prefix,
         const BloomConditionalModel& m) {
  snap.set(prefix + ".type", "bloom_conditional");
  snap.set_int(prefix + ".n_opp_actions", m.n_opp_actions());
  snap.set_real(prefix + ".prior_pseudocount", m.prior_pseudocount());
  const auto& params = m.filters().front().params();
  snap.set_int(prefix + ".capacity", static_cast<long long>(params.capacity));
  snap.set_int(prefix + ".hash_count", params.hash_count);
  snap.set_real(prefix + ".fp_rate", params.fp_rate);
  put(snap, prefix + ".marginal", m.marginal());
  for (int j = 0; j < m.n_opp_actions(); ++j) {
    snap.set(prefix + ".filter." + std::to_string(j),
             to_hex(m.filters()[j].cells()));
  }
}

BloomConditionalModel get_bloom(const Snapshot& snap,
                                const std::string& prefix) {
  if (snap.get(prefix + ".type") != "bloom_conditional") {
    throw ContractViolation(prefix + " is not a bloom snapshot");
  }
  BloomParams params;
  params.capacity = static_cast<std::uint64_t>(snap.get_int(prefix + ".capacity"));
  params.hash_count = static_cast<int>(snap.get_int(prefix + ".hash_count"));
  params.fp_rate = snap.get_real(prefix + ".fp_rate");
  const int n = static_cast<int>(snap.get_int(prefix + ".n_opp_actions"));
  BloomConditionalModel m(n, params, 1.0,
                          snap.get_real(prefix + ".prior_pseudocount"));
  m.marginal() = get_dirichlet(snap, prefix + ".marginal");
  for (int j = 0; j < n; ++j) {
    m.filters()[j].set_cells(
        from_hex(snap.get(prefix + ".filter." + std::to_string(j))));
  }
  return m;
}

void put(Snapshot& snap, const std::string& prefix, const QTable& q) {
  snap.set(prefix + ".type", "q_table");
  snap.set_int(prefix + ".n_states", q.n_states());
  snap.set_int(prefix + ".n_actions", q.n_actions());
  snap.set_reals(prefix + ".values", q.values());
}

QTable get_q_table(const Snapshot& snap, const std::string& prefix) {
  if (snap.get(prefix + ".type") != "q_table") {
    throw ContractViolation(prefix + " is not a q_table snapshot");
  }
  QTable q(static_cast<int>(snap.get_int(prefix + ".n_states")),
           static_cast<int>(snap.get_int(prefix + ".n_actions")));
  const auto values = snap.get_reals(prefix + ".values");
  if (values.size() != q.values().size()) {
    throw ContractViolation(prefix + " has the wrong number of values");
  }
  for (int s = 0; s < q.n_states(); ++s)
    for (int a = 0; a < q.n_actions(); ++a)
      q.at(s, a) = values[static_cast<std::size_t>(s) * q.n_actions() + a];
  return q;
}

void put(Snapshot& snap, const std::string& prefix, const JointQTable& q) {
  snap.set(prefix + ".type", "joint_q_table");
  snap.set_int(prefix + ".n_states", q.n_states());
  snap.set_int(prefix + ".n_actions", q.n_actions());
  snap.set_int(prefix + ".n_opp_actions", q.n_opp_actions());
  snap.set_reals(prefix + ".values", q.values());
}

JointQTable get_joint_q_table(const Snapshot& snap, const std::string& prefix) {
  if (snap.get(prefix + ".type") != "joint_q_table") {
    throw ContractViolation(prefix + " is not a joint_q_table snapshot");
  }
  JointQTable q(static_cast<int>(snap.get_int(prefix + ".n_states")),
                static_cast<int>(snap.get_int(prefix + ".n_actions")),
                static_cast<int>(snap.get_int(prefix + ".n_opp_actions")));
  const auto values = snap.get_reals(prefix + ".values");
  if (values.size() != q.values().size()) {
    throw ContractViolation(prefix + " has the wrong number of values");
  }
  std::size_t i = 0;
  for (int s = 0; s < q.n_states(); ++s)
    for (int a = 0; a < q.n_actions(); ++a)
      for (int b = 0; b < q.n_opp_actions(); ++b) q.at(s, a, b) = values[i++];
  return q;
}

}  // namespace tmdp
