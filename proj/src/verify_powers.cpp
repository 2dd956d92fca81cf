#include <map>
#include <mutex>

#include "tracecert/kernels.hpp"
#include "tracecert/verifier.hpp"

namespace tracecert {

namespace {

using Pair = std::pair<YIndex, YIndex>;

std::vector<int> used_indices(const YIndex& row, const YIndex& col) {
  std::vector<int> used;
  for (const YIndex* y : {&row, &col}) {
    for (int x : {y->i, y->j, y->k, y->l}) {
      if (x != 0) used.push_back(x);
    }
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

// Classification of every (row, col) position of U for one n, shared by the
// four powers.
struct Classification {
  std::vector<YIndex> labels;
  std::vector<Pair> keys;  // row-major
};

const Classification& classification(int n) {
  static std::mutex mutex;
  static std::map<int, Classification> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Classification cls;
  cls.labels = y_indices(n);
  const std::size_t size = cls.labels.size();
  cls.keys.resize(size * size);
  const auto rows = static_cast<std::ptrdiff_t>(size);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const auto row = static_cast<std::size_t>(r);
    for (std::size_t c = 0; c < size; ++c) cls.keys[row * size + c] = canonical_pair(cls.labels[row], cls.labels[c]);
  }
  return cache.emplace(n, std::move(cls)).first->second;
}

int max_index(const YIndex& y) { return std::max({y.i, y.j, y.k, y.l}); }

}  // namespace

std::pair<YIndex, YIndex> canonical_pair(const YIndex& row, const YIndex& col) {
  const std::vector<int> used = used_indices(row, col);
  std::vector<int> sigma(static_cast<std::size_t>(used.empty() ? 0 : used.back()), 0);
  Pair best{row, col};
  bool first = true;
  for_each_permutation(static_cast<int>(used.size()), [&](const Permutation& pi) {
    for (std::size_t k = 0; k < used.size(); ++k) sigma[static_cast<std::size_t>(used[k] - 1)] = pi[k];
    Pair candidate{row.permute(sigma), col.permute(sigma)};
    if (first || candidate < best) {
      best = candidate;
      first = false;
    }
  });
  return best;
}

std::pair<YIndex, YIndex> canonical_pair_brute_force(const YIndex& row, const YIndex& col, int n) {
  Pair best{row, col};
  for_each_permutation(n, [&](const Permutation& sigma) {
    Pair candidate{row.permute(sigma), col.permute(sigma)};
    if (candidate < best) best = candidate;
  });
  return best;
}

Integer evaluate_pattern(const PowerPattern& pattern, int power, int n) {
  if (power < 1 || power > 4) throw std::invalid_argument("evaluate_pattern: power must be 1..4");
  Integer acc = 0;
  const auto& c = pattern.coeffs[static_cast<std::size_t>(power - 1)];
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * n + c[k];
  return acc;
}

ProofReport verify_power_entry_formulas(int n, int power, const std::vector<ExactMatrix>& powers) {
  const std::string claim = "powers";
  if (power < 1 || power > 4) throw std::invalid_argument("verify_power_entry_formulas: power must be 1..4");
  if (powers.size() < static_cast<std::size_t>(power)) throw std::invalid_argument("verify_power_entry_formulas: missing matrix power");
  const ExactMatrix& m = powers[static_cast<std::size_t>(power - 1)];
  const Classification& cls = classification(n);
  const std::size_t size = cls.labels.size();
  if (m.rows() != size) throw std::invalid_argument("verify_power_entry_formulas: matrix size does not match n");

  std::map<YIndex, std::size_t> position;
  for (std::size_t k = 0; k < size; ++k) position[cls.labels[k]] = k;

  nlohmann::json w = {{"n", n}, {"power", power}};
  std::map<Pair, std::vector<std::size_t>> by_type;
  nlohmann::json skipped = nlohmann::json::array();
  const auto& table = power_table();
  for (std::size_t t = 0; t < table.size(); ++t) {
    const YIndex row = YIndex::parse(table[t].row);
    const YIndex col = YIndex::parse(table[t].col);
    if (std::max(max_index(row), max_index(col)) > n) {
      skipped.push_back(std::string(table[t].row) + " " + table[t].col);
      continue;
    }
    const Integer expected = evaluate_pattern(table[t], power, n);
    const Rational& actual = m(position.at(row), position.at(col));
    if (actual != Rational(expected)) {
      w["pattern"] = {{"row", table[t].row}, {"col", table[t].col}};
      w["expected"] = to_string(expected);
      w["actual"] = to_string(actual);
      return ProofReport::fail(claim, w);
    }
    by_type[canonical_pair(row, col)].push_back(t);
  }

  // Orbits with no printed pattern under either orientation; the first
  // matrix value seen is kept for the report.
  struct Untabulated {
    std::size_t positions = 0;
    Rational value;
  };
  std::map<Pair, Untabulated> unclassified;
  std::size_t via_transpose = 0;
  std::vector<bool> used(table.size(), false);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      auto it = by_type.find(cls.keys[r * size + c]);
      if (it == by_type.end()) {
        // The table lists one of (row, col) and (col, row); U^k is symmetric.
        it = by_type.find(cls.keys[c * size + r]);
        if (it == by_type.end()) {
          auto& slot = unclassified[cls.keys[r * size + c]];
          if (slot.positions++ == 0) slot.value = m(r, c);
          continue;
        }
        ++via_transpose;
      }
      for (std::size_t t : it->second) {
        used[t] = true;
        const Integer expected = evaluate_pattern(table[t], power, n);
        if (m(r, c) != Rational(expected)) {
          w["entry"] = {{"row", cls.labels[r].to_string()},
                        {"col", cls.labels[c].to_string()},
                        {"pattern_row", table[t].row},
                        {"pattern_col", table[t].col},
                        {"expected", to_string(expected)},
                        {"actual", to_string(m(r, c))}};
          return ProofReport::fail(claim, w);
        }
      }
    }
  }

  std::size_t shared = 0;
  for (const auto& [key, list] : by_type) shared += list.size() > 1 ? list.size() - 1 : 0;
  w["patterns"] = table.size();
  w["patterns_skipped"] = skipped;
  w["types"] = by_type.size();
  w["patterns_sharing_a_type"] = shared;
  w["positions"] = size * size;
  w["positions_matched_by_transpose"] = via_transpose;
  w["patterns_unused"] = static_cast<std::size_t>(std::count(used.begin(), used.end(), false)) - skipped.size();
  if (!unclassified.empty()) {
    nlohmann::json list = nlohmann::json::array();
    std::size_t positions = 0;
    for (const auto& [key, u] : unclassified) {
      positions += u.positions;
      // Orbits merged with their transpose are listed once.
      if (unclassified.count(canonical_pair(key.second, key.first)) && canonical_pair(key.second, key.first) < key) continue;
      list.push_back({{"row", key.first.to_string()}, {"col", key.second.to_string()}, {"positions", u.positions}, {"value", to_string(u.value)}});
    }
    w["unclassified"] = list;
    w["unclassified_positions"] = positions;
    return ProofReport::fail(claim, w);
  }
  return ProofReport::pass(claim, w);
}

ProofReport verify_power_entry_formulas(int n, int power) {
  std::vector<ExactMatrix> powers{build_U(n)};
  for (int k = 2; k <= power; ++k) powers.push_back(powers.back() * powers.front());
  return verify_power_entry_formulas(n, power, powers);
}

}  // namespace tracecert
