#include <map>
#include <random>
#include <set>
#include <tuple>
#include <unordered_map>

#include "tracecert/packed.hpp"
#include "tracecert/trace_oracle.hpp"
#include "tracecert/verifier.hpp"

namespace tracecert {

namespace {

std::vector<long> as_longs(const ExactMatrix& m) {
  std::vector<long> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& x : m.entries()) out.push_back(x.get_num().get_si());
  return out;
}

using Codes = std::vector<std::array<std::uint8_t, 3>>;

Codes codes_of(const std::vector<Monomial>& entries) {
  Codes out;
  for (const auto& m : entries) {
    std::array<std::uint8_t, 3> c{};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& v = m.factors()[k];
      c[k] = packed::code(v.family, v.i, v.j);
    }
    out.push_back(c);
  }
  return out;
}

void accumulate_form(const Codes& codes, const std::vector<long>& matrix,
                     std::unordered_map<packed::Key, long long>& acc) {
  const std::size_t size = codes.size();
  std::uint8_t buf[6];
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const long value = matrix[r * size + c];
      if (value == 0) continue;
      std::copy(codes[r].begin(), codes[r].end(), buf);
      std::copy(codes[c].begin(), codes[c].end(), buf + 3);
      acc[packed::pack(buf, 6)] += value;
    }
  }
}

std::vector<std::pair<int, int>> copies(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace

Polynomial expand_certificate(int n) {
  if (n < 1) throw std::invalid_argument("expand_certificate: n must be positive");
  if (!packed::supports(n, 6)) return serial::expand_certificate(n);
  const std::vector<long> u = as_longs(build_U(n));
  const std::vector<long> r = as_longs(build_R_blocks(n).expand());
  const Codes y = codes_of(build_y(n).entries);
  const auto pairs = copies(n);
  const auto tasks = static_cast<std::ptrdiff_t>(pairs.size() + 1);
  std::unordered_map<packed::Key, long long> merged;

#pragma omp parallel
  {
    std::unordered_map<packed::Key, long long> local;
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t task = 0; task < tasks; ++task) {
      if (task == 0) {
        accumulate_form(y, u, local);
      } else {
        const auto [i, j] = pairs[static_cast<std::size_t>(task - 1)];
        accumulate_form(codes_of(build_z(n, i, j).entries), r, local);
      }
    }
#pragma omp critical(tracecert_expand_merge)
    for (const auto& [key, value] : local) merged[key] += value;
  }

  Polynomial out;
  for (const auto& [key, value] : merged) out.add_term(packed::unpack(key), Integer(static_cast<long>(value)));
  return out;
}

namespace serial {

Polynomial expand_certificate(int n) {
  if (n < 1) throw std::invalid_argument("expand_certificate: n must be positive");
  Polynomial out;
  auto add_form = [&out](const std::vector<Monomial>& v, const ExactMatrix& m) {
    for (std::size_t r = 0; r < v.size(); ++r) {
      for (std::size_t c = 0; c < v.size(); ++c) out.add_term(v[r] * v[c], m(r, c).get_num());
    }
  };
  add_form(build_y(n).entries, build_U(n));
  const ExactMatrix r = build_R(n);
  for (const auto& [i, j] : copies(n)) add_form(build_z(n, i, j).entries, r);
  return out;
}

}  // namespace serial

ProofReport verify_identity(int n) {
  const std::string claim = "identity";
  const Polynomial p = coefficient_polynomial(n, 6, 2);
  const Polynomial cert = expand_certificate(n);
  const Polynomial diff = cert - p;
  if (diff.is_zero()) return ProofReport::pass(claim, {{"n", n}, {"terms", p.size()}});
  const Monomial& m = diff.terms().begin()->first;
  return ProofReport::fail(claim, {{"n", n},
                                   {"monomial", m.to_string()},
                                   {"certificate_coefficient", to_string(cert.coefficient(m))},
                                   {"trace_coefficient", to_string(p.coefficient(m))},
                                   {"differing_terms", diff.size()}});
}

const AccountingEntry* AccountingReport::find(const Monomial& m) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), m,
                                   [](const AccountingEntry& e, const Monomial& x) { return e.monomial < x; });
  return (it != entries.end() && it->monomial == m) ? &*it : nullptr;
}

std::string AccountingReport::source(const Contribution& c) const {
  if (c.copy_i == 0) return "U[" + y_labels[c.row] + "][" + y_labels[c.col] + "]";
  return "R(" + std::to_string(c.copy_i) + "," + std::to_string(c.copy_j) + ")[" + z_labels[c.row] + "][" +
         z_labels[c.col] + "]";
}

AccountingReport accounting_report(int n) {
  AccountingReport report;
  report.n = n;
  std::map<Monomial, AccountingEntry> ledger;
  std::set<std::tuple<int, int, std::size_t, std::size_t>> seen;
  auto add_form = [&](int ci, int cj, const std::vector<Monomial>& v, const ExactMatrix& m) {
    report.positions_expected += v.size() * v.size();
    for (std::size_t r = 0; r < v.size(); ++r) {
      for (std::size_t c = 0; c < v.size(); ++c) {
        const Monomial product = v[r] * v[c];
        AccountingEntry& entry = ledger[product];
        entry.monomial = product;
        const long value = m(r, c).get_num().get_si();
        entry.contributions.push_back({ci, cj, r, c, value});
        entry.total += value;
        seen.emplace(ci, cj, r, c);
      }
    }
  };

  const LabeledMonomialVector y = build_y(n);
  report.y_labels = y.labels;
  add_form(0, 0, y.entries, build_U(n));
  const ExactMatrix r = build_R(n);
  report.z_labels = r.row_labels();
  for (const auto& [i, j] : copies(n)) add_form(i, j, build_z(n, i, j).entries, r);

  for (auto& [m, entry] : ledger) {
    report.positions_seen += entry.contributions.size();
    report.grand_total += entry.total;
    report.entries.push_back(std::move(entry));
  }
  report.positions_unique = seen.size() == report.positions_seen;
  return report;
}

ProofReport verify_accounting(const AccountingReport& report, const Polynomial& p) {
  const std::string claim = "accounting";
  if (report.positions_seen != report.positions_expected || !report.positions_unique) {
    return ProofReport::fail(claim, {{"n", report.n},
                                     {"positions_expected", report.positions_expected},
                                     {"positions_seen", report.positions_seen},
                                     {"positions_unique", report.positions_unique}});
  }
  for (const auto& entry : report.entries) {
    const Integer expected = p.coefficient(entry.monomial);
    if (entry.total != expected) {
      return ProofReport::fail(claim, {{"n", report.n},
                                       {"monomial", entry.monomial.to_string()},
                                       {"ledger_total", to_string(entry.total)},
                                       {"trace_coefficient", to_string(expected)}});
    }
  }
  Integer p_total = 0;
  for (const auto& [m, c] : p.terms()) {
    p_total += c;
    if (report.find(m) == nullptr) {
      return ProofReport::fail(claim, {{"n", report.n}, {"monomial", m.to_string()}, {"reason", "not addressed by any entry"}});
    }
  }
  if (p_total != report.grand_total) {
    return ProofReport::fail(claim, {{"n", report.n},
                                     {"ledger_grand_total", to_string(report.grand_total)},
                                     {"trace_grand_total", to_string(p_total)}});
  }
  return ProofReport::pass(claim, {{"n", report.n},
                                   {"positions", report.positions_seen},
                                   {"monomials", report.entries.size()},
                                   {"grand_total", to_string(report.grand_total)}});
}

ProofReport verify_random(int n, int samples, std::uint64_t seed) {
  const std::string claim = "random";
  const Polynomial p = coefficient_polynomial(n, 6, 2);
  const Polynomial cert = expand_certificate(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-4, 4);
  const auto size = static_cast<std::size_t>(n);
  auto random_symmetric = [&] {
    ExactMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i; j < size; ++j) {
        m(i, j) = dist(rng);
        m(j, i) = m(i, j);
      }
    }
    return m;
  };
  auto matrix_json = [](const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : m.row(r)) row.push_back(to_string(x));
      rows.push_back(row);
    }
    return rows;
  };

  Rational smallest;
  for (int s = 0; s < samples; ++s) {
    const ExactMatrix a = random_symmetric();
    const ExactMatrix b = random_symmetric();
    const Rational numeric = numeric_t_coefficient(a, b, 6, 2);
    const Assignment values = assignment_from(a, b);
    const Rational from_p = evaluate(p, values);
    const Rational from_cert = evaluate(cert, values);
    if (numeric != from_p || numeric != from_cert || sgn(numeric) < 0) {
      return ProofReport::fail(claim, {{"n", n},
                                       {"seed", seed},
                                       {"sample", s},
                                       {"A", matrix_json(a)},
                                       {"B", matrix_json(b)},
                                       {"numeric", to_string(numeric)},
                                       {"polynomial", to_string(from_p)},
                                       {"certificate", to_string(from_cert)}});
    }
    if (s == 0 || numeric < smallest) smallest = numeric;
  }
  return ProofReport::pass(claim, {{"n", n}, {"seed", seed}, {"samples", samples}, {"min_value", to_string(smallest)}});
}

}  // namespace tracecert
