// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when a
// criterion fails, unless its number is passed with --known-gap (the line is
// still printed as FAIL).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "tracecert/serialize.hpp"
#include "tracecert/trace_oracle.hpp"
#include "tracecert/verifier.hpp"

using namespace tracecert;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome identity() {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 6; ++n) {
    const ProofReport r = verify_identity(n);
    if (!r.verified) return fail(r.to_json().dump());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream out;
  out << "n=1..6 exact, " << s << "s";
  return {s <= 300, out.str()};
}

Outcome golden() {
  const ProofReport r = io::verify_golden(TRACECERT_GOLDEN_DIR);
  return {r.verified, r.verified ? "U, R, y, z_(1,2) at n=4 match" : r.witness.dump()};
}

Outcome type_counts() {
  const std::size_t c3 = count_types(coefficient_polynomial(3, 6, 2), 3);
  const std::size_t c6 = count_types(coefficient_polynomial(6, 6, 2), 6);
  const std::size_t c7 = count_types(coefficient_polynomial(7, 6, 2), 7);
  const std::string detail = std::to_string(c3) + "/" + std::to_string(c6) + "/" + std::to_string(c7);
  return {c3 == 80 && c6 == 169 && c7 == 169, detail};
}

Outcome spot_coefficient() {
  const Monomial spot = Monomial::parse("a{1,2}^2 a{1,3}^2 b{1,1}^2");
  for (int n = 3; n <= 6; ++n) {
    const Polynomial p = coefficient_polynomial(n, 6, 2);
    if (p.coefficient(spot) != 18) return fail("n=" + std::to_string(n) + " coefficient " + to_string(p.coefficient(spot)));
    const AccountingReport report = accounting_report(n);
    const AccountingEntry* e = report.find(spot);
    std::multiset<long> parts;
    for (const auto& c : e->contributions) {
      if (c.value != 0) parts.insert(c.value);
    }
    if (parts != std::multiset<long>{6, 6, 6}) return fail("n=" + std::to_string(n) + " accounting is not 6+6+6");
    const ProofReport ledger = verify_accounting(report, p);
    if (!ledger.verified) return fail(ledger.to_json().dump());
  }
  return {true, "18 = 6+6+6 for n=3..6"};
}

Outcome psd_r() {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 8; ++n) {
    const ProofReport r = verify_R_psd(n);
    if (!r.verified) return fail(r.to_json().dump());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {s <= 60, "n=2..8, " + std::to_string(s) + "s"};
}

Outcome min_poly() {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 6; ++n) {
    const ProofReport r = verify_U_psd(n);
    if (!r.verified) return fail(r.to_json().dump());
    const MuCoefficients m = mu_coefficients(n);
    if (n >= 2 && !(m.f < 0 && m.g > 0 && m.h < 0)) return fail("sign pattern at n=" + std::to_string(n));
  }
  const std::string mu4 = UPoly::from_descending(mu_coefficients(4).mu()).to_string();
  const std::string mu5 = UPoly::from_descending(mu_coefficients(5).mu()).to_string();
  if (mu_coefficients(4).mu() != std::vector<Rational>{1, -576, 68544, -1270080, 0}) return fail("mu at n=4: " + mu4);
  if (mu_coefficients(5).mu() != std::vector<Rational>{1, -930, 180225, -5467500, 0}) return fail("mu at n=5: " + mu5);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {s <= 120, "mu(U)=0 for n=1..6; n=4: " + mu4};
}

Outcome powers() {
  std::string missing;
  for (int n : {6, 7}) {
    std::vector<ExactMatrix> pw{build_U(n)};
    for (int k = 2; k <= 4; ++k) pw.push_back(pw.back() * pw.front());
    for (int k = 1; k <= 4; ++k) {
      const ProofReport r = verify_power_entry_formulas(n, k, pw);
      if (r.verified) continue;
      if (!r.witness.contains("unclassified")) return fail(r.to_json().dump());
      if (missing.empty()) {
        for (const auto& u : r.witness["unclassified"]) {
          missing += (missing.empty() ? "" : ", ") + u["row"].get<std::string>() + "/" + u["col"].get<std::string>();
        }
        missing = "all printed formulas hold; no printed type for " + missing + " (" +
                  r.witness["unclassified_positions"].dump() + " positions at n=" + std::to_string(n) + ")";
      }
    }
  }
  if (!missing.empty()) return fail(missing);
  return {true, "full coverage at n=6,7"};
}

Outcome spectrum() {
  std::string conj;
  for (int n : {4, 5}) {
    const ProofReport r = verify_spectrum(n);
    if (!r.verified) return fail(r.to_json().dump());
    conj += "n=" + std::to_string(n) + " conjecture " + r.witness["conjecture"].get<std::string>() + "; ";
  }
  const ProofReport e = verify_quadratic_eigenvectors(4);
  if (!e.verified) return fail(e.to_json().dump());
  return {true, conj + "eigenvectors for 78 +- 6*sqrt(85)"};
}

Outcome series() {
  const ProofReport r = verify_c_generating_function(10);
  if (!r.verified) return fail(r.to_json().dump());
  const std::vector<Rational> s = gamma_series(17);
  const std::vector<long> expected{56, 150, 330, 637, 1120, 1836};
  for (int n = 4; n <= 9; ++n) {
    if (s[static_cast<std::size_t>(2 * n - 3)] != expected[static_cast<std::size_t>(n - 4)]) return fail("n=" + std::to_string(n));
  }
  return {true, "c/54 for n=4..10"};
}

Outcome random_check() {
  for (int n = 2; n <= 5; ++n) {
    const ProofReport r = verify_random(n, 100, 20240601u + static_cast<unsigned>(n));
    if (!r.verified) return fail(r.to_json().dump());
  }
  return {true, "100 samples each for n=2..5"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_gaps;
  for (int k = 1; k < argc; ++k) {
    if (std::string(argv[k]) == "--known-gap" && k + 1 < argc) known_gaps.insert(std::atoi(argv[++k]));
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"SOS identity", identity},
      {"golden n=4 reproduction", golden},
      {"monomial type counts", type_counts},
      {"spot coefficient and accounting", spot_coefficient},
      {"R PSD replay", psd_r},
      {"U annihilating polynomial", min_poly},
      {"power entry formulas", powers},
      {"spectral structure", spectrum},
      {"generating function", series},
      {"randomized cross-check", random_check},
  };
  int status = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[k].first << "): " << o.detail;
    if (!o.pass && known_gaps.count(id)) std::cout << " [known gap]";
    std::cout << std::endl;
    if (!o.pass && !known_gaps.count(id)) status = 1;
  }
  return status;
}
