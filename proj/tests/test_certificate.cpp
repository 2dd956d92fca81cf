#include <set>

#include "doctest.h"
#include "tracecert/certificate.hpp"
#include "tracecert/serialize.hpp"

using namespace tracecert;

namespace {

const std::filesystem::path kGolden = TRACECERT_GOLDEN_DIR;

}  // namespace

TEST_SUITE("certificate-builder") {

TEST_CASE("index labels round-trip") {
  for (int n : {1, 3, 5}) {
    for (const auto& y : y_indices(n)) CHECK(YIndex::parse(y.to_string()) == y);
    if (n >= 2) {
      for (const auto& z : z_indices(n, 1, 2)) CHECK(ZIndex::parse(z.to_string()) == z);
    }
  }
  CHECK(YIndex::triple(1, 2, 3, 1).to_string() == "({1,2,3},1)");
  CHECK(YIndex::pair(2, 1).to_string() == "(2,1)");
  CHECK(YIndex::hat(1, 1).to_string() == "(1^,1^)");
  CHECK_THROWS_AS(YIndex::parse("(1,2"), std::invalid_argument);
  CHECK_THROWS_AS(z_indices(3, 2, 2), std::invalid_argument);
}

TEST_CASE("vector sizes") {
  for (int n = 1; n <= 7; ++n) {
    const long nn = n;
    CHECK(y_size(n) == static_cast<std::size_t>(3 * binomial(n, 3).get_si() + nn * (nn - 1) + nn * nn));
    CHECK(build_y(n).size() == y_size(n));
    std::size_t blocks = 0;
    for (std::size_t s : r_block_sizes(n)) blocks += s;
    CHECK(blocks == z_size(n));
    if (n >= 2) CHECK(build_z(n, 1, n).size() == z_size(n));
  }
  CHECK(y_size(4) == 40);
  CHECK(z_size(4) == 40);
}

TEST_CASE("entries of y and z are distinct a^2 b monomials") {
  for (int n : {3, 4, 5}) {
    const LabeledMonomialVector y = build_y(n);
    std::set<Monomial> seen(y.entries.begin(), y.entries.end());
    CHECK(seen.size() == y.size());
    for (const auto& m : y.entries) {
      CHECK(m.degree(Family::a) == 2);
      CHECK(m.degree(Family::b) == 1);
    }
    const LabeledMonomialVector z = build_z(n, 2, 3);
    for (const auto& m : z.entries) {
      CHECK(m.degree(Family::a) == 2);
      CHECK(m.degree(Family::b) == 1);
    }
  }
  CHECK(build_y(1).entries.front().to_string() == "a{1,1}^2 b{1,1}");
}

TEST_CASE("n = 4 objects match the transcribed printouts") {
  CHECK(build_U(4) == io::read_grid(kGolden / "n4_U"));
  CHECK(build_R(4) == io::read_grid(kGolden / "n4_R"));
  CHECK(build_y(4).entries == io::read_monomials(kGolden / "n4_y"));
  CHECK(build_z(4, 1, 2).entries == io::read_monomials(kGolden / "n4_z12"));
  CHECK(io::verify_golden(kGolden).verified);
}

TEST_CASE("U is symmetric and S_n-equivariant") {
  for (int n : {3, 4, 5}) {
    const ExactMatrix u = build_U(n);
    CHECK(u.is_symmetric());
    CHECK(u.is_integral());
    const auto labels = y_indices(n);
    Permutation sigma(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) sigma[static_cast<std::size_t>(k)] = (k + 1) % n + 1;
    for (std::size_t r = 0; r < labels.size(); r += 3) {
      for (std::size_t c = 0; c < labels.size(); ++c) {
        CHECK(entry_U(n, labels[r].permute(sigma), labels[c].permute(sigma)) == entry_U(n, labels[r], labels[c]));
      }
    }
  }
  CHECK(build_U(1) == ExactMatrix::from_rows({{15}}));
  CHECK_THROWS_AS(entry_U(3, YIndex::pair(1, 1), YIndex::pair(1, 2)), std::invalid_argument);
}

TEST_CASE("R block structure") {
  const BlockConstantMatrix r = build_R_blocks(5);
  CHECK(r.row_sizes() == std::vector<std::size_t>{1, 4, 4, 16, 20, 20});
  CHECK(r.expand().is_symmetric());
  CHECK(r.expand() == build_R(5));
  CHECK(build_R(5).row_labels() == build_z(5, 1, 2).labels);
}

TEST_CASE("z monomials follow the pair") {
  const LabeledMonomialVector z12 = build_z(4, 1, 2);
  const LabeledMonomialVector z34 = build_z(4, 3, 4);
  CHECK(z12.entries.front().to_string() == "a{1,2}^2 b{1,2}");
  CHECK(z34.entries.front().to_string() == "a{3,4}^2 b{3,4}");
}

}  // TEST_SUITE
