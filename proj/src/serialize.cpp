#include "tracecert/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tracecert::io {

namespace {

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

nlohmann::json to_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : m.row(r)) row.push_back(tracecert::to_string(x));
    rows.push_back(std::move(row));
  }
  nlohmann::json j = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
  if (m.has_labels()) {
    j["row_labels"] = m.row_labels();
    j["col_labels"] = m.col_labels();
  }
  return j;
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& data = j.at("entries");
  if (data.size() != rows) throw std::invalid_argument("matrix_from_json: row count mismatch");
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (data[r].size() != cols) throw std::invalid_argument("matrix_from_json: column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_rational(data[r][c].get<std::string>());
  }
  if (j.contains("row_labels") || j.contains("col_labels")) {
    m.set_labels(j.value("row_labels", std::vector<std::string>{}), j.value("col_labels", std::vector<std::string>{}));
  }
  return m;
}

nlohmann::json to_json(const LabeledMonomialVector& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& m : v.entries) entries.push_back(m.to_string());
  return {{"labels", v.labels}, {"entries", std::move(entries)}};
}

LabeledMonomialVector vector_from_json(const nlohmann::json& j) {
  LabeledMonomialVector v;
  v.labels = j.at("labels").get<std::vector<std::string>>();
  for (const auto& e : j.at("entries")) v.entries.push_back(Monomial::parse(e.get<std::string>()));
  if (v.labels.size() != v.entries.size()) throw std::invalid_argument("vector_from_json: label count mismatch");
  return v;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"monomial", m.to_string()}, {"coefficient", tracecert::to_string(c)}});
  return {{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  Polynomial p;
  for (const auto& t : j.at("terms")) {
    p.add_term(Monomial::parse(t.at("monomial").get<std::string>()), parse_integer(t.at("coefficient").get<std::string>()));
  }
  return p;
}

nlohmann::json to_json(const AccountingReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json sources = nlohmann::json::array();
    for (const auto& c : e.contributions) {
      if (c.value != 0) sources.push_back({{"position", report.source(c)}, {"value", c.value}});
    }
    entries.push_back({{"monomial", e.monomial.to_string()}, {"total", tracecert::to_string(e.total)}, {"sources", std::move(sources)}});
  }
  return {{"n", report.n},
          {"positions_expected", report.positions_expected},
          {"positions_seen", report.positions_seen},
          {"positions_unique", report.positions_unique},
          {"grand_total", tracecert::to_string(report.grand_total)},
          {"entries", std::move(entries)}};
}

std::string to_csv(const ExactMatrix& m) {
  std::ostringstream out;
  out << "label";
  for (std::size_t c = 0; c < m.cols(); ++c) {
    out << ',' << csv_cell(m.col_labels().empty() ? std::to_string(c) : m.col_labels()[c]);
  }
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << csv_cell(m.row_labels().empty() ? std::to_string(r) : m.row_labels()[r]);
    for (const auto& x : m.row(r)) out << ',' << tracecert::to_string(x);
    out << '\n';
  }
  return out.str();
}

std::string to_csv(const AccountingReport& report) {
  std::ostringstream out;
  out << "monomial,position,value\n";
  for (const auto& e : report.entries) {
    for (const auto& c : e.contributions) {
      if (c.value != 0) out << csv_cell(e.monomial.to_string()) << ',' << csv_cell(report.source(c)) << ',' << c.value << '\n';
    }
  }
  return out.str();
}

std::string to_text(const ExactMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << tracecert::to_string(m(r, c));
    out << '\n';
  }
  return out.str();
}

std::string to_text(const LabeledMonomialVector& v) {
  std::string out;
  for (const auto& m : v.entries) out += m.to_string() + '\n';
  return out;
}

ExactMatrix read_grid(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::vector<Rational> row;
    for (std::string cell; cells >> cell;) row.push_back(parse_rational(cell));
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) throw std::runtime_error("read_grid: ragged row " + std::to_string(rows.size() + 1));
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Rational> flat;
  for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return ExactMatrix(rows.size(), cols, std::move(flat));
}

ExactMatrix read_grid(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return read_grid(in);
}

std::vector<Monomial> read_monomials(std::istream& in) {
  std::vector<Monomial> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(Monomial::parse(line));
  }
  return out;
}

std::vector<Monomial> read_monomials(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return read_monomials(in);
}

ProofReport verify_golden(const std::filesystem::path& dir) {
  const std::string claim = "golden";
  nlohmann::json w = {{"n", 4}, {"dir", dir.string()}};
  auto matrix_check = [&](const char* name, const ExactMatrix& built) -> bool {
    const ExactMatrix printed = read_grid(dir / name);
    if (printed.rows() != built.rows() || printed.cols() != built.cols()) {
      w["object"] = name;
      w["printed_shape"] = {printed.rows(), printed.cols()};
      w["built_shape"] = {built.rows(), built.cols()};
      return false;
    }
    if (const auto bad = built.first_difference(printed)) {
      w["object"] = name;
      w["row"] = built.row_labels().empty() ? std::to_string(bad->first) : built.row_labels()[bad->first];
      w["col"] = built.col_labels().empty() ? std::to_string(bad->second) : built.col_labels()[bad->second];
      w["printed"] = tracecert::to_string(printed(bad->first, bad->second));
      w["built"] = tracecert::to_string(built(bad->first, bad->second));
      return false;
    }
    return true;
  };
  auto vector_check = [&](const char* name, const LabeledMonomialVector& built) -> bool {
    const std::vector<Monomial> printed = read_monomials(dir / name);
    if (printed.size() != built.size()) {
      w["object"] = name;
      w["printed_size"] = printed.size();
      w["built_size"] = built.size();
      return false;
    }
    for (std::size_t k = 0; k < printed.size(); ++k) {
      if (printed[k] != built.entries[k]) {
        w["object"] = name;
        w["label"] = built.labels[k];
        w["printed"] = printed[k].to_string();
        w["built"] = built.entries[k].to_string();
        return false;
      }
    }
    return true;
  };
  if (!matrix_check("n4_U", build_U(4)) || !matrix_check("n4_R", build_R(4)) || !vector_check("n4_y", build_y(4)) ||
      !vector_check("n4_z12", build_z(4, 1, 2))) {
    return ProofReport::fail(claim, w);
  }
  w["compared"] = {"U", "R", "y", "z_(1,2)"};
  w["entries"] = 2 * 40 * 40 + 2 * 40;
  return ProofReport::pass(claim, w);
}

}  // namespace tracecert::io
