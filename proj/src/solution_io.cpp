#include "hallar/solution_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hallar/numfmt.hpp"

namespace hallar::io {

namespace {

std::vector<std::vector<double>> read_csv_rows(const std::string& text, const std::string& what) {
  std::vector<std::vector<double>> rows;
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
    if (blank) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      std::string field = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      pos = comma == std::string::npos ? line.size() + 1 : comma + 1;
      // trim
      while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.erase(field.begin());
      while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.pop_back();
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (field.empty() || end != field.c_str() + field.size() || !std::isfinite(v))
        throw ParseError(what + " line " + std::to_string(line_no) + ": bad numeric field '" + field + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
  if (!out) throw ParseError("failed while writing file: " + path);
}

Matrix read_warm_start(const std::string& path, const SdpInstance& inst, ParseDiagnostics* diag) {
  const auto rows = read_csv_rows(read_file(path), "warm start");
  if (rows.size() != static_cast<std::size_t>(inst.n))
    throw ParseError("warm start has " + std::to_string(rows.size()) + " rows, expected n = " +
                     std::to_string(inst.n));
  const std::size_t r = rows[0].size();
  Matrix Y(inst.n, static_cast<Index>(r));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != r)
      throw ParseError("warm start line " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " fields, expected " + std::to_string(r));
    for (std::size_t j = 0; j < r; ++j) Y(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  const double sq = Y.squaredNorm();
  if (sq > inst.tau) {
    Y *= std::sqrt(inst.tau) / std::sqrt(sq);
    if (diag)
      diag->warnings.push_back("warm start violates ‖Y0‖_F² ≤ τ (" + numfmt::shortest(sq) +
                               " > " + numfmt::shortest(inst.tau) + "); rescaled onto the bound");
  }
  return Y;
}

std::string primal_text(const Matrix& Y) {
  std::ostringstream os;
  for (Index i = 0; i < Y.rows(); ++i) {
    for (Index j = 0; j < Y.cols(); ++j) {
      if (j) os << ",";
      os << numfmt::shortest(Y(i, j));
    }
    os << "\n";
  }
  return os.str();
}

void write_primal(const Matrix& Y, const std::string& path) { write_file(path, primal_text(Y)); }

std::string dual_text(double theta, const Vector& p) {
  std::ostringstream os;
  os << numfmt::shortest(theta);
  for (Index i = 0; i < p.size(); ++i) os << "," << numfmt::shortest(p[i]);
  os << "\n";
  return os.str();
}

void write_dual(double theta, const Vector& p, const std::string& path) {
  write_file(path, dual_text(theta, p));
}

Matrix read_primal(const std::string& path) {
  const auto rows = read_csv_rows(read_file(path), "primal file");
  if (rows.empty()) throw ParseError("primal file is empty: " + path);
  const std::size_t r = rows[0].size();
  Matrix Y(static_cast<Index>(rows.size()), static_cast<Index>(r));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != r)
      throw ParseError("primal file has ragged rows: " + path);
    for (std::size_t j = 0; j < r; ++j) Y(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  return Y;
}

std::pair<double, Vector> read_dual(const std::string& path) {
  const auto rows = read_csv_rows(read_file(path), "dual file");
  if (rows.size() != 1) throw ParseError("dual file must contain a single line: " + path);
  const std::vector<double>& row = rows[0];
  if (row.empty()) throw ParseError("dual file is empty: " + path);
  Vector p(static_cast<Index>(row.size()) - 1);
  for (std::size_t i = 1; i < row.size(); ++i) p[static_cast<Index>(i) - 1] = row[i];
  return {row[0], std::move(p)};
}

}  // namespace hallar::io
