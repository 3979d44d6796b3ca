#include "hallar/hslr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "hallar/numfmt.hpp"

namespace hallar::io {

namespace {

struct Line {
  std::size_t number;  // 1-based physical line
  std::vector<std::string> tokens;
};

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    Line line{line_no, {}};
    std::string tok;
    bool comment = false;
    for (char c : raw) {
      if (c == '#') { comment = true; break; }
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!tok.empty()) { line.tokens.push_back(std::move(tok)); tok.clear(); }
      } else if (c == ';') {
        if (!tok.empty()) { line.tokens.push_back(std::move(tok)); tok.clear(); }
        line.tokens.emplace_back(";");
      } else {
        tok.push_back(c);
      }
    }
    (void)comment;
    if (!tok.empty()) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

bool to_integer(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t k = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
  if (k == tok.size()) return false;
  for (; k < tok.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(tok[k]))) return false;
  out = std::strtoll(tok.c_str(), nullptr, 10);
  return true;
}

bool to_float(const std::string& tok, double& out) {
  char* end = nullptr;
  out = std::strtod(tok.c_str(), &end);
  return end == tok.c_str() + tok.size() && !tok.empty() && std::isfinite(out);
}

long long require_int(const Line& line, std::size_t k, const char* what) {
  long long v;
  if (!to_integer(line.tokens[k], v))
    fail_at(line.number, std::string(what) + " must be an integer, got '" + line.tokens[k] + "'");
  return v;
}

double require_float(const Line& line, std::size_t k, const char* what) {
  double v;
  if (!to_float(line.tokens[k], v))
    fail_at(line.number, std::string(what) + " expects a number, got '" + line.tokens[k] + "'");
  return v;
}

bool is_block_header(const Line& line) {
  if (line.tokens.size() != 2) return false;
  if (line.tokens[1] != "SP" && line.tokens[1] != "LR") return false;
  long long l;
  return to_integer(line.tokens[0], l);
}

struct MatrixBuilder {
  std::vector<Triplet> triplets;
  bool has_sp = false;
  bool has_lr = false;
  std::optional<LowRankFactor> lr;
};

}  // namespace

SdpInstance parse_hslr(std::string_view text, ParseDiagnostics* diag) {
  const std::vector<Line> lines = tokenize(text);
  std::size_t k = 0;
  auto next = [&]() -> const Line& {
    if (k >= lines.size())
      throw ParseError("line " + std::to_string(lines.empty() ? 1 : lines.back().number) +
                       ": unexpected end of file");
    return lines[k++];
  };

  // header: m n
  const Line& dims = next();
  if (dims.tokens.size() != 2)
    fail_at(dims.number, "expected the dimension pair 'm n'");
  const long long m = require_int(dims, 0, "constraint count m");
  const long long n = require_int(dims, 1, "matrix dimension n");
  if (m < 0) fail_at(dims.number, "constraint count m must be nonnegative");
  if (n < 1) fail_at(dims.number, "matrix dimension n must be positive");

  // b vector (one logical line with m entries; omitted entirely when m = 0)
  Vector b = Vector::Zero(m);
  if (m > 0) {
    const Line& bline = next();
    if (bline.tokens.size() != static_cast<std::size_t>(m))
      fail_at(bline.number, "right-hand side has " + std::to_string(bline.tokens.size()) +
                                " entries, expected " + std::to_string(m));
    for (long long i = 0; i < m; ++i)
      b[i] = require_float(bline, static_cast<std::size_t>(i), "right-hand side entry");
  }

  // trace bound
  const Line& tline = next();
  if (tline.tokens.size() != 1) fail_at(tline.number, "expected a single trace bound value");
  const double tau = require_float(tline, 0, "trace bound");
  if (!(tau > 0.0)) fail_at(tline.number, "trace bound must be positive");

  // matrix blocks
  std::map<long long, MatrixBuilder> builders;
  while (k < lines.size()) {
    const Line& header = lines[k];
    if (!is_block_header(header))
      fail_at(header.number, "expected a matrix block header 'ℓ SP' or 'ℓ LR', got '" +
                                 header.tokens[0] + (header.tokens.size() > 1 ? " " + header.tokens[1] : "") +
                                 "'");
    ++k;
    long long ell;
    to_integer(header.tokens[0], ell);
    if (ell < 0 || ell > m)
      fail_at(header.number, "matrix index " + std::to_string(ell) + " outside 0.." + std::to_string(m));
    const bool is_sp = header.tokens[1] == "SP";
    MatrixBuilder& mb = builders[ell];
    if (is_sp) {
      if (mb.has_sp) fail_at(header.number, "duplicate SP block for matrix " + std::to_string(ell));
      if (mb.has_lr)
        fail_at(header.number,
                "sparse block of matrix " + std::to_string(ell) + " must precede its low-rank block");
      mb.has_sp = true;
      while (k < lines.size() && !is_block_header(lines[k])) {
        const Line& t = lines[k++];
        if (t.tokens.size() != 3)
          fail_at(t.number, "sparse entry expects 'i j value', got " +
                                std::to_string(t.tokens.size()) + " tokens");
        const long long i = require_int(t, 0, "row index");
        const long long j = require_int(t, 1, "column index");
        const double v = require_float(t, 2, "entry value");
        if (i < 1 || j < 1 || i > n || j > n)
          fail_at(t.number, "index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside [1, " + std::to_string(n) + "]");
        if (i > j)
          fail_at(t.number, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") lies below the diagonal; only the upper triangle is stored");
        for (const Triplet& prev : mb.triplets)
          if (prev.i == i - 1 && prev.j == j - 1)
            fail_at(t.number, "duplicate triplet (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") in matrix " + std::to_string(ell));
        mb.triplets.push_back({i - 1, j - 1, v});
      }
    } else {
      if (mb.has_lr) fail_at(header.number, "duplicate LR block for matrix " + std::to_string(ell));
      mb.has_lr = true;
      std::vector<std::vector<double>> pcols, dcols;
      std::size_t first_line = header.number;
      while (k < lines.size() && !is_block_header(lines[k])) {
        const Line& t = lines[k++];
        first_line = t.number;
        std::vector<double> pcol, dcol;
        bool after_semi = false;
        for (std::size_t c = 0; c < t.tokens.size(); ++c) {
          if (t.tokens[c] == ";") {
            if (after_semi) fail_at(t.number, "more than one ';' in a low-rank column line");
            after_semi = true;
            continue;
          }
          double v;
          if (!to_float(t.tokens[c], v))
            fail_at(t.number, "low-rank entry expects a number, got '" + t.tokens[c] + "'");
          (after_semi ? dcol : pcol).push_back(v);
        }
        if (!after_semi)
          fail_at(t.number, "low-rank column line is missing the ';' separator");
        if (pcol.size() != static_cast<std::size_t>(n))
          fail_at(t.number, "low-rank column has " + std::to_string(pcol.size()) +
                                " P entries, expected n = " + std::to_string(n));
        pcols.push_back(std::move(pcol));
        dcols.push_back(std::move(dcol));
      }
      if (pcols.empty())
        fail_at(header.number, "low-rank block of matrix " + std::to_string(ell) + " has no columns");
      const std::size_t r = pcols.size();
      Matrix P(n, static_cast<Index>(r)), D(static_cast<Index>(r), static_cast<Index>(r));
      for (std::size_t c = 0; c < r; ++c) {
        if (dcols[c].size() != r)
          fail_at(first_line, "low-rank block of matrix " + std::to_string(ell) + " is ragged: a D column has " +
                                  std::to_string(dcols[c].size()) + " entries, expected " + std::to_string(r));
        for (long long i = 0; i < n; ++i) P(i, static_cast<Index>(c)) = pcols[c][static_cast<std::size_t>(i)];
        for (std::size_t i = 0; i < r; ++i) D(static_cast<Index>(i), static_cast<Index>(c)) = dcols[c][i];
      }
      const double scale = std::max(1.0, D.cwiseAbs().maxCoeff());
      if ((D - D.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
        fail_at(first_line, "assembled D of matrix " + std::to_string(ell) + " is not symmetric");
      mb.lr = LowRankFactor(std::move(P), std::move(D));
    }
  }

  SdpInstance inst;
  inst.m = m;
  inst.n = n;
  inst.b = std::move(b);
  inst.tau = tau;
  inst.mats.reserve(static_cast<std::size_t>(m) + 1);
  for (long long ell = 0; ell <= m; ++ell) {
    auto it = builders.find(ell);
    if (it == builders.end()) {
      if (diag)
        diag->warnings.push_back("matrix " + std::to_string(ell) +
                                 " is absent from the file; treated as zero");
      inst.mats.emplace_back(n);
      continue;
    }
    MatrixBuilder& mb = it->second;
    std::optional<SparseSym> sp;
    if (mb.has_sp) sp = SparseSym(n, std::move(mb.triplets));
    inst.mats.emplace_back(n, std::move(sp), std::move(mb.lr));
  }
  inst.validate();
  return inst;
}

std::string write_hslr(const SdpInstance& inst) {
  std::ostringstream os;
  os << "# m n\n" << inst.m << " " << inst.n << "\n";
  if (inst.m > 0) {
    os << "# b vector\n";
    for (Index i = 0; i < inst.m; ++i)
      os << numfmt::decimal(inst.b[i]) << (i + 1 < inst.m ? " " : "\n");
  }
  os << "# Trace bound\n" << numfmt::decimal(inst.tau) << "\n";
  for (Index ell = 0; ell <= inst.m; ++ell) {
    const HybridMatrix& A = inst.mats[static_cast<std::size_t>(ell)];
    if (A.is_zero()) continue;
    os << "\n# Matrix " << ell << "\n";
    if (A.sparse() && A.sparse()->nnz() > 0) {
      os << ell << " SP\n";
      A.sparse()->for_each([&](Index i, Index j, double v) {
        os << (i + 1) << " " << (j + 1) << " " << numfmt::decimal(v) << "\n";
      });
    }
    if (A.lowrank()) {
      const LowRankFactor& lr = *A.lowrank();
      os << ell << " LR\n";
      for (Index c = 0; c < lr.rank(); ++c) {
        for (Index i = 0; i < inst.n; ++i) os << numfmt::decimal(lr.P()(i, c)) << " ";
        os << ";";
        for (Index i = 0; i < lr.rank(); ++i) os << " " << numfmt::decimal(lr.D()(i, c));
        os << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace hallar::io
