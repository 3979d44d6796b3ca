#include "hallar/sdpa.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace hallar::io {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

// Commas, braces, and parentheses count as whitespace; '"' and '*' open a
// comment line.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line_no = 1;
  std::string tok;
  bool in_comment = false;
  auto flush = [&]() {
    if (!tok.empty()) {
      out.push_back({tok, line_no});
      tok.clear();
    }
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      ++line_no;
      continue;
    }
    if (in_comment) continue;
    if ((c == '"' || c == '*') && tok.empty()) {
      in_comment = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}' ||
        c == '(' || c == ')') {
      flush();
    } else {
      tok.push_back(c);
    }
  }
  flush();
  return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool done() const { return k_ >= toks_.size(); }
  std::size_t line() const { return done() ? (toks_.empty() ? 1 : toks_.back().line) : toks_[k_].line; }

  long long next_int(const char* what) {
    const Token& t = next(what);
    char* end = nullptr;
    const long long v = std::strtoll(t.text.c_str(), &end, 10);
    if (end != t.text.c_str() + t.text.size())
      fail_at(t.line, std::string(what) + " must be an integer, got '" + t.text + "'");
    return v;
  }

  double next_float(const char* what) {
    const Token& t = next(what);
    char* end = nullptr;
    const double v = std::strtod(t.text.c_str(), &end);
    if (end != t.text.c_str() + t.text.size() || !std::isfinite(v))
      fail_at(t.line, std::string(what) + " expects a number, got '" + t.text + "'");
    return v;
  }

 private:
  const Token& next(const char* what) {
    if (done()) fail_at(line(), std::string("unexpected end of file while reading ") + what);
    return toks_[k_++];
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

}  // namespace

SdpaProblem parse_sdpa(std::string_view text) {
  TokenStream ts(tokenize(text));

  const long long m = ts.next_int("the constraint count");
  if (m < 0) fail_at(ts.line(), "malformed header: constraint count is negative");
  const long long nblocks = ts.next_int("the block count");
  if (nblocks < 1) fail_at(ts.line(), "malformed header: block count must be ≥ 1");

  std::vector<long long> bsizes(static_cast<std::size_t>(nblocks));
  std::vector<long long> offsets(static_cast<std::size_t>(nblocks));
  long long n = 0;
  for (long long k = 0; k < nblocks; ++k) {
    const long long s = ts.next_int("a block size");
    if (s == 0) fail_at(ts.line(), "malformed header: zero block size");
    bsizes[static_cast<std::size_t>(k)] = s;
    offsets[static_cast<std::size_t>(k)] = n;
    n += std::llabs(s);
  }

  Vector b(m);
  for (long long i = 0; i < m; ++i) b[i] = ts.next_float("a right-hand side entry");

  std::vector<std::vector<Triplet>> trips(static_cast<std::size_t>(m) + 1);
  while (!ts.done()) {
    const std::size_t line = ts.line();
    const long long matno = ts.next_int("a matrix number");
    const long long blkno = ts.next_int("a block number");
    const long long i = ts.next_int("a row index");
    const long long j = ts.next_int("a column index");
    const double v = ts.next_float("an entry value");
    if (matno < 0 || matno > m)
      fail_at(line, "matrix number " + std::to_string(matno) + " outside 0.." + std::to_string(m));
    if (blkno < 1 || blkno > nblocks)
      fail_at(line, "block number " + std::to_string(blkno) + " outside 1.." + std::to_string(nblocks));
    const long long bs = bsizes[static_cast<std::size_t>(blkno - 1)];
    const long long extent = std::llabs(bs);
    if (i < 1 || j < 1 || i > extent || j > extent)
      fail_at(line, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") outside block " + std::to_string(blkno) + " of size " + std::to_string(extent));
    if (i > j) fail_at(line, "lower-triangle entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (bs < 0 && i != j)
      fail_at(line, "off-diagonal entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") in diagonal block " + std::to_string(blkno));
    const long long off = offsets[static_cast<std::size_t>(blkno - 1)];
    for (const Triplet& prev : trips[static_cast<std::size_t>(matno)])
      if (prev.i == off + i - 1 && prev.j == off + j - 1)
        fail_at(line, "duplicate entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") in matrix " + std::to_string(matno) + ", block " + std::to_string(blkno));
    trips[static_cast<std::size_t>(matno)].push_back({off + i - 1, off + j - 1, v});
  }

  SdpaProblem prob;
  prob.m = m;
  prob.n = n;
  prob.b = std::move(b);
  prob.mats.reserve(static_cast<std::size_t>(m) + 1);
  for (auto& t : trips) {
    std::optional<SparseSym> sp;
    if (!t.empty()) sp = SparseSym(n, std::move(t));
    prob.mats.emplace_back(n, std::move(sp), std::nullopt);
  }
  return prob;
}

SdpInstance with_trace_bound(SdpaProblem prob, double trace_bound) {
  if (!(trace_bound > 0.0))
    throw std::invalid_argument("trace bound must be positive");
  SdpInstance inst;
  inst.m = prob.m;
  inst.n = prob.n;
  inst.b = std::move(prob.b);
  inst.tau = trace_bound;
  inst.mats = std::move(prob.mats);
  inst.validate();
  return inst;
}

}  // namespace hallar::io
