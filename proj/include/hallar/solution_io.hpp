#pragma once

#include <string>
#include <utility>

#include "hallar/hslr.hpp"
#include "hallar/types.hpp"

namespace hallar::io {

// Warm-start CSV: n rows, r comma-separated fields, no header. A start with
// ‖Y₀‖_F² > τ is rescaled onto the trace bound with a warning.
Matrix read_warm_start(const std::string& path, const SdpInstance& inst,
                       ParseDiagnostics* diag = nullptr);

// n lines of r comma-separated fields, shortest round-trip floats,
// no header and no embedded whitespace.
std::string primal_text(const Matrix& Y);
void write_primal(const Matrix& Y, const std::string& path);

// Single line: θ, then p₁ … p_m.
std::string dual_text(double theta, const Vector& p);
void write_dual(double theta, const Vector& p, const std::string& path);

// Read-back of the two output formats.
Matrix read_primal(const std::string& path);
std::pair<double, Vector> read_dual(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hallar::io
