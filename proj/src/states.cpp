#include "ctxfer/states.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "ctxfer/errors.hpp"

namespace ctxfer {

CVec3 make_nf(const PathVectorTable& table) {
  // The kernel of {<D1|, <D2|} in dimension 3 is the conjugated cross
  // product of the two bra vectors.
  const CVec3 a = table.path(PathId::D1).conjugated();
  const CVec3 b = table.path(PathId::D2).conjugated();
  CVec3 n(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]);
  if (n.norm() < 1e-9)
    throw DegenerateKernel("dark-port vectors are parallel; path table is broken");
  n = n.normalized();
  // Fix the global phase: <1|N_f> real positive.
  if (std::abs(n[0]) > 1e-12) n = (std::conj(n[0]) / std::abs(n[0])) * n;
  return n;
}

double path_probability(const DensityMatrix& rho, const PathVectorTable& table,
                        PathId i) {
  const double raw = rho.expectation(table.path(i));
  if (raw < -1e-12)
    throw NegativeProbability("path probability " + std::string(path_name(i)) +
                              " = " + std::to_string(raw));
  return std::min(1.0, std::max(0.0, raw));
}

ProbabilityTable probability_table(const DensityMatrix& rho,
                                   const PathVectorTable& table) {
  ProbabilityTable out;
  for (int i = 0; i < kPathCount; ++i)
    out.p[static_cast<std::size_t>(i)] =
        path_probability(rho, table, static_cast<PathId>(i));
  for (const Context& ctx : contexts()) {
    const double sum =
        out.at(ctx.members[0]) + out.at(ctx.members[1]) + out.at(ctx.members[2]);
    if (std::abs(sum - 1.0) > 1e-9)
      throw ContextSumViolation("context probabilities sum to " +
                                std::to_string(sum));
  }
  return out;
}

NfClosedForms nf_closed_forms(const InterferometerConfig& config) {
  const double r1 = config.r1;
  const double r2 = config.r2;
  const double d = 1.0 - r1 * r2;
  NfClosedForms out;
  out.p1 = r2 * (1.0 - r1) / d;
  out.p2 = r1 * (1.0 - r2) / d;
  out.p3 = (1.0 - r1) * (1.0 - r2) / d;
  out.pf = r1 * r2 * (1.0 - r1) * (1.0 - r2) /
           (d * (1.0 - (1.0 - r1) * (1.0 - r2)));
  if (std::abs(out.pf - config.rs1 * out.p1) > 1e-12)
    throw Error("closed-form identity pf = rs1*p1 violated");
  return out;
}

namespace {

double parse_real(const std::string& text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size())
    throw ParseError("bad number '" + text + "'");
  return value;
}

Cx parse_complex(std::string text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw ParseError("empty amplitude");

  const char tail = compact.back();
  if (tail != 'i' && tail != 'j') return Cx(parse_real(compact), 0.0);

  std::string body = compact.substr(0, compact.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Cx(0.0, parse_real(body));
  return Cx(parse_real(body.substr(0, split)), parse_real(body.substr(split)));
}

}  // namespace

CVec3 parse_amplitudes(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() != 3)
    throw ParseError("expected 3 comma-separated amplitudes, got " +
                     std::to_string(parts.size()));
  CVec3 psi(parse_complex(parts[0]), parse_complex(parts[1]),
            parse_complex(parts[2]));
  if (psi.norm() < 1e-9) throw ZeroNorm("amplitude list has zero norm");
  return psi.normalized();
}

DensityMatrix parse_state_amplitudes(const std::string& text) {
  return pure_density(parse_amplitudes(text));
}

}  // namespace ctxfer
