// Copyright 2026 The qloop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qloop/inspect.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <utility>

#include "qloop/error.hpp"

namespace qloop::inspect {

namespace {

std::string fixed(double value, int decimals) {
  // Keep "-0.000000" out of the output.
  const double unit = 0.5 * std::pow(10.0, -decimals);
  if (std::abs(value) < unit) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string render_kets(std::uint64_t basis, std::uint32_t width, const FormatSpec &spec) {
  std::string out;
  std::uint32_t consumed = 0;
  for (const FormatGroup &g : spec.groups) {
    const std::uint32_t shift = width - consumed - g.length;
    const std::uint64_t value = (basis >> shift) & ((std::uint64_t{1} << g.length) - 1);
    out += "|";
    if (g.base == GroupBase::Binary) {
      for (std::uint32_t b = g.length; b-- > 0;) out += ((value >> b) & 1U) ? '1' : '0';
    } else {
      out += std::to_string(value);
    }
    out += "⟩";
    consumed += g.length;
  }
  return out;
}

}  // namespace

FormatSpec parse_format(std::string_view spec) {
  FormatSpec out;
  if (spec.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = spec.find(':', start);
    const std::string_view token =
        spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (token.size() < 2) throw BadFormat("bad group '" + std::string(token) + "'");
    FormatGroup group;
    switch (token[0]) {
      case 'b': group.base = GroupBase::Binary; break;
      case 'i': group.base = GroupBase::UnsignedInt; break;
      default:
        throw BadFormat("unknown base letter '" + std::string(1, token[0]) + "' in '" +
                        std::string(spec) + "'");
    }
    const std::string_view digits = token.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), group.length);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || group.length == 0) {
      throw BadFormat("group length must be a positive integer in '" + std::string(token) + "'");
    }
    out.groups.push_back(group);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::optional<SqrtFraction> recognize_sqrt_fraction(Amplitude amplitude) {
  if (std::abs(amplitude.imag()) > kRecognizeTolerance) return std::nullopt;
  const double x = std::abs(amplitude.real());
  if (!(x > 0.0) || !std::isfinite(x)) return std::nullopt;

  // b ~ a^2 / x^2 grows with a, so the first a that matches has the
  // smallest b.
  for (std::uint32_t a = 1; a <= kMaxNumerator; ++a) {
    const double exact_b = static_cast<double>(a) * a / (x * x);
    if (exact_b > static_cast<double>(kMaxDenominator) + 1.0) break;
    const auto centre = static_cast<std::int64_t>(std::llround(exact_b));
    for (std::int64_t b = centre - 1; b <= centre + 1; ++b) {
      if (b < 1 || b > static_cast<std::int64_t>(kMaxDenominator)) continue;
      if (std::abs(x - a / std::sqrt(static_cast<double>(b))) < kRecognizeTolerance) {
        return SqrtFraction{amplitude.real() < 0.0, a, static_cast<std::uint64_t>(b)};
      }
    }
  }
  return std::nullopt;
}

std::string show(const DumpData &dump, const FormatSpec &spec) {
  const auto width = static_cast<std::uint32_t>(dump.qubits.size());
  FormatSpec layout = spec;
  if (layout.groups.empty()) layout.groups.push_back({GroupBase::Binary, width});
  const std::uint64_t covered = std::accumulate(
      layout.groups.begin(), layout.groups.end(), std::uint64_t{0},
      [](std::uint64_t acc, const FormatGroup &g) { return acc + g.length; });
  if (covered != width) {
    throw BadFormat("format covers " + std::to_string(covered) + " qubits, dump has " +
                    std::to_string(width));
  }

  std::string out;
  for (const BasisAmplitude &entry : dump.basis_states) {
    if (!out.empty()) out += '\n';
    const Amplitude amp = entry.amplitude;
    out += render_kets(entry.basis, width, layout);
    out += " (" + fixed(100.0 * std::norm(amp), 2) + "%)\n";

    const double re = std::abs(amp.real()) <= kRecognizeTolerance ? 0.0 : amp.real();
    out += " " + fixed(re, 6);
    if (std::abs(amp.imag()) > kRecognizeTolerance) {
      out += amp.imag() < 0.0 ? " - " : " + ";
      out += fixed(std::abs(amp.imag()), 6) + "i";
    }
    if (auto frac = recognize_sqrt_fraction(amp)) {
      out += "\t≅\t";
      if (frac->negative) out += "-";
      out += std::to_string(frac->numerator) + "/√" + std::to_string(frac->denominator);
    }
  }
  return out;
}

BlochCoords bloch_coords(const DumpData &dump) {
  if (dump.qubits.size() != 1) {
    throw WrongArity("Bloch coordinates need a one-qubit dump, got " +
                     std::to_string(dump.qubits.size()) + " qubits");
  }
  const Amplitude alpha = dump.amplitude(0);
  const Amplitude beta = dump.amplitude(1);
  const Amplitude cross = std::conj(alpha) * beta;
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(alpha) - std::norm(beta)};
}

std::string format_bloch(const BlochCoords &c) {
  return "x=" + fixed(c.x, 6) + " y=" + fixed(c.y, 6) + " z=" + fixed(c.z, 6);
}

std::string bloch_svg(const BlochCoords &c) {
  // Oblique projection: x axis points down-left, y right, z up.
  constexpr double kCentre = 160.0;
  constexpr double kRadius = 120.0;
  constexpr double kDepth = 0.35;
  auto project = [&](double x, double y, double z) {
    return std::pair{kCentre + kRadius * (y - kDepth * x), kCentre - kRadius * (z - kDepth * x)};
  };
  auto line = [&](std::ostringstream &os, std::pair<double, double> from,
                  std::pair<double, double> to, const char *style) {
    os << "  <line x1=\"" << from.first << "\" y1=\"" << from.second << "\" x2=\"" << to.first
       << "\" y2=\"" << to.second << "\" " << style << "/>\n";
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"320\" height=\"320\" "
        "viewBox=\"0 0 320 320\">\n";
  os << "  <circle cx=\"" << kCentre << "\" cy=\"" << kCentre << "\" r=\"" << kRadius
     << "\" fill=\"none\" stroke=\"#888\"/>\n";
  os << "  <ellipse cx=\"" << kCentre << "\" cy=\"" << kCentre << "\" rx=\"" << kRadius
     << "\" ry=\"" << kRadius * kDepth << "\" fill=\"none\" stroke=\"#bbb\" "
     << "stroke-dasharray=\"4 3\"/>\n";
  const char *axis = "stroke=\"#bbb\"";
  line(os, project(-1, 0, 0), project(1, 0, 0), axis);
  line(os, project(0, -1, 0), project(0, 1, 0), axis);
  line(os, project(0, 0, -1), project(0, 0, 1), axis);
  const auto [tx, ty] = project(c.x, c.y, c.z);
  line(os, project(0, 0, 0), {tx, ty}, "stroke=\"#c0392b\" stroke-width=\"3\"");
  os << "  <circle cx=\"" << tx << "\" cy=\"" << ty << "\" r=\"5\" fill=\"#c0392b\"/>\n";
  const auto [zx, zy] = project(0, 0, 1.12);
  const auto [nx, ny] = project(0, 0, -1.12);
  os << "  <text x=\"" << zx << "\" y=\"" << zy << "\" text-anchor=\"middle\">|0⟩</text>\n";
  os << "  <text x=\"" << nx << "\" y=\"" << ny + 12
     << "\" text-anchor=\"middle\">|1⟩</text>\n";
  os << "  <text x=\"10\" y=\"310\">" << format_bloch(c) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace qloop::inspect
