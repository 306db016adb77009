#include "chctk/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace chctk {

CactusSeries cactus(const std::vector<RunRecord>& runs, TimeKind kind) {
  CactusSeries series;
  std::vector<BigRat> times;
  for (const auto& r : runs) {
    if (series.solver.empty()) series.solver = r.solver;
    if (!r.solved()) continue;
    times.push_back(kind == TimeKind::Cpu ? r.cpuSeconds : r.wallSeconds);
  }
  std::sort(times.begin(), times.end());
  series.points.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i)
    series.points.push_back({i + 1, std::move(times[i])});
  return series;
}

namespace {

std::string cell(const std::optional<BigRat>& value) {
  return value ? fixed2(*value) : "-";
}

std::string csvField(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted += "\"";
  return quoted;
}

std::string xmlEscape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* const kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

}  // namespace

std::string renderTable(const std::vector<ScoreCard>& cards,
                        const std::optional<VirtualBest>& anySolver) {
  std::ostringstream out;
  out << "| Solver | Score | #sat | #unsat | CPU time (s) | Wall-clock (s) | "
         "Speedup | SotAC |\n";
  out << "|---|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& c : cards) {
    std::string name = c.solver;
    if (c.horsConcours) name += " (HC)";
    out << "| " << name << " | " << c.score << " | " << c.numSat << " | "
        << c.numUnsat << " | " << cell(c.meanCpu) << " | " << cell(c.meanWall)
        << " | " << cell(c.speedup) << " | " << cell(c.sotac) << " |\n";
  }
  if (!cards.empty() && anySolver) {
    out << "| Any solver | " << anySolver->score << " | " << anySolver->numSat
        << " | " << anySolver->numUnsat << " | - | - | - | - |\n";
  }
  return out.str();
}

std::string cactusCsv(const std::vector<CactusSeries>& series) {
  std::ostringstream out;
  out << "solver,solved_count,time_seconds\n";
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      out << csvField(s.solver) << "," << p.solvedCount << ","
          << decimalString(p.timeSeconds) << "\n";
    }
  }
  return out.str();
}

std::string renderCactusSvg(const std::vector<CactusSeries>& series,
                            const SvgAxisConfig& config,
                            std::vector<std::string>* warnings) {
  std::vector<const CactusSeries*> drawable;
  for (const auto& s : series) {
    if (s.points.empty()) {
      if (warnings)
        warnings->push_back("series '" + s.solver +
                            "' has no points and was skipped");
      continue;
    }
    drawable.push_back(&s);
  }

  const double eps = config.epsilon > 0 ? config.epsilon : 0.01;
  double maxTime = eps;
  std::size_t maxCount = 1;
  for (const auto* s : drawable) {
    maxCount = std::max(maxCount, s->points.back().solvedCount);
    for (const auto& p : s->points)
      maxTime =
          std::max(maxTime, p.timeSeconds.convert_to<double>());
  }

  const double left = 64, right = 24, top = config.title.empty() ? 20 : 40,
               bottom = 48;
  const double plotW = config.width - left - right;
  const double plotH = config.height - top - bottom;

  auto xPos = [&](double count) {
    return left + plotW * (count / static_cast<double>(maxCount));
  };
  const double logMin = std::log10(eps);
  const double logMax = std::log10(maxTime);
  auto yPos = [&](double t) {
    double f;
    if (config.logTime) {
      double clamped = std::max(t, eps);
      f = logMax > logMin
              ? (std::log10(clamped) - logMin) / (logMax - logMin)
              : 0.0;
    } else {
      f = maxTime > 0 ? t / maxTime : 0.0;
    }
    return top + plotH * (1.0 - f);
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << config.width << "\" height=\"" << config.height << "\" viewBox=\"0 0 "
      << config.width << " " << config.height << "\">\n";
  out << "<rect width=\"" << config.width << "\" height=\"" << config.height
      << "\" fill=\"white\"/>\n";
  if (!config.title.empty()) {
    out << "<text x=\"" << fmt(left + plotW / 2)
        << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">"
        << xmlEscape(config.title) << "</text>\n";
  }

  // Axes.
  out << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top + plotH)
      << "\" x2=\"" << fmt(left + plotW) << "\" y2=\"" << fmt(top + plotH)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top) << "\" x2=\""
      << fmt(left) << "\" y2=\"" << fmt(top + plotH)
      << "\" stroke=\"black\"/>\n";

  // Ticks: five per axis.
  for (int i = 0; i <= 4; ++i) {
    const double countTick = maxCount * i / 4.0;
    const double x = xPos(countTick);
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(top + plotH)
        << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(top + plotH + 5)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(top + plotH + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << static_cast<long>(countTick) << "</text>\n";

    double timeTick;
    if (config.logTime) {
      timeTick = std::pow(10.0, logMin + (logMax - logMin) * i / 4.0);
    } else {
      timeTick = maxTime * i / 4.0;
    }
    const double y = yPos(timeTick);
    out << "<line x1=\"" << fmt(left - 5) << "\" y1=\"" << fmt(y) << "\" x2=\""
        << fmt(left) << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt(timeTick) << "</text>\n";
  }

  // Axis labels.
  out << "<text x=\"" << fmt(left + plotW / 2) << "\" y=\""
      << fmt(top + plotH + 36)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">solved benchmarks</text>\n";
  out << "<text x=\"14\" y=\"" << fmt(top + plotH / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 14 "
      << fmt(top + plotH / 2) << ")\">" << xmlEscape(config.timeLabel)
      << "</text>\n";

  // One polyline per series.
  for (std::size_t i = 0; i < drawable.size(); ++i) {
    const CactusSeries& s = *drawable[i];
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[i % kPaletteSize]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < s.points.size(); ++j) {
      if (j > 0) out << " ";
      out << fmt(xPos(static_cast<double>(s.points[j].solvedCount))) << ","
          << fmt(yPos(s.points[j].timeSeconds.convert_to<double>()));
    }
    out << "\"/>\n";
  }

  // Legend.
  for (std::size_t i = 0; i < drawable.size(); ++i) {
    const double y = top + 14 + 16 * static_cast<double>(i);
    out << "<rect x=\"" << fmt(left + 10) << "\" y=\"" << fmt(y - 8)
        << "\" width=\"14\" height=\"4\" fill=\""
        << kPalette[i % kPaletteSize] << "\"/>\n";
    out << "<text x=\"" << fmt(left + 30) << "\" y=\"" << fmt(y)
        << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << xmlEscape(drawable[i]->solver) << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace chctk
