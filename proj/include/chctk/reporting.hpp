#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chctk/evaluation.hpp"

namespace chctk {

enum class TimeKind { Cpu, Wall };

struct CactusPoint {
  std::size_t solvedCount = 0;  // 1-based cumulative count
  BigRat timeSeconds = 0;
};

/// Sorted solve times of one solver: the k-th point pairs k with the k-th
/// smallest time, so the series is a non-decreasing step function.
struct CactusSeries {
  std::string solver;
  std::vector<CactusPoint> points;
};

CactusSeries cactus(const std::vector<RunRecord>& runsForOneSolver,
                    TimeKind kind);

/// Markdown scoreboard, one row per card in the given (rank) order.
/// Hors-Concours rows are annotated "(HC)", time/ratio columns round to two
/// decimals, absent values render as "-". When cards are present, a final
/// "Any solver" row carries the virtual-best score/#sat/#unsat.
std::string renderTable(const std::vector<ScoreCard>& rankedCards,
                        const std::optional<VirtualBest>& anySolver);

/// CSV with header solver,solved_count,time_seconds (RFC-4180 quoting).
std::string cactusCsv(const std::vector<CactusSeries>& series);

struct SvgAxisConfig {
  bool logTime = false;
  /// Times at or below zero are clamped to this before log scaling.
  double epsilon = 0.01;
  int width = 840;
  int height = 520;
  std::string timeLabel = "time (s)";
  std::string title;
};

/// Standalone SVG 1.1 cactus plot: one polyline per solver plus a legend.
/// Series without points are skipped and reported through `warnings`.
/// Output is byte-deterministic for fixed input.
std::string renderCactusSvg(const std::vector<CactusSeries>& series,
                            const SvgAxisConfig& config,
                            std::vector<std::string>* warnings = nullptr);

}  // namespace chctk
