#pragma once

#include <string>
#include <utility>
#include <vector>

#include "freecalc/cumulants.hpp"
#include "freecalc/moment_functional.hpp"
#include "freecalc/partition.hpp"
#include "freecalc/scalar.hpp"
#include "freecalc/series.hpp"

namespace freecalc {

enum class SequenceKind { kMoments, kCumulants };

/// {"order":N,"moments":["0","1",...]} or {"order":N,"cumulants":[...]}.
/// Values are exact rational strings; plain JSON integers are also accepted.
std::pair<SequenceKind, std::vector<Rational>> parse_sequence_json(const std::string& text);
std::string sequence_json(SequenceKind kind, const std::vector<Rational>& values);

/// {"scalar":"rational","moments":[{"word":["a","a","b"],"value":"3/2"},...]}.
MomentFunctional<Rational> parse_moment_table_json(const std::string& text);
std::string moment_table_json(const MomentFunctional<Rational>& phi);

/// {"n":5,"blocks":[[1,3,5],[2],[4]]}.
Partition partition_from_json(const std::string& text);
std::string partition_json(const Partition& p);

/// Freeness report with per-word mixed cumulant magnitudes.
std::string freeness_report_json(const FreenessReport<Rational>& report);
std::string freeness_report_json(const FreenessReport<Complex>& report);

}  // namespace freecalc
