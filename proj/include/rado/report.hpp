#pragma once

#include <json.hpp>

#include "rado/coloring.hpp"
#include "rado/diffgraph.hpp"
#include "rado/extraction.hpp"
#include "rado/recoloring.hpp"
#include "rado/search.hpp"

namespace rado {

// JSON report builders. Key order is fixed at insertion, so identical inputs
// produce byte-identical documents; wall-clock timing lives in one top-level
// field callers may strip.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "rado-report-v1";

Json report_header(const std::string& command);
Json to_json(const SolutionWitness& w);
Json to_json(const ValidationResult& r);
Json to_json(const ColorClassStats& s);
Json to_json(const ChainStep& s);
Json to_json(const ExtractionOutcome& e);
Json to_json(const ShiftIntersection& s);
Json to_json(const PipelineReport& p);
Json to_json(const MoveRecord& m);
Json to_json(const WitnessReport& w);
Json to_json(const SearchResult& s);
Json to_json(const CandidateSetsResult& c);

}  // namespace rado
