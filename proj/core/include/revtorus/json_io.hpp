#pragma once

#include <nlohmann/json.hpp>

#include "revtorus/dynamics.hpp"
#include "revtorus/int_matrix.hpp"
#include "revtorus/involution.hpp"
#include "revtorus/pell.hpp"
#include "revtorus/reversor_search.hpp"

namespace revtorus {

// Matrices serialize as [["a","b"],["c","d"]] with decimal-string entries so
// magnitudes are unbounded; readers also accept plain JSON integers.

nlohmann::json to_json(const IntMatrix2& m);
IntMatrix2 matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InvolutionClass& cls);  // {"branch": ..., "params": {...}}
nlohmann::json to_json(const FixedLine& line);

nlohmann::json to_json(const PellProblem& p);
nlohmann::json to_json(const PellSolution& s);
nlohmann::json to_json(const PellSolutionSet& set);

nlohmann::json to_json(const ObstructionRecord& rec);
nlohmann::json to_json(const ReversorReport& report);

nlohmann::json to_json(const LyapunovEstimate& est);
nlohmann::json to_json(const ReversibilityResidual& res);
nlohmann::json to_json(const SplittingEstimate& est);
nlohmann::json to_json(const IntegratedExponentEstimate& est);
nlohmann::json to_json(const FreeOrbitVerdict& verdict);
nlohmann::json to_json(const FixSet& fs);

}  // namespace revtorus
