#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "casson/cohomology.hpp"
#include "casson/splice.hpp"
#include "casson/torusop.hpp"

namespace casson::cli {

/// Recorded in every output so a run can be reproduced. Thread count is not serialized:
/// results do not depend on it, and leaving it out keeps output bytes machine-independent.
struct RunMeta {
    std::string command;
    std::uint64_t seed = 0;
    double tol_rank = kTolRank;
    double tol_mat = kTolMat;
    int threads = 1;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

nlohmann::json to_json(const RunMeta& meta);
nlohmann::json to_json(const IsolatedRep& rep);
IsolatedRep isolated_from_json(const nlohmann::json& j);
bool identical(const IsolatedRep& a, const IsolatedRep& b);

nlohmann::json catalog_json(const EnumerationResult& result, const RunMeta& meta);
std::vector<IsolatedRep> catalog_from_json(const nlohmann::json& j);
std::string catalog_csv(const EnumerationResult& result);

struct CohomologyRow {
    CohomologyDims dims;
    CohomologyDims expected;
};

std::string cohomology_csv(const std::vector<CohomologyRow>& rows);
std::string spectrum_csv(const std::vector<FourierModeBlock>& blocks);

/// Pillowcase [0,1/2]×[0,1] with the abelian edge and every Klassen arc, 256 samples per arc.
std::string pillowcase_svg(int q);

}  // namespace casson::cli
