#pragma once

#include <string>

#include "jmod/geometric.hpp"
#include "jmod/jacquet.hpp"
#include "jmod/verify.hpp"

#include <nlohmann/json_fwd.hpp>

namespace jmod {

std::string segment_text(const Segment& s);
std::string multisegment_text(const Multisegment& ms);
std::string formal_sum_text(const FormalSum& sum);
std::string levi_sum_text(const LeviSum& sum);
std::string verdict_text(const Verdict& v);

nlohmann::json segment_json(const Segment& s);
nlohmann::json multisegment_json(const Multisegment& ms);
nlohmann::json formal_sum_json(const FormalSum& sum);
nlohmann::json levi_sum_json(const LeviSum& sum);
nlohmann::json arrangement_sum_json(const ArrangementSum& sum);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json matrices_json(const std::vector<SplitMatrix>& ms);

}  // namespace jmod
