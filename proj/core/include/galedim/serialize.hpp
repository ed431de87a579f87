#pragma once

#include <string>

#include "json.hpp"

#include "galedim/bias.hpp"
#include "galedim/fsg.hpp"
#include "galedim/gale.hpp"
#include "galedim/predictor.hpp"
#include "galedim/regularity.hpp"
#include "galedim/selfsimilar.hpp"

namespace galedim {

// Bias schedules: {"type":"constant","beta":"1/4"},
// {"type":"periodic"|"table","values":[...]},
// {"type":"tower","kappa_even":"p/q","kappa_odd":"p/q"}. Custom schedules
// serialize with their label but cannot be loaded back.
nlohmann::json bias_to_json(const BiasSequence& beta);
BiasSequence bias_from_json(const nlohmann::json& j);

// Gales: {"s": number|"p/q", "kind":"gale"|"supergale", "rule": {...}} with
// rule types constant, measure, cover, table.
nlohmann::json gale_to_json(const SGale& g);
SGale gale_from_json(const nlohmann::json& j);

nlohmann::json fsg_to_json(const FiniteStateGambler& g);
FiniteStateGambler fsg_from_json(const nlohmann::json& j);

nlohmann::json predictor_to_json(const Predictor& pi);
PredictorPtr predictor_from_json(const nlohmann::json& j);

// A self-similar system is a JSON array of bit-strings.
nlohmann::json system_to_json(const SelfSimilarSystem& sys);
SelfSimilarSystem system_from_json(const nlohmann::json& j);

nlohmann::json regularity_to_json(const RegularitySpec& spec);
RegularitySpec regularity_from_json(const nlohmann::json& j);

enum class ObjectKind { gale, fsg, predictor };
// Heuristic: "rule" key -> gale; "states" -> fsg; "type" -> predictor.
ObjectKind detect_object(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace galedim
