#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "jlogic/logics.hpp"
#include "jlogic/proof.hpp"
#include "jlogic/semantics.hpp"

namespace jlogic {

// Malformed input file: bad JSON shape, unknown names, unparsable formulas.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"kind":"total"}
// {"kind":"schematic","map":{"c1":["jt","cl1"]}}
// {"kind":"finite","entries":[{"constant":"c1","formula":"..."}]}
// Entries are validated against `logic`.
[[nodiscard]] ConstantSpec cs_from_json(const nlohmann::json& j, LogicId logic);
[[nodiscard]] nlohmann::json cs_to_json(const ConstantSpec& cs);

// {"logic":"LP","cs":{...},"worlds":["w0"],"R":[["w0","w0"]],
//  "base":[{"term":"x1","formula":"p1","world":"w0"}],
//  "valuation":[{"world":"w0","atom":"p1"}]}
// Only the shape is checked here; frame conditions are validate_model's job.
[[nodiscard]] FinitaryModel model_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json model_to_json(const FinitaryModel& m);

// {"logic":"J","cs":{...},"lines":[{"formula":"...","rule":"axiom:cl1"}]}
// with rules "axiom:<id>", "mp:<i>,<j>" and "an:c<k>,<n>,<formula>".
[[nodiscard]] Proof proof_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json proof_to_json(const Proof& p);

// Reads and parses a JSON file; throws FormatError on I/O or syntax errors.
[[nodiscard]] nlohmann::json read_json_file(const std::string& path);

}  // namespace jlogic
