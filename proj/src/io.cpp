#include "jlogic/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace jlogic {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw FormatError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
    return v;
}

template <class F>
auto with_context(const std::string& context, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw FormatError(context + ": " + e.what());
    }
}

Formula formula_of(const std::string& text) {
    return with_context("formula '" + text + "'", [&] { return parse_formula(text); });
}

Term term_of(const std::string& text) {
    return with_context("term '" + text + "'", [&] { return parse_term(text); });
}

std::uint32_t number_of(std::string_view text, const std::string& what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError("bad " + what + " '" + std::string(text) + "'");
    }
    return v;
}

// "c<k>" -> k
std::uint32_t constant_of(const std::string& text) {
    Term t = term_of(text);
    if (t.kind() != Kind::Constant) throw FormatError("'" + text + "' is not a constant");
    return t.index();
}

LogicId logic_of(const json& j) {
    try {
        return parse_logic(string_field(j, "logic"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
    return out;
}

}  // namespace

ConstantSpec cs_from_json(const json& j, LogicId logic) {
    const std::string kind = string_field(j, "kind");
    ConstantSpec cs;
    if (kind == "total") {
        cs = TotalCS{};
    } else if (kind == "schematic") {
        const json& map = field(j, "map");
        if (!map.is_object()) throw FormatError("schematic 'map' must be an object");
        SchematicCS sch;
        for (const auto& [name, ids] : map.items()) {
            if (!ids.is_array()) throw FormatError("schematic entry for " + name + " must be an array");
            auto& list = sch.map[constant_of(name)];
            for (const auto& id : ids) {
                if (!id.is_string()) throw FormatError("scheme ids must be strings");
                list.push_back(id.get<std::string>());
            }
        }
        cs = std::move(sch);
    } else if (kind == "finite") {
        FiniteCS fin;
        for (const auto& e : array_field(j, "entries")) {
            fin.entries.emplace_back(constant_of(string_field(e, "constant")),
                                     formula_of(string_field(e, "formula")));
        }
        cs = std::move(fin);
    } else {
        throw FormatError("unknown constant specification kind '" + kind + "'");
    }
    if (auto errors = validate_cs(cs, logic); !errors.empty()) throw FormatError(join(errors));
    return cs;
}

json cs_to_json(const ConstantSpec& cs) {
    if (std::holds_alternative<TotalCS>(cs)) return {{"kind", "total"}};
    if (const auto* sch = std::get_if<SchematicCS>(&cs)) {
        json map = json::object();
        for (const auto& [c, ids] : sch->map) map["c" + std::to_string(c)] = ids;
        return {{"kind", "schematic"}, {"map", map}};
    }
    json entries = json::array();
    for (const auto& [c, f] : std::get<FiniteCS>(cs).entries) {
        entries.push_back({{"constant", "c" + std::to_string(c)}, {"formula", print_formula(f)}});
    }
    return {{"kind", "finite"}, {"entries", entries}};
}

FinitaryModel model_from_json(const json& j) {
    FinitaryModel m;
    m.logic = logic_of(j);
    m.cs = j.contains("cs") ? cs_from_json(j.at("cs"), m.logic) : ConstantSpec{TotalCS{}};
    for (const auto& w : array_field(j, "worlds")) {
        if (!w.is_string()) throw FormatError("world names must be strings");
        m.worlds.push_back(w.get<std::string>());
    }
    auto world = [&](const json& v) {
        if (!v.is_string()) throw FormatError("world references must be strings");
        auto id = m.world_index(v.get<std::string>());
        if (!id) throw FormatError("unknown world '" + v.get<std::string>() + "'");
        return *id;
    };
    if (j.contains("R")) {
        for (const auto& pair : array_field(j, "R")) {
            if (!pair.is_array() || pair.size() != 2) throw FormatError("R entries must be pairs");
            m.r.insert({world(pair[0]), world(pair[1])});
        }
    }
    if (j.contains("base")) {
        for (const auto& e : array_field(j, "base")) {
            m.base.push_back({term_of(string_field(e, "term")), formula_of(string_field(e, "formula")),
                              world(field(e, "world"))});
        }
    }
    if (j.contains("valuation")) {
        for (const auto& e : array_field(j, "valuation")) {
            Formula a = formula_of(string_field(e, "atom"));
            if (a.kind() != Kind::Atom) throw FormatError("valuation entries must name atoms");
            m.valuation.insert({world(field(e, "world")), a.index()});
        }
    }
    return m;
}

json model_to_json(const FinitaryModel& m) {
    json r = json::array();
    for (const auto& [u, v] : m.r) r.push_back({m.worlds.at(u), m.worlds.at(v)});
    json base = json::array();
    for (const auto& t : m.base) {
        base.push_back({{"term", print_term(t.term)},
                        {"formula", print_formula(t.formula)},
                        {"world", m.worlds.at(t.world)}});
    }
    json valuation = json::array();
    for (const auto& [w, a] : m.valuation) {
        valuation.push_back({{"world", m.worlds.at(w)}, {"atom", "p" + std::to_string(a)}});
    }
    return {{"logic", std::string(logic_name(m.logic))},
            {"cs", cs_to_json(m.cs)},
            {"worlds", m.worlds},
            {"R", r},
            {"base", base},
            {"valuation", valuation}};
}

Proof proof_from_json(const json& j) {
    Proof p{logic_of(j), TotalCS{}, {}};
    if (j.contains("cs")) p.cs = cs_from_json(j.at("cs"), p.logic);
    std::size_t number = 0;
    for (const auto& line : array_field(j, "lines")) {
        ++number;
        const std::string where = "line " + std::to_string(number);
        Formula f = with_context(where, [&] { return parse_formula(string_field(line, "formula")); });
        const std::string rule = string_field(line, "rule");
        const auto colon = rule.find(':');
        if (colon == std::string::npos) throw FormatError(where + ": bad rule '" + rule + "'");
        const std::string name = rule.substr(0, colon);
        const std::string args = rule.substr(colon + 1);
        if (name == "axiom") {
            p.lines.push_back({f, AxiomStep{args}});
        } else if (name == "mp") {
            const auto comma = args.find(',');
            if (comma == std::string::npos) throw FormatError(where + ": mp needs two line numbers");
            p.lines.push_back({f, MpStep{number_of(args.substr(0, comma), "line number"),
                                         number_of(args.substr(comma + 1), "line number")}});
        } else if (name == "an") {
            const auto first = args.find(',');
            const auto second = first == std::string::npos ? first : args.find(',', first + 1);
            if (second == std::string::npos) {
                throw FormatError(where + ": an needs constant, n and formula");
            }
            std::uint32_t c = constant_of(args.substr(0, first));
            std::uint32_t n = number_of(args.substr(first + 1, second - first - 1), "bang count");
            Formula base = with_context(where, [&] { return parse_formula(args.substr(second + 1)); });
            p.lines.push_back({f, AnStep{c, base, n}});
        } else {
            throw FormatError(where + ": unknown rule '" + name + "'");
        }
    }
    return p;
}

json proof_to_json(const Proof& p) {
    json lines = json::array();
    for (const auto& line : p.lines) {
        std::string rule;
        if (const auto* ax = std::get_if<AxiomStep>(&line.justification)) {
            rule = "axiom:" + ax->scheme_id;
        } else if (const auto* mp = std::get_if<MpStep>(&line.justification)) {
            rule = "mp:" + std::to_string(mp->minor) + "," + std::to_string(mp->major);
        } else {
            const auto& an = std::get<AnStep>(line.justification);
            rule = "an:c" + std::to_string(an.constant) + "," + std::to_string(an.n) + "," +
                   print_formula(an.base);
        }
        lines.push_back({{"formula", print_formula(line.formula)}, {"rule", rule}});
    }
    return {{"logic", std::string(logic_name(p.logic))}, {"cs", cs_to_json(p.cs)}, {"lines", lines}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw FormatError("'" + path + "': " + e.what());
    }
}

}  // namespace jlogic
