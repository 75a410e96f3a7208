#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "corpus.hpp"
#include "jlogic/io.hpp"

using namespace jlogic;
using nlohmann::json;

TEST(CsJson, Kinds) {
    EXPECT_EQ(cs_from_json(json::parse(R"j({"kind":"total"})j"), LogicId::J), ConstantSpec{TotalCS{}});
    const ConstantSpec sch =
        cs_from_json(json::parse(R"j({"kind":"schematic","map":{"c1":["jt","cl1"]}})j"), LogicId::LP);
    EXPECT_EQ(sch, ConstantSpec(SchematicCS{{{1, {"jt", "cl1"}}}}));
    const ConstantSpec fin = cs_from_json(
        json::parse(R"j({"kind":"finite","entries":[{"constant":"c2","formula":"p1 -> (p1 -> p1)"}]})j"),
        LogicId::J);
    EXPECT_EQ(fin, ConstantSpec(FiniteCS{{{2, parse_formula("p1 -> (p1 -> p1)")}}}));
    for (const ConstantSpec& cs : {ConstantSpec{TotalCS{}}, sch, fin}) {
        EXPECT_EQ(cs_from_json(cs_to_json(cs), LogicId::LP), cs);
    }
}

TEST(CsJson, Errors) {
    EXPECT_THROW((void)cs_from_json(json::parse(R"j({"kind":"bogus"})j"), LogicId::J), FormatError);
    EXPECT_THROW((void)cs_from_json(json::parse(R"j({})j"), LogicId::J), FormatError);
    EXPECT_THROW((void)cs_from_json(json::parse(R"j({"kind":"schematic","map":{"c1":["jt"]}})j"),
                                    LogicId::J),
                 FormatError);
    EXPECT_THROW((void)cs_from_json(json::parse(R"j({"kind":"schematic","map":{"x1":["cl1"]}})j"),
                                    LogicId::J),
                 FormatError);
    EXPECT_THROW(
        (void)cs_from_json(
            json::parse(R"j({"kind":"finite","entries":[{"constant":"c1","formula":"p1 -> p1"}]})j"),
            LogicId::J),
        FormatError);
    EXPECT_THROW(
        (void)cs_from_json(
            json::parse(R"j({"kind":"finite","entries":[{"constant":"c1","formula":"p1 ->"}]})j"),
            LogicId::J),
        FormatError);
}

TEST(ModelJson, ReadsTheDocumentedShape) {
    const FinitaryModel m = model_from_json(json::parse(R"j({
        "logic": "LP",
        "cs": {"kind": "total"},
        "worlds": ["w0", "w1"],
        "R": [["w0", "w0"], ["w1", "w1"], ["w0", "w1"]],
        "base": [{"term": "x1", "formula": "p1", "world": "w0"}],
        "valuation": [{"world": "w0", "atom": "p1"}, {"world": "w1", "atom": "p1"}]
    })j"));
    EXPECT_EQ(m.logic, LogicId::LP);
    EXPECT_EQ(m.world_count(), 2u);
    EXPECT_EQ(m.r, (Relation{{0, 0}, {1, 1}, {0, 1}}));
    EXPECT_EQ(m.base, (EvidenceBase{{Term::variable(1), parse_formula("p1"), 0}}));
    EXPECT_EQ(m.valuation.size(), 2u);
    EXPECT_TRUE(validate_model(m).empty());
    EXPECT_TRUE(eval(m, 1, parse_formula("x1:p1")));

    const FinitaryModel back = model_from_json(model_to_json(m));
    EXPECT_EQ(back.worlds, m.worlds);
    EXPECT_EQ(back.r, m.r);
    EXPECT_EQ(back.base, m.base);
    EXPECT_EQ(back.valuation, m.valuation);
    EXPECT_EQ(back.cs, m.cs);
}

TEST(ModelJson, OptionalFields) {
    const FinitaryModel m = model_from_json(json::parse(R"j({"logic":"J","worlds":["a"]})j"));
    EXPECT_EQ(m.cs, ConstantSpec{TotalCS{}});
    EXPECT_TRUE(m.r.empty());
    EXPECT_TRUE(m.base.empty());
}

TEST(ModelJson, Errors) {
    const char* bad[] = {
        R"j({"worlds":["w0"]})j",
        R"j({"logic":"K","worlds":["w0"]})j",
        R"j({"logic":"J"})j",
        R"j({"logic":"J","worlds":["w0"],"R":[["w0","w9"]]})j",
        R"j({"logic":"J","worlds":["w0"],"R":[["w0"]]})j",
        R"j({"logic":"J","worlds":["w0"],"base":[{"term":"p1","formula":"p1","world":"w0"}]})j",
        R"j({"logic":"J","worlds":["w0"],"valuation":[{"world":"w0","atom":"x1:p1"}]})j",
        R"j({"logic":"J","worlds":[0]})j",
    };
    for (const char* text : bad) {
        EXPECT_THROW((void)model_from_json(json::parse(text)), FormatError) << text;
    }
    // Frame conditions are not the reader's concern.
    const FinitaryModel jd = model_from_json(json::parse(R"j({"logic":"JD","worlds":["w0"]})j"));
    EXPECT_FALSE(validate_model(jd).empty());
}

TEST(ProofJson, Rules) {
    const Proof p = proof_from_json(json::parse(R"j({
        "logic": "J",
        "cs": {"kind": "total"},
        "lines": [
            {"formula": "c1 : (p1 -> (p2 -> p1))", "rule": "an:c1,0,p1 -> (p2 -> p1)"},
            {"formula": "c1:(p1->(p2->p1)) -> (x1:p1 -> c1*x1:(p2->p1))", "rule": "axiom:j2"},
            {"formula": "x1:p1 -> c1*x1:(p2->p1)", "rule": "mp:1,2"}
        ]
    })j"));
    ASSERT_EQ(p.lines.size(), 3u);
    EXPECT_TRUE(check_proof(p).empty());
    const auto& an = std::get<AnStep>(p.lines[0].justification);
    EXPECT_EQ(an.constant, 1u);
    EXPECT_EQ(an.n, 0u);
    EXPECT_EQ(an.base, parse_formula("p1 -> (p2 -> p1)"));
    EXPECT_EQ(std::get<MpStep>(p.lines[2].justification).major, 2u);
}

TEST(ProofJson, RoundTripsTheCorpus) {
    for (const auto& [name, proof] : testgen::proof_corpus()) {
        const Proof back = proof_from_json(proof_to_json(proof));
        ASSERT_EQ(back.lines.size(), proof.lines.size()) << name;
        EXPECT_EQ(back.logic, proof.logic);
        EXPECT_EQ(back.cs, proof.cs);
        for (std::size_t i = 0; i < back.lines.size(); ++i) {
            EXPECT_EQ(back.lines[i].formula, proof.lines[i].formula);
            EXPECT_EQ(back.lines[i].justification.index(), proof.lines[i].justification.index());
        }
        EXPECT_TRUE(check_proof(back).empty()) << name;
    }
}

TEST(ProofJson, Errors) {
    const char* bad[] = {
        R"j({"logic":"J"})j",
        R"j({"logic":"J","lines":[{"formula":"p1","rule":"axiom"}]})j",
        R"j({"logic":"J","lines":[{"formula":"p1","rule":"mp:1"}]})j",
        R"j({"logic":"J","lines":[{"formula":"p1","rule":"mp:a,b"}]})j",
        R"j({"logic":"J","lines":[{"formula":"p1","rule":"an:c1,0"}]})j",
        R"j({"logic":"J","lines":[{"formula":"p1","rule":"an:x1,0,p1"}]})j",
        R"j({"logic":"J","lines":[{"formula":"p1","rule":"guess:1"}]})j",
        R"j({"logic":"J","lines":[{"formula":"p1 ->","rule":"axiom:cl1"}]})j",
    };
    for (const char* text : bad) {
        EXPECT_THROW((void)proof_from_json(json::parse(text)), FormatError) << text;
    }
}

TEST(ReadJsonFile, Errors) {
    EXPECT_THROW((void)read_json_file("/nonexistent/model.json"), FormatError);
    const std::string path = ::testing::TempDir() + "jlogic_bad.json";
    std::ofstream(path) << "{ not json";
    EXPECT_THROW((void)read_json_file(path), FormatError);
    std::ofstream(path) << R"j({"logic":"J"})j";
    EXPECT_EQ(read_json_file(path).at("logic"), "J");
    std::remove(path.c_str());
}
