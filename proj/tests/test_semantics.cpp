#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "corpus.hpp"
#include "generators.hpp"
#include "jlogic/semantics.hpp"

using namespace jlogic;

namespace {

Formula f_(const char* s) { return parse_formula(s); }

FinitaryModel one_world(LogicId logic, Relation r, EvidenceBase base,
                        std::set<std::pair<WorldId, std::uint32_t>> valuation) {
    FinitaryModel m;
    m.logic = logic;
    m.worlds = {"w0"};
    m.r = std::move(r);
    m.base = std::move(base);
    m.valuation = std::move(valuation);
    return m;
}

// Pools drawn from the formulas so that random bases actually touch them.
struct Pools {
    std::vector<Term> terms;
    std::vector<Formula> formulas;
};

Pools pools_for(const std::vector<Formula>& fs) {
    std::set<Term> ts;
    std::set<Formula> ss;
    for (const Formula& f : fs) {
        for (const auto& t : subterms(f)) ts.insert(t);
        for (const auto& s : subformulas(f)) ss.insert(s);
    }
    return {{ts.begin(), ts.end()}, {ss.begin(), ss.end()}};
}

std::vector<Formula> axiom_instances(testgen::Gen& gen, LogicId id, int count) {
    const auto& schemes = logic_spec(id).axiom_schemes;
    std::vector<Formula> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(gen.instance(schemes[gen.below(static_cast<std::uint32_t>(schemes.size()))].scheme));
    }
    return out;
}

}  // namespace

TEST(ValidateModel, Examples) {
    EXPECT_TRUE(validate_model(one_world(LogicId::LP, {{0, 0}}, {}, {})).empty());
    const auto jd = validate_model(one_world(LogicId::JD, {}, {}, {}));
    ASSERT_EQ(jd.size(), 1u);
    EXPECT_EQ(jd[0], "serial: w0 has no successor");
    EXPECT_TRUE(validate_model(one_world(LogicId::J, {}, {}, {})).empty());
    EXPECT_TRUE(validate_model(one_world(LogicId::J, {{0, 0}}, {}, {})).empty());
}

TEST(ValidateModel, FrameViolations) {
    FinitaryModel m;
    m.logic = LogicId::LP;
    m.worlds = {"a", "b", "c"};
    m.r = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}};
    const auto v = validate_model(m);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0], "transitive: missing (a, c) from (a, b) and (b, c)");
    m.r.erase({1, 1});
    m.r.insert({0, 2});
    EXPECT_EQ(validate_model(m), std::vector<std::string>{"reflexive: b does not see itself"});
}

TEST(ValidateModel, Structure) {
    FinitaryModel m;
    EXPECT_FALSE(validate_model(m).empty());
    m.worlds = {"w0", "w0"};
    EXPECT_FALSE(validate_model(m).empty());
    m.worlds = {"w0"};
    m.r = {{0, 3}};
    EXPECT_FALSE(validate_model(m).empty());
    m.r.clear();
    m.base = {{Term::variable(1), f_("p1"), 5}};
    EXPECT_FALSE(validate_model(m).empty());
    m.base.clear();
    m.cs = SchematicCS{{{1, {"jt"}}}};
    EXPECT_FALSE(validate_model(m).empty());
}

TEST(Eval, Examples) {
    const FinitaryModel m =
        one_world(LogicId::LP, {{0, 0}}, {{Term::variable(1), f_("p1"), 0}}, {{0, 1}});
    ASSERT_TRUE(validate_model(m).empty());
    EXPECT_TRUE(eval(m, 0, f_("x1:p1")));
    EXPECT_FALSE(eval(m, 0, f_("x2:p1")));
    // Both clauses of x1:p1 checked independently.
    EXPECT_TRUE(eval(m, 0, f_("p1")));
    EXPECT_EQ(saturation_oracle(logic_spec(m.logic), m.cs, m.base, m.r, Term::variable(2),
                                f_("p1"), 0, 16),
              OracleResult::False);

    const FinitaryModel j = one_world(LogicId::J, {}, {{Term::variable(1), f_("p2"), 0}}, {});
    EXPECT_TRUE(eval(j, 0, f_("x1:p2")));
    EXPECT_FALSE(eval(j, 0, f_("p2")));
}

TEST(Eval, SuccessorClause) {
    FinitaryModel m;
    m.logic = LogicId::J;
    m.worlds = {"w0", "w1"};
    m.r = {{0, 1}};
    m.base = {{Term::variable(1), f_("p1"), 0}};
    EXPECT_FALSE(eval(m, 0, f_("x1:p1")));
    m.valuation = {{1, 1}};
    EXPECT_TRUE(eval(m, 0, f_("x1:p1")));
    EXPECT_FALSE(eval(m, 1, f_("x1:p1")));
}

TEST(Eval, UnknownWorld) {
    const FinitaryModel m = one_world(LogicId::J, {}, {}, {});
    EXPECT_THROW((void)eval(m, 1, f_("p1")), std::out_of_range);
}

TEST(ValidInModel, Examples) {
    const FinitaryModel lp =
        one_world(LogicId::LP, {{0, 0}}, {{Term::variable(1), f_("p1"), 0}}, {{0, 1}});
    EXPECT_TRUE(valid_in_model(lp, f_("x1:p1 -> p1")));
    const FinitaryModel j = one_world(LogicId::J, {}, {{Term::variable(1), f_("p2"), 0}}, {});
    EXPECT_FALSE(valid_in_model(j, f_("p1")));
    EXPECT_TRUE(valid_in_model(j, f_("p1 -> p1")));
    EXPECT_TRUE(valid_in_model(lp, f_("p3 -> p3")));
}

TEST(Property, Soundness) {
    testgen::Gen gen(51);
    for (LogicId id : kAllLogics) {
        for (int round = 0; round < 40; ++round) {
            const auto instances = axiom_instances(gen, id, 10);
            const Pools pools = pools_for(instances);
            const FinitaryModel m = gen.model(id, 3, 5, pools.terms, pools.formulas);
            ASSERT_TRUE(validate_model(m).empty());
            for (const Formula& f : instances) {
                EXPECT_TRUE(valid_in_model(m, f)) << logic_name(id) << ": " << print_formula(f);
            }
        }
    }
}

TEST(Property, CorpusConclusionsAreValid) {
    testgen::Gen gen(52);
    for (const auto& [name, proof] : testgen::proof_corpus()) {
        const Formula goal = proof.lines.back().formula;
        const Pools pools = pools_for({goal});
        for (int round = 0; round < 40; ++round) {
            FinitaryModel m = gen.model(proof.logic, 3, 5, pools.terms, pools.formulas);
            m.cs = proof.cs;
            ASSERT_TRUE(validate_model(m).empty());
            for (const auto& line : proof.lines) {
                EXPECT_TRUE(valid_in_model(m, line.formula)) << name << ": " << print_formula(line.formula);
            }
        }
    }
}

TEST(Property, ModusPonensPreservesValidity) {
    testgen::Gen gen(53);
    int premises = 0;
    for (int round = 0; round < 400; ++round) {
        const LogicId id = kAllLogics[gen.below(6)];
        const Formula a = gen.coin() ? axiom_instances(gen, id, 1)[0] : gen.formula(2, 1);
        const Formula b = gen.formula(3, 1);
        const Pools pools = pools_for({a, b});
        const FinitaryModel m = gen.model(id, 3, 4, pools.terms, pools.formulas);
        if (!valid_in_model(m, a) || !valid_in_model(m, Formula::implies(a, b))) continue;
        ++premises;
        EXPECT_TRUE(valid_in_model(m, b));
    }
    EXPECT_GT(premises, 40);
}

TEST(Property, Deterministic) {
    testgen::Gen gen(54);
    for (int round = 0; round < 100; ++round) {
        const LogicId id = kAllLogics[gen.below(6)];
        const Formula f = gen.formula(4);
        const Pools pools = pools_for({f});
        const FinitaryModel m = gen.model(id, 3, 4, pools.terms, pools.formulas);
        Evaluator ev(m);
        for (WorldId w = 0; w < m.world_count(); ++w) {
            const bool first = ev.eval(w, f);
            EXPECT_EQ(ev.eval(w, f), first);
            EXPECT_EQ(eval(m, w, f), first);
        }
    }
}

TEST(Property, KnowledgeIsMonotoneInJ4Logics) {
    testgen::Gen gen(55);
    int hits = 0;
    for (int round = 0; round < 300; ++round) {
        const LogicId id = std::array{LogicId::J4, LogicId::JD4, LogicId::LP}[gen.below(3)];
        std::vector<Formula> justs;
        for (int i = 0; i < 4; ++i) justs.push_back(Formula::just(gen.term(2), gen.formula(2, 1)));
        const Pools pools = pools_for(justs);
        const FinitaryModel m = gen.model(id, 3, 5, pools.terms, pools.formulas);
        Evaluator ev(m);
        // Base triples are the likeliest true justifications.
        for (const auto& triple : m.base) justs.push_back(Formula::just(triple.term, triple.formula));
        for (const Formula& j : justs) {
            for (const auto& [w, v] : m.r) {
                if (!ev.eval(w, j)) continue;
                ++hits;
                EXPECT_TRUE(ev.evidence(j.term(), j.body(), v));
            }
        }
    }
    EXPECT_GT(hits, 100);
}
