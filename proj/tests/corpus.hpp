#pragma once

// Hand-built Hilbert proofs shared by the proof, semantics and acceptance
// suites. Every proof here is expected to pass check_proof.

#include <cstddef>
#include <string>
#include <vector>

#include "jlogic/logics.hpp"
#include "jlogic/proof.hpp"
#include "jlogic/syntax.hpp"

namespace jlogic::testgen {

class ProofBuilder {
public:
    ProofBuilder(LogicId logic, ConstantSpec cs = TotalCS{}) : proof_{logic, std::move(cs), {}} {}

    std::size_t axiom(const std::string& id, const Formula& f) { return push(f, AxiomStep{id}); }
    std::size_t axiom(const std::string& id, const std::string& text) {
        return axiom(id, parse_formula(text));
    }

    std::size_t an(std::uint32_t c, const Formula& a, std::uint32_t n = 0) {
        return push(an_formula(c, a, n), AnStep{c, a, n});
    }

    // minor: X, major: X -> Y; adds Y.
    std::size_t mp(std::size_t minor, std::size_t major) {
        return push(formula(major).right(), MpStep{minor, major});
    }

    // From A -> B and B -> C, adds A -> C.
    std::size_t hs(std::size_t ab, std::size_t bc) {
        const Formula a = formula(ab).left();
        const Formula b = formula(ab).right();
        const Formula c = formula(bc).right();
        const std::size_t k = axiom("cl1", imp(imp(b, c), imp(a, imp(b, c))));
        const std::size_t a_bc = mp(bc, k);
        const std::size_t dist = axiom("cl2", imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c))));
        const std::size_t step = mp(a_bc, dist);
        return mp(ab, step);
    }

    // From A -> (B -> C), adds B -> (A -> C).
    std::size_t perm(std::size_t abc) {
        const Formula a = formula(abc).left();
        const Formula b = formula(abc).right().left();
        const Formula c = formula(abc).right().right();
        const std::size_t dist = axiom("cl2", imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c))));
        const std::size_t ab_ac = mp(abc, dist);
        const std::size_t k = axiom("cl1", imp(b, imp(a, b)));
        return hs(k, ab_ac);
    }

    // A -> A.
    std::size_t identity(const Formula& a) {
        const Formula aa = imp(a, a);
        const std::size_t s1 = axiom("cl2", imp(imp(a, imp(aa, a)), imp(imp(a, aa), aa)));
        const std::size_t s2 = axiom("cl1", imp(a, imp(aa, a)));
        const std::size_t s3 = mp(s2, s1);
        const std::size_t s4 = axiom("cl1", imp(a, aa));
        return mp(s4, s3);
    }

    [[nodiscard]] const Formula& formula(std::size_t line) const {
        return proof_.lines.at(line - 1).formula;
    }
    [[nodiscard]] const Proof& proof() const { return proof_; }

private:
    static Formula imp(const Formula& a, const Formula& b) { return Formula::implies(a, b); }

    std::size_t push(const Formula& f, Justification j) {
        proof_.lines.push_back({f, std::move(j)});
        return proof_.lines.size();
    }

    Proof proof_;
};

struct NamedProof {
    std::string name;
    Proof proof;
};

// x1:p1 -> x1+x2:p1 from the sum axiom and propositional steps.
inline Proof sum_left_proof() {
    ProofBuilder b(LogicId::J);
    const Formula x = parse_formula("x1:p1");
    const Formula y = parse_formula("x2:p1");
    const Formula nx = Formula::negation(x);
    const Formula ny = Formula::negation(y);
    const std::size_t j3 = b.axiom("j3", "x1:p1 | x2:p1 -> x1+x2:p1");
    // ~X -> (X -> Y)
    const std::size_t k = b.axiom("cl1", Formula::implies(nx, Formula::implies(ny, nx)));
    const std::size_t contra =
        b.axiom("cl3", Formula::implies(Formula::implies(ny, nx), Formula::implies(x, y)));
    const std::size_t nx_xy = b.hs(k, contra);
    // X -> (~X -> Y), then chain into the sum axiom.
    const std::size_t x_nxy = b.perm(nx_xy);
    b.hs(x_nxy, j3);
    return b.proof();
}

inline std::vector<NamedProof> proof_corpus() {
    std::vector<NamedProof> out;
    const Formula k = parse_formula("p1 -> (p2 -> p1)");
    {
        ProofBuilder b(LogicId::J);
        b.an(1, k);
        out.push_back({"constant for cl1", b.proof()});
    }
    {
        ProofBuilder b(LogicId::J);
        b.an(1, k, 2);
        out.push_back({"bang tower n=2", b.proof()});
    }
    out.push_back({"sum introduction", sum_left_proof()});
    {
        ProofBuilder b(LogicId::J);
        b.axiom("j2", "x1:(p1->p2) -> (x2:p1 -> x1*x2:p2)");
        out.push_back({"application axiom", b.proof()});
    }
    {
        ProofBuilder b(LogicId::J);
        const std::size_t c = b.an(1, k);
        const std::size_t j2 = b.axiom("j2", "c1:(p1 -> (p2 -> p1)) -> (x1:p1 -> c1*x1:(p2 -> p1))");
        b.mp(c, j2);
        out.push_back({"lifted weakening", b.proof()});
    }
    {
        ProofBuilder b(LogicId::J);
        b.identity(parse_formula("p1"));
        out.push_back({"identity", b.proof()});
    }
    {
        ProofBuilder b(LogicId::JT);
        b.axiom("jt", "x1:p1 -> p1");
        out.push_back({"factivity", b.proof()});
    }
    {
        ProofBuilder b(LogicId::JT);
        b.an(1, parse_formula("x1:p1 -> p1"), 1);
        out.push_back({"factivity tower n=1", b.proof()});
    }
    {
        ProofBuilder b(LogicId::JD);
        b.axiom("jd", "x1:false -> false");
        out.push_back({"consistency", b.proof()});
    }
    {
        ProofBuilder b(LogicId::LP);
        b.axiom("j4", "x1:p1 -> !x1:x1:p1");
        out.push_back({"positive introspection", b.proof()});
    }
    {
        ProofBuilder b(LogicId::J4);
        b.an(1, parse_formula("x1:p1 -> !x1:x1:p1"));
        out.push_back({"constant for j4", b.proof()});
    }
    {
        ProofBuilder b(LogicId::JD4);
        const std::size_t c = b.an(2, parse_formula("p1 -> p1 -> p1"));
        const std::size_t j4 = b.axiom("j4", "c2:(p1 -> p1 -> p1) -> !c2:c2:(p1 -> p1 -> p1)");
        b.mp(c, j4);
        out.push_back({"introspected constant", b.proof()});
    }
    return out;
}

}  // namespace jlogic::testgen
