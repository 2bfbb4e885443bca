#include "properties.hpp"

#include <sstream>

namespace terminfer::testing {

namespace {

LinExpr v(const std::string &name, long c = 1) { return LinExpr::variable(name, c); }

const std::vector<std::string> kVars{"x1", "x2", "x3"};

std::map<std::string, bool> assignment(int n, std::uint64_t bits) {
    std::map<std::string, bool> a;
    for (int j = 0; j < n; ++j)
        a[kVars[j]] = (bits >> j) & 1;
    return a;
}

TruthTable raw_table(int n, std::uint64_t code) {
    TruthTable t(std::size_t{1} << n);
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = (code >> i) & 1;
    return t;
}

// Level of `atom` under an affine mapping over x1..xN.
LinExpr level(const LinExpr &mapping, const NumAtom &atom) {
    std::map<std::string, LinExpr> bindings;
    for (std::size_t i = 0; i < atom.args.size(); ++i)
        bindings["x" + std::to_string(i + 1)] = atom.args[i];
    return mapping.substitute(bindings);
}

} // namespace

Polyhedron random_polyhedron(Rng &rng, const std::vector<std::string> &dims, int max_constraints) {
    std::vector<LinConstraint> cs;
    int count = rng.uniform(0, max_constraints);
    for (int i = 0; i < count; ++i) {
        LinExpr e(rng.uniform(-3, 4));
        for (const auto &d : dims)
            e += v(d, rng.uniform(-2, 2));
        Relation rel = rng.uniform(0, 4) == 0 ? Relation::Eq : Relation::Ge;
        cs.push_back({e, rel});
    }
    return Polyhedron::from_constraints(dims, cs);
}

Failures lattice_law_failures(std::uint64_t seed, int rounds) {
    Failures out;
    Rng rng(seed);
    const std::vector<std::string> d{"a", "b"};
    for (int round = 0; round < rounds; ++round) {
        auto p = random_polyhedron(rng, d);
        auto q = random_polyhedron(rng, d);
        auto r = random_polyhedron(rng, d);
        auto fail = [&](const std::string &law) {
            out.push_back(law + " on " + p.to_string() + ", " + q.to_string() + ", " + r.to_string());
        };
        if (!p.entails(p))
            fail("reflexivity");
        if (p.entails(q) && q.entails(r) && !p.entails(r))
            fail("transitivity");
        if (p.entails(q) && q.entails(p) && !(p == q))
            fail("antisymmetry");
        auto h = p.hull(q);
        if (!p.entails(h) || !q.entails(h))
            fail("hull upper bound");
        auto m = p.meet(q);
        if (!m.entails(p) || !m.entails(q))
            fail("meet lower bound");
        if (!r.meet(p).meet(q).entails(m))
            fail("meet greatest");
    }
    return out;
}

Failures widening_chain_failures(std::uint64_t seed, int chains, int steps, int max_changes) {
    Failures out;
    Rng rng(seed);
    const std::vector<std::string> d{"a", "b", "c"};
    for (int chain = 0; chain < chains; ++chain) {
        auto p = random_polyhedron(rng, d, 2);
        while (p.is_empty())
            p = random_polyhedron(rng, d, 2);
        Polyhedron w = p;
        int changes = 0;
        for (int step = 0; step < steps; ++step) {
            p = p.hull(random_polyhedron(rng, d, 2));
            auto next = w.widen(w.hull(p));
            if (!w.entails(next) || !p.entails(next)) {
                out.push_back("chain " + std::to_string(chain) + ": widened iterate is not an upper bound");
                break;
            }
            if (!(next == w))
                ++changes;
            w = next;
        }
        if (changes > max_changes)
            out.push_back("chain " + std::to_string(chain) + ": " + std::to_string(changes) + " changes");
    }
    return out;
}

Failures projection_oracle_failures(std::uint64_t seed, int rounds) {
    Failures out;
    Rng rng(seed);
    const std::vector<std::string> dims{"a", "b", "c"};
    for (int round = 0; round < rounds; ++round) {
        auto p = random_polyhedron(rng, dims, 4);
        auto shadow = p.project({"a", "b"});
        auto cons = p.constraints();
        for (int i = 0; i <= 8; ++i) {
            for (int j = 0; j <= 8; ++j) {
                std::map<std::string, Rational> pt{{"a", Rational(i, 2)}, {"b", Rational(j, 2)}};
                bool oracle = !p.is_empty() && feasible_interval(cons, "c", pt).has_value();
                if (shadow.contains(pt) != oracle) {
                    std::ostringstream os;
                    os << "projection of " << p.to_string() << " at (" << i << "/2, " << j << "/2)";
                    out.push_back(os.str());
                }
            }
        }
    }
    return out;
}

Failures boolean_oracle_failures() {
    Failures out;
    for (int n = 0; n <= 3; ++n) {
        std::vector<std::string> vars(kVars.begin(), kVars.begin() + n);
        const std::uint64_t count = std::uint64_t{1} << (1u << n);
        const std::size_t rows = std::size_t{1} << n;
        std::vector<BoolFun> all;
        for (std::uint64_t code = 0; code < count; ++code)
            all.push_back(BoolFun::from_table(vars, raw_table(n, code)));
        auto matches = [&](const BoolFun &f, const TruthTable &t) {
            for (std::uint64_t i = 0; i < rows; ++i)
                if (f.evaluate(assignment(n, i)) != static_cast<bool>(t[i]))
                    return false;
            return true;
        };
        for (std::uint64_t a = 0; a < count; ++a) {
            auto ta = raw_table(n, a);
            if (!matches(all[a], ta))
                out.push_back("table round trip " + all[a].to_string());
            if (!matches(!all[a], raw_table(n, ~a & (count - 1))))
                out.push_back("negation of " + all[a].to_string());
            for (std::uint64_t b = 0; b < count; ++b) {
                auto tb = raw_table(n, b);
                TruthTable tc(rows), td(rows), ti(rows), tm(rows);
                for (std::size_t i = 0; i < rows; ++i) {
                    tc[i] = ta[i] && tb[i];
                    td[i] = ta[i] || tb[i];
                    ti[i] = ta[i] == tb[i];
                    tm[i] = !ta[i] || tb[i];
                }
                const auto &f = all[a], &g = all[b];
                std::string pair = f.to_string() + ", " + g.to_string();
                if (!matches(conj(f, g), tc))
                    out.push_back("conj " + pair);
                if (!matches(disj(f, g), td))
                    out.push_back("disj " + pair);
                if (!matches(iff(f, g), ti))
                    out.push_back("iff " + pair);
                if (!matches(implies(f, g), tm))
                    out.push_back("implies " + pair);
                if (f.entails(g) != ((a & ~b) == 0))
                    out.push_back("entails " + pair);
                if ((f == g) != (a == b))
                    out.push_back("equality " + pair);
            }
            for (int var = 0; var < n; ++var) {
                auto fa = all[a].forall({kVars[var]});
                auto ex = all[a].exists({kVars[var]});
                for (int value = 0; value < 2; ++value) {
                    auto r = all[a].restrict(kVars[var], value);
                    for (std::uint64_t i = 0; i < rows; ++i) {
                        std::uint64_t j = value ? (i | (1u << var)) : (i & ~(1u << var));
                        if (r.evaluate(assignment(n, i)) != static_cast<bool>(ta[j]))
                            out.push_back("restrict " + all[a].to_string());
                    }
                }
                for (std::uint64_t i = 0; i < rows; ++i) {
                    bool lo = ta[i & ~(1u << var)], hi = ta[i | (1u << var)];
                    if (fa.evaluate(assignment(n, i)) != (lo && hi))
                        out.push_back("forall " + kVars[var] + " " + all[a].to_string());
                    if (ex.evaluate(assignment(n, i)) != (lo || hi))
                        out.push_back("exists " + kVars[var] + " " + all[a].to_string());
                }
            }
        }
    }
    return out;
}

Failures numeric_postfixpoint_failures(const Analysis &a) {
    Failures out;
    auto lookup = model_lookup(a.num_program, a.numeric.model);
    for (const auto &p : a.num_program.predicates) {
        const Polyhedron *post = a.numeric.model.find(p);
        if (!post) {
            out.push_back(p.to_string() + ": no numeric post");
            continue;
        }
        for (const auto &c : a.num_program.clauses_of(p))
            if (!clause_consequence(c, lookup).entails(*post))
                out.push_back(p.to_string() + ": " + c.to_string() + " escapes " + post->to_string());
    }
    return out;
}

Failures boolean_postfixpoint_failures(const Analysis &a) {
    Failures out;
    const auto &m = a.bool_model.map;
    for (const auto &p : a.bool_program.predicates) {
        auto it = m.find(p);
        if (it == m.end()) {
            out.push_back(p.to_string() + ": no boolean post");
            continue;
        }
        for (const auto &c : a.bool_program.clauses_of(p))
            if (!boolean_consequence(c, a.bool_program, m).entails(it->second))
                out.push_back(p.to_string() + ": a clause escapes " + it->second.to_string());
    }
    return out;
}

Failures level_mapping_audit_failures(const Analysis &a) {
    Failures out;
    for (const auto &s : a.levels.mapping.sccs) {
        if (s.status != SccMapping::Status::Found)
            continue;
        for (const auto &ob : decrease_obligations(s.scc, a.num_program, a.numeric.model)) {
            for (const auto &cand : s.candidates) {
                auto head = level(cand.at(ob.head.pred), ob.head);
                auto call = level(cand.at(ob.call.pred), ob.call);
                if (!ob.context.entails(LinConstraint::ge(head, call + LinExpr(1))))
                    out.push_back(ob.head.to_string() + " -> " + ob.call.to_string() + ": " + head.to_string() +
                                  " does not exceed " + call.to_string());
            }
        }
    }
    return out;
}

Failures gfp_certificate_failures(const Analysis &a) {
    Failures out;
    for (const auto &scc : a.order.sccs) {
        auto next = termination_step(scc, a.bool_program, a.bool_model.map, a.bool_levels, a.pre.map);
        for (const auto &p : scc)
            if (!(next.at(p) == a.pre.map.at(p)))
                out.push_back(p.to_string() + ": " + a.pre.map.at(p).to_string() + " steps to " +
                              next.at(p).to_string());
    }
    return out;
}

Failures gfp_maximality_failures(const Analysis &a, int *checked) {
    constexpr std::uint64_t kMaxCombinations = 1u << 16;
    Failures out;
    int enumerated = 0;
    for (const auto &scc : a.order.sccs) {
        std::uint64_t combinations = 1;
        bool small = true;
        std::vector<std::uint64_t> counts;
        for (const auto &p : scc) {
            if (p.arity > 3) {
                small = false;
                break;
            }
            counts.push_back(std::uint64_t{1} << (1u << p.arity));
            combinations *= counts.back();
            if (combinations > kMaxCombinations) {
                small = false;
                break;
            }
        }
        if (!small)
            continue;
        ++enumerated;
        for (std::uint64_t code = 0; code < combinations; ++code) {
            BoolMap candidate = a.pre.map;
            std::uint64_t rest = code;
            for (std::size_t i = 0; i < scc.size(); ++i) {
                std::uint64_t table = rest % counts[i];
                rest /= counts[i];
                candidate[scc[i]] = BoolFun::from_table(argument_names(scc[i].arity),
                                                        raw_table(static_cast<int>(scc[i].arity), table));
            }
            auto next = termination_step(scc, a.bool_program, a.bool_model.map, a.bool_levels, candidate);
            bool post_fixpoint = true;
            for (const auto &p : scc)
                post_fixpoint = post_fixpoint && candidate.at(p).entails(next.at(p));
            if (!post_fixpoint)
                continue;
            for (const auto &p : scc)
                if (!candidate.at(p).entails(a.pre.map.at(p)))
                    out.push_back(p.to_string() + ": " + candidate.at(p).to_string() +
                                  " is a post-fixpoint above " + a.pre.map.at(p).to_string());
        }
    }
    if (checked)
        *checked = enumerated;
    return out;
}

} // namespace terminfer::testing
