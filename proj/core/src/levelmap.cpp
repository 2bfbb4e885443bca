#include "terminfer/levelmap.hpp"

#include "terminfer/error.hpp"

#include <algorithm>
#include <numeric>

namespace terminfer {

std::vector<Obligation> decrease_obligations(const std::vector<PredId> &scc, const NumProgram &program,
                                             const NumericModel &model) {
    ModelLookup lookup = model_lookup(program, model);
    std::vector<Obligation> out;
    for (const auto &p : scc) {
        for (const auto &c : program.clauses_of(p)) {
            for (std::size_t k = 0; k < c.body.size(); ++k) {
                if (!std::binary_search(scc.begin(), scc.end(), c.body[k].pred))
                    continue;
                out.push_back({body_context(c, k, lookup), c.head, c.body[k], k});
            }
        }
    }
    return out;
}

std::string coefficient_name(const PredId &p, std::size_t position) {
    return "c[" + p.to_string() + "]" + std::to_string(position);
}

namespace {

// f_p(args) as an expression over the coefficient variables, split by the
// clause variable each term multiplies; key "" holds the constant part.
void add_mapping(std::map<std::string, LinExpr> &terms, const NumAtom &atom, const Rational &sign) {
    terms[""] += LinExpr::variable(coefficient_name(atom.pred, 0), sign);
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
        std::string c = coefficient_name(atom.pred, i + 1);
        const LinExpr &arg = atom.args[i];
        if (arg.constant() != 0)
            terms[""] += LinExpr::variable(c, sign * arg.constant());
        for (const auto &[v, a] : arg.coefficients())
            terms[v] += LinExpr::variable(c, sign * a);
    }
}

std::vector<std::string> coefficient_dims(const std::vector<PredId> &scc) {
    std::vector<std::string> dims;
    for (const auto &p : scc)
        for (std::size_t i = 0; i <= p.arity; ++i)
            dims.push_back(coefficient_name(p, i));
    return dims;
}

} // namespace

Polyhedron coefficient_constraints(const std::vector<PredId> &scc, const std::vector<Obligation> &obligations) {
    const auto dims = coefficient_dims(scc);
    Polyhedron space = Polyhedron::universe(dims);
    for (const auto &ob : obligations) {
        if (ob.context.is_empty())
            continue;
        // f(head) - f(call) - 1 = sum_v terms[v] * v + terms[""].
        std::map<std::string, LinExpr> terms;
        add_mapping(terms, ob.head, 1);
        add_mapping(terms, ob.call, -1);
        terms[""] -= LinExpr(1L);
        // Context rows r(v) >= 0; equalities contribute both directions.
        std::vector<LinExpr> rows;
        for (const auto &c : ob.context.constraints()) {
            if (c.relation != Relation::Le)
                rows.push_back(c.expr);
            if (c.relation != Relation::Ge)
                rows.push_back(-c.expr);
        }
        // Affine Farkas: terms = sum_r l_r * r(v) + (non-negative slack).
        std::vector<std::string> all = dims;
        std::vector<LinConstraint> cs;
        for (std::size_t r = 0; r < rows.size(); ++r)
            all.push_back("\x01l" + std::to_string(r));
        std::vector<std::string> vars = ob.context.dims();
        vars.push_back("");
        for (const auto &v : vars) {
            LinExpr e = terms[v];
            for (std::size_t r = 0; r < rows.size(); ++r) {
                Rational a = v.empty() ? rows[r].constant() : rows[r].coefficient(v);
                if (a != 0)
                    e -= LinExpr::variable("\x01l" + std::to_string(r), a);
            }
            cs.push_back({e, Relation::Ge});
        }
        space = space.meet(Polyhedron::from_constraints(all, cs).project(dims));
        if (space.is_empty())
            break;
    }
    return space;
}

namespace {

Rational lcm_of_denominators(const std::map<std::string, Rational> &point) {
    mpz_class l = 1;
    for (const auto &[name, v] : point)
        l = lcm(l, mpz_class(v.get_den()));
    return Rational(l);
}

} // namespace

SccMapping concretize(const std::vector<PredId> &scc, const Polyhedron &space, bool has_obligations) {
    SccMapping out;
    out.scc = scc;
    if (!has_obligations)
        return out;
    if (space.is_empty()) {
        out.status = SccMapping::Status::Failed;
        return out;
    }
    out.status = SccMapping::Status::Found;
    std::vector<std::string> args;
    LinExpr total;
    for (const auto &p : scc) {
        total += LinExpr::variable(coefficient_name(p, 0));
        for (std::size_t i = 1; i <= p.arity; ++i) {
            args.push_back(coefficient_name(p, i));
            total += LinExpr::variable(args.back());
        }
    }
    const std::size_t n = args.size();
    std::vector<std::vector<std::size_t>> supports;
    for (std::size_t size = 0; size <= n; ++size) {
        // Subsets of `size` argument coefficients in lexicographic order.
        std::vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            bool superset = std::any_of(supports.begin(), supports.end(), [&](const auto &s) {
                return std::includes(pick.begin(), pick.end(), s.begin(), s.end());
            });
            if (!superset) {
                charge_fuel();
                std::vector<LinConstraint> cs;
                std::size_t next = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    bool in = next < size && pick[next] == j;
                    if (in)
                        ++next;
                    cs.push_back(in ? LinConstraint::ge(LinExpr::variable(args[j]), 1)
                                    : LinConstraint::eq(LinExpr::variable(args[j]), 0));
                }
                if (auto point = space.add_constraints(cs).minimizer(total)) {
                    supports.push_back(pick);
                    Rational scale = lcm_of_denominators(*point);
                    std::map<PredId, LinExpr> candidate;
                    for (const auto &p : scc) {
                        LinExpr f(Rational(point->at(coefficient_name(p, 0)) * scale));
                        for (std::size_t i = 1; i <= p.arity; ++i)
                            f += LinExpr::variable("x" + std::to_string(i),
                                                   point->at(coefficient_name(p, i)) * scale);
                        candidate.emplace(p, std::move(f));
                    }
                    out.candidates.push_back(std::move(candidate));
                }
            }
            // Advance to the next combination.
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

bool audit(const SccMapping &mapping, const std::vector<Obligation> &obligations) {
    auto apply = [](const LinExpr &f, const NumAtom &atom) {
        std::map<std::string, LinExpr> sub;
        for (std::size_t i = 0; i < atom.args.size(); ++i)
            sub.emplace("x" + std::to_string(i + 1), atom.args[i]);
        return f.substitute(sub);
    };
    for (const auto &candidate : mapping.candidates)
        for (const auto &ob : obligations)
            if (!ob.context.entails(LinConstraint::ge(apply(candidate.at(ob.head.pred), ob.head),
                                                      apply(candidate.at(ob.call.pred), ob.call) + LinExpr(1L))))
                return false;
    return true;
}

const SccMapping *LevelMapping::scc_of(const PredId &p) const {
    for (const auto &s : sccs)
        if (std::find(s.scc.begin(), s.scc.end(), p) != s.scc.end())
            return &s;
    return nullptr;
}

std::vector<LinExpr> LevelMapping::expressions(const PredId &p) const {
    std::vector<LinExpr> out;
    if (const SccMapping *s = scc_of(p))
        for (const auto &c : s->candidates)
            if (std::find(out.begin(), out.end(), c.at(p)) == out.end())
                out.push_back(c.at(p));
    return out;
}

bool LevelMapping::failed(const PredId &p) const {
    const SccMapping *s = scc_of(p);
    return s && s->status == SccMapping::Status::Failed;
}

std::string LevelMapping::to_string(const std::vector<PredId> &order) const {
    std::string s;
    for (const auto &p : order) {
        if (!scc_of(p))
            continue;
        s += p.to_string() + ": ";
        auto exprs = expressions(p);
        if (failed(p)) {
            s += "failed";
        } else if (exprs.empty()) {
            s += "0";
        } else if (exprs.size() == 1) {
            s += exprs[0].to_string();
        } else {
            s += "min(";
            for (std::size_t i = 0; i < exprs.size(); ++i)
                s += (i ? ", " : "") + exprs[i].to_string();
            s += ")";
        }
        s += "\n";
    }
    return s;
}

LevelMappingResult compute_level_mappings(const NumProgram &program, const SccOrder &order,
                                          const NumericModel &model, std::int64_t fuel) {
    LevelMappingResult result;
    for (const auto &scc : order.sccs) {
        try {
            FuelScope scope(fuel);
            auto obligations = decrease_obligations(scc, program, model);
            Polyhedron space = coefficient_constraints(scc, obligations);
            SccMapping m = concretize(scc, space, !obligations.empty());
            if (m.status == SccMapping::Status::Failed)
                result.diagnostics.push_back({scc, "level mapping", "no linear level mapping decreases"});
            result.mapping.sccs.push_back(std::move(m));
        } catch (const BudgetExceeded &) {
            SccMapping m;
            m.scc = scc;
            m.status = SccMapping::Status::Failed;
            result.mapping.sccs.push_back(std::move(m));
            result.diagnostics.push_back({scc, "level mapping", "fuel exhausted"});
        }
    }
    return result;
}

} // namespace terminfer
