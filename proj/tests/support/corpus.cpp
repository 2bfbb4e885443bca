#include "corpus.hpp"

#include "terminfer/error.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace terminfer::testing {

namespace {

void collect(const Term &t, std::set<std::string> &constants, std::set<std::int64_t> &integers,
             std::set<std::pair<std::string, std::size_t>> &functors) {
    switch (t.kind) {
    case Term::Kind::Variable:
        return;
    case Term::Kind::Constant:
        constants.insert(t.name);
        return;
    case Term::Kind::Integer:
        integers.insert(t.value);
        return;
    case Term::Kind::Compound:
        functors.insert({t.name, t.args.size()});
        for (const auto &a : t.args)
            collect(a, constants, integers, functors);
        return;
    }
}

Atom query_for(const PredId &p, const std::set<std::size_t> &ground, const Signature &sig, Rng &rng, int max_size) {
    Atom q{p, {}};
    for (std::size_t i = 1; i <= p.arity; ++i)
        q.args.push_back(ground.count(i) ? random_ground_term(sig, rng, max_size)
                                         : Term::variable("Q" + std::to_string(i)));
    return q;
}

void record(SamplingReport &r, const Program &program, const Atom &q, const QueryLimits &limits) {
    auto res = run_query(program, q, limits);
    ++r.queries;
    if (res.outcome == Outcome::DepthLimitHit)
        ++r.depth_hits;
    if (res.outcome == Outcome::StepLimitHit)
        ++r.step_hits;
    if (res.outcome == Outcome::DepthLimitHit || res.outcome == Outcome::StepLimitHit)
        r.offenders.push_back(q.to_string() + ": " + to_string(res.outcome));
}

} // namespace

const char *const kRunningExample = R"(
app([], X, X).
app([E|X], Y, [E|Z]) :- app(X, Y, Z).
nrev([], []).
nrev([E|X], Y) :- nrev(X, Z), app(Z, [E], Y).
app3(X, Y, Z, U) :- app(X, Y, V), app(V, Z, U).
)";

std::string corpus_dir() { return TERMINFER_CORPUS_DIR; }

std::vector<CorpusEntry> load_expected(const std::string &dir) {
    std::ifstream in(dir + "/expected.txt");
    if (!in)
        throw Error("cannot read " + dir + "/expected.txt");
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream is(line);
        std::string file, pred;
        if (!(is >> file >> pred))
            continue;
        std::string formula;
        std::getline(is, formula);
        auto slash = pred.rfind('/');
        out.push_back({file, PredId{pred.substr(0, slash), std::stoul(pred.substr(slash + 1))},
                       parse_formula(formula)});
    }
    return out;
}

std::vector<std::string> corpus_files(const std::string &dir) {
    std::vector<std::string> out;
    for (const auto &e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".pl")
            out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

Signature signature_of(const Program &program) {
    std::set<std::string> constants;
    std::set<std::int64_t> integers;
    std::set<std::pair<std::string, std::size_t>> functors;
    for (const auto &p : program.predicates()) {
        for (const auto &c : program.clauses(p)) {
            for (const auto &t : c.head.args)
                collect(t, constants, integers, functors);
            for (const auto &b : c.body)
                for (const auto &t : b.args)
                    collect(t, constants, integers, functors);
        }
    }
    Signature sig;
    for (const auto &c : constants)
        sig.constants.push_back(Term::constant(c));
    for (auto i : integers)
        sig.constants.push_back(Term::integer(i));
    if (sig.constants.empty())
        sig.constants.push_back(Term::constant("[]"));
    sig.functors.assign(functors.begin(), functors.end());
    return sig;
}

Term random_ground_term(const Signature &sig, Rng &rng, int max_size) {
    if (max_size <= 0 || sig.functors.empty() || rng.coin(0.3))
        return sig.constants[rng.uniform(0, static_cast<int>(sig.constants.size()) - 1)];
    const auto &[name, arity] = sig.functors[rng.uniform(0, static_cast<int>(sig.functors.size()) - 1)];
    // Share the remaining budget out between the arguments.
    int budget = max_size - 1;
    std::vector<Term> args;
    for (std::size_t i = 0; i < arity; ++i) {
        int share = i + 1 == arity ? budget : rng.uniform(0, budget);
        args.push_back(random_ground_term(sig, rng, share));
        budget -= share;
    }
    return Term::compound(name, std::move(args));
}

SamplingReport sample_condition(const Program &program, const PredId &p, const BoolFun &pre, Rng &rng,
                                int per_model, const QueryLimits &limits, int max_size) {
    SamplingReport r;
    auto sig = signature_of(program);
    for (const auto &model : pre.minimal_models()) {
        std::set<std::size_t> ground;
        for (const auto &v : model)
            ground.insert(std::stoul(v.substr(1)));
        for (int i = 0; i < per_model; ++i)
            record(r, program, query_for(p, ground, sig, rng, max_size), limits);
    }
    return r;
}

SamplingReport sample_ground_queries(const Program &program, const PredId &p, Rng &rng, int count,
                                     const QueryLimits &limits, int max_size) {
    SamplingReport r;
    auto sig = signature_of(program);
    std::set<std::size_t> all;
    for (std::size_t i = 1; i <= p.arity; ++i)
        all.insert(i);
    for (int i = 0; i < count; ++i)
        record(r, program, query_for(p, all, sig, rng, max_size), limits);
    return r;
}

} // namespace terminfer::testing
