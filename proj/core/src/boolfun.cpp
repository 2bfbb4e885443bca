#include "terminfer/boolfun.hpp"

#include "terminfer/error.hpp"
#include "terminfer/fuel.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>

namespace terminfer {

bool natural_less(const std::string &a, const std::string &b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
                ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
                ++je;
            std::string_view da(a.data() + i, ie - i), db(b.data() + j, je - j);
            while (da.size() > 1 && da.front() == '0')
                da.remove_prefix(1);
            while (db.size() > 1 && db.front() == '0')
                db.remove_prefix(1);
            if (da.size() != db.size())
                return da.size() < db.size();
            if (da != db)
                return da < db;
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j])
            return a[i] < b[j];
        ++i;
        ++j;
    }
    if ((a.size() - i) != (b.size() - j))
        return a.size() - i < b.size() - j;
    return a < b;
}

namespace {

std::size_t word_count(std::size_t nvars) {
    return nvars <= 6 ? 1 : std::size_t{1} << (nvars - 6);
}

void set_bit(std::vector<std::uint64_t> &w, std::uint64_t i, bool v) {
    if (v)
        w[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
        w[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

bool get_bit(const std::vector<std::uint64_t> &w, std::uint64_t i) { return (w[i >> 6] >> (i & 63)) & 1; }

std::vector<std::string> merge_vars(const std::vector<std::string> &a, const std::vector<std::string> &b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), natural_less);
    return out;
}

void check_width(std::size_t n) {
    if (n > BoolFun::kMaxVariables)
        throw BudgetExceeded("boolean function over too many variables");
}

void charge_table(std::size_t nvars) { charge_fuel(1 + static_cast<std::int64_t>(word_count(nvars))); }

} // namespace

BoolFun::BoolFun(std::vector<std::string> vars, std::vector<std::uint64_t> words)
    : vars_(std::move(vars)), words_(std::move(words)) {
    reduce();
}

BoolFun BoolFun::constant(bool value) { return BoolFun({}, {value ? 1u : 0u}); }

BoolFun BoolFun::variable(const std::string &name) { return BoolFun({name}, {0b10}); }

BoolFun BoolFun::from_table(std::vector<std::string> vars, const std::vector<bool> &table) {
    check_width(vars.size());
    if (table.size() != (std::size_t{1} << vars.size()))
        throw DimensionMismatch("truth table size does not match variable count");
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end(), natural_less);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DimensionMismatch("duplicate variable in truth table");
    std::vector<std::size_t> pos(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j)
        pos[j] = std::lower_bound(sorted.begin(), sorted.end(), vars[j], natural_less) - sorted.begin();
    std::vector<std::uint64_t> words(word_count(vars.size()), 0);
    for (std::uint64_t i = 0; i < table.size(); ++i) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if ((i >> j) & 1)
                k |= std::uint64_t{1} << pos[j];
        set_bit(words, k, table[i]);
    }
    return BoolFun(std::move(sorted), std::move(words));
}

bool BoolFun::depends_on(const std::string &var) const {
    return std::binary_search(vars_.begin(), vars_.end(), var, natural_less);
}

void BoolFun::reduce() {
    const std::uint64_t n = size();
    if (n < 64)
        words_[0] &= (std::uint64_t{1} << n) - 1;
    for (std::size_t v = vars_.size(); v-- > 0;) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        bool essential = false;
        for (std::uint64_t i = 0; i < size() && !essential; ++i)
            if (!(i & bit) && value_at(i) != value_at(i | bit))
                essential = true;
        if (essential)
            continue;
        std::vector<std::uint64_t> w(word_count(vars_.size() - 1), 0);
        for (std::uint64_t i = 0; i < size() / 2; ++i) {
            std::uint64_t old = (i & (bit - 1)) | ((i & ~(bit - 1)) << 1);
            set_bit(w, i, value_at(old));
        }
        vars_.erase(vars_.begin() + static_cast<std::ptrdiff_t>(v));
        words_ = std::move(w);
    }
}

std::vector<std::uint64_t> BoolFun::expand(const std::vector<std::string> &vars) const {
    check_width(vars.size());
    charge_table(vars.size());
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t j = 0; j < vars_.size(); ++j)
        pos[j] = std::lower_bound(vars.begin(), vars.end(), vars_[j], natural_less) - vars.begin();
    std::vector<std::uint64_t> w(word_count(vars.size()), 0);
    const std::uint64_t n = std::uint64_t{1} << vars.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < pos.size(); ++j)
            k |= ((i >> pos[j]) & 1) << j;
        if (value_at(k))
            set_bit(w, i, true);
    }
    return w;
}

template <class Op>
BoolFun combine(const BoolFun &a, const BoolFun &b, Op op) {
    auto vars = merge_vars(a.vars_, b.vars_);
    auto wa = a.vars_ == vars ? a.words_ : a.expand(vars);
    auto wb = b.vars_ == vars ? b.words_ : b.expand(vars);
    charge_table(vars.size());
    for (std::size_t i = 0; i < wa.size(); ++i)
        wa[i] = op(wa[i], wb[i]);
    return BoolFun(std::move(vars), std::move(wa));
}

BoolFun BoolFun::operator!() const {
    auto w = words_;
    for (auto &x : w)
        x = ~x;
    return BoolFun(vars_, std::move(w));
}

BoolFun conj(const BoolFun &a, const BoolFun &b) {
    return combine(a, b, [](std::uint64_t x, std::uint64_t y) { return x & y; });
}

BoolFun disj(const BoolFun &a, const BoolFun &b) {
    return combine(a, b, [](std::uint64_t x, std::uint64_t y) { return x | y; });
}

BoolFun iff(const BoolFun &a, const BoolFun &b) {
    return combine(a, b, [](std::uint64_t x, std::uint64_t y) { return ~(x ^ y); });
}

BoolFun implies(const BoolFun &a, const BoolFun &b) {
    return combine(a, b, [](std::uint64_t x, std::uint64_t y) { return ~x | y; });
}

bool BoolFun::is_positive() const { return value_at(size() - 1); }

bool BoolFun::is_monotone() const {
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        for (std::uint64_t i = 0; i < size(); ++i)
            if (!(i & bit) && value_at(i) && !value_at(i | bit))
                return false;
    }
    return true;
}

bool BoolFun::evaluate(const std::map<std::string, bool> &assignment) const {
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < vars_.size(); ++j) {
        auto it = assignment.find(vars_[j]);
        if (it != assignment.end() && it->second)
            k |= std::uint64_t{1} << j;
    }
    return value_at(k);
}

BoolFun BoolFun::restrict(const std::string &var, bool value) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var, natural_less);
    if (it == vars_.end() || *it != var)
        return *this;
    const std::size_t v = it - vars_.begin();
    const std::uint64_t bit = std::uint64_t{1} << v;
    charge_table(vars_.size());
    std::vector<std::string> vars = vars_;
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(v));
    std::vector<std::uint64_t> w(word_count(vars.size()), 0);
    for (std::uint64_t i = 0; i < size() / 2; ++i) {
        std::uint64_t old = (i & (bit - 1)) | ((i & ~(bit - 1)) << 1) | (value ? bit : 0);
        set_bit(w, i, value_at(old));
    }
    return BoolFun(std::move(vars), std::move(w));
}

BoolFun BoolFun::forall(const std::set<std::string> &vars) const {
    BoolFun f = *this;
    for (const auto &v : vars)
        if (f.depends_on(v))
            f = conj(f.restrict(v, false), f.restrict(v, true));
    return f;
}

BoolFun BoolFun::exists(const std::set<std::string> &vars) const {
    BoolFun f = *this;
    for (const auto &v : vars)
        if (f.depends_on(v))
            f = disj(f.restrict(v, false), f.restrict(v, true));
    return f;
}

BoolFun BoolFun::compose(const std::map<std::string, BoolFun> &substitution) const {
    std::vector<std::string> vars;
    for (const auto &v : vars_) {
        auto it = substitution.find(v);
        vars = merge_vars(vars, it == substitution.end() ? std::vector<std::string>{v} : it->second.vars_);
    }
    check_width(vars.size());
    std::vector<std::vector<std::uint64_t>> columns;
    for (const auto &v : vars_) {
        auto it = substitution.find(v);
        columns.push_back(it == substitution.end() ? variable(v).expand(vars) : it->second.expand(vars));
    }
    const std::uint64_t n = std::uint64_t{1} << vars.size();
    std::vector<std::uint64_t> w(word_count(vars.size()), 0);
    charge_table(vars.size() + 2);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < columns.size(); ++j)
            k |= static_cast<std::uint64_t>(get_bit(columns[j], i)) << j;
        if (value_at(k))
            set_bit(w, i, true);
    }
    return BoolFun(std::move(vars), std::move(w));
}

BoolFun BoolFun::rename(const std::map<std::string, std::string> &renaming) const {
    std::map<std::string, BoolFun> sub;
    for (const auto &[from, to] : renaming)
        sub.emplace(from, variable(to));
    return compose(sub);
}

bool BoolFun::entails(const BoolFun &other) const { return implies(*this, other).is_true(); }

std::vector<std::vector<std::string>> BoolFun::minimal_models() const {
    std::vector<std::uint64_t> order(size());
    for (std::uint64_t i = 0; i < size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::uint64_t> minimal;
    for (auto i : order) {
        if (!value_at(i))
            continue;
        if (std::none_of(minimal.begin(), minimal.end(), [&](std::uint64_t m) { return (m & i) == m; }))
            minimal.push_back(i);
    }
    std::vector<std::vector<std::string>> out;
    for (auto m : minimal) {
        std::vector<std::string> names;
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if ((m >> j) & 1)
                names.push_back(vars_[j]);
        out.push_back(std::move(names));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), natural_less);
    });
    return out;
}

namespace {

std::string join_terms(const std::vector<std::string> &terms) {
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i)
        s += (i ? " + " : "") + terms[i];
    return s;
}

struct Cube {
    std::uint64_t care;
    std::uint64_t value;
};

// Prime implicants by enumeration of cubes, then a greedy cover.
std::string render_dnf(const std::vector<std::string> &vars, const std::function<bool(std::uint64_t)> &f) {
    const std::size_t n = vars.size();
    const std::uint64_t full = std::uint64_t{1} << n;
    auto implies_f = [&](const Cube &c) {
        for (std::uint64_t i = 0; i < full; ++i)
            if ((i & c.care) == c.value && !f(i))
                return false;
        return true;
    };
    std::vector<Cube> primes;
    for (std::uint64_t care = 0; care < full; ++care) {
        for (std::uint64_t value = care;; value = (value - 1) & care) {
            Cube c{care, value};
            if (implies_f(c)) {
                bool prime = true;
                for (std::size_t j = 0; j < n && prime; ++j) {
                    std::uint64_t b = std::uint64_t{1} << j;
                    if (care & b)
                        prime = !implies_f({care & ~b, value & ~b});
                }
                if (prime)
                    primes.push_back(c);
            }
            if (value == 0)
                break;
        }
    }
    std::stable_sort(primes.begin(), primes.end(),
                     [](const Cube &a, const Cube &b) { return std::popcount(a.care) < std::popcount(b.care); });
    std::vector<bool> covered(full, false);
    for (std::uint64_t i = 0; i < full; ++i)
        covered[i] = !f(i);
    std::vector<std::string> terms;
    for (;;) {
        std::size_t best = primes.size(), best_gain = 0;
        for (std::size_t p = 0; p < primes.size(); ++p) {
            std::size_t gain = 0;
            for (std::uint64_t i = 0; i < full; ++i)
                if (!covered[i] && (i & primes[p].care) == primes[p].value)
                    ++gain;
            if (gain > best_gain) {
                best = p;
                best_gain = gain;
            }
        }
        if (best == primes.size())
            break;
        std::string term;
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t b = std::uint64_t{1} << j;
            if (!(primes[best].care & b))
                continue;
            if (!term.empty())
                term += "*";
            term += (primes[best].value & b) ? vars[j] : "(" + vars[j] + "<->0)";
        }
        terms.push_back(term.empty() ? "1" : term);
        for (std::uint64_t i = 0; i < full; ++i)
            if ((i & primes[best].care) == primes[best].value)
                covered[i] = true;
    }
    return join_terms(terms);
}

} // namespace

std::string BoolFun::to_string() const {
    if (vars_.empty())
        return value_at(0) ? "1" : "0";
    if (is_monotone()) {
        std::vector<std::string> terms;
        for (const auto &m : minimal_models()) {
            std::string t;
            for (const auto &v : m)
                t += (t.empty() ? "" : "*") + v;
            terms.push_back(t);
        }
        return join_terms(terms);
    }
    // f = (g <-> v) with g independent of v, preferring a monotone g.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = vars_.size(); j-- > 0;) {
            BoolFun g = restrict(vars_[j], true);
            if (!(restrict(vars_[j], false) == !g) || (pass == 0 && !g.is_monotone()))
                continue;
            std::string gs = g.to_string();
            if (gs.find("<->") != std::string::npos && gs.front() != '(')
                gs = "(" + gs + ")";
            return gs + " <-> " + vars_[j];
        }
    }
    return render_dnf(vars_, [this](std::uint64_t i) { return value_at(i); });
}

namespace {

class FormulaParser {
public:
    explicit FormulaParser(const std::string &text) : text_(text) {}

    BoolFun parse() {
        BoolFun f = parse_iff();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(const std::string &tok) {
        skip();
        if (text_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string &msg) {
        throw SyntaxError(msg, 1, static_cast<int>(pos_) + 1);
    }

    BoolFun parse_iff() {
        BoolFun lhs = parse_or();
        if (accept("<->"))
            return iff(lhs, parse_iff());
        return lhs;
    }

    BoolFun parse_or() {
        BoolFun f = parse_and();
        while (accept("+"))
            f = disj(f, parse_and());
        return f;
    }

    BoolFun parse_and() {
        BoolFun f = parse_atom();
        while (accept("*"))
            f = conj(f, parse_atom());
        return f;
    }

    BoolFun parse_atom() {
        skip();
        if (accept("(")) {
            BoolFun f = parse_iff();
            if (!accept(")"))
                fail("expected ')'");
            return f;
        }
        if (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
            bool v = text_[pos_++] == '1';
            return BoolFun::constant(v);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
            fail("expected a variable, constant or '('");
        return BoolFun::variable(text_.substr(start, pos_ - start));
    }

    const std::string &text_;
    std::size_t pos_ = 0;
};

} // namespace

BoolFun parse_formula(const std::string &text) { return FormulaParser(text).parse(); }

} // namespace terminfer
