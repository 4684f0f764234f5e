#include "tptl/corpus.hpp"

#include <algorithm>

#include "tptl/fragment.hpp"

namespace tptl {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1))];
}

Interval one_sided(Rng& rng, std::int64_t c) {
    switch (uniform(rng, 0, 3)) {
        case 0: return Interval::at_most(uniform(rng, 0, c));
        case 1: return Interval::below(uniform(rng, 1, std::max<std::int64_t>(1, c)));
        case 2: return Interval::at_least(uniform(rng, 1, std::max<std::int64_t>(1, c)));
        default: return Interval::above(uniform(rng, 0, c));
    }
}

class FormulaGen {
public:
    FormulaGen(Rng& rng, const FormulaGenOptions& o) : rng_(rng), o_(o) {}

    Formula gen(int depth, const std::vector<std::string>& bound) {
        if (depth <= 0 || chance(rng_, 0.3)) return leaf(bound);
        switch (uniform(rng_, 0, 7)) {
            case 0: return Formula::conj(gen(depth - 1, bound), gen(depth - 1, bound));
            case 1: return Formula::disj(gen(depth - 1, bound), gen(depth - 1, bound));
            case 2: return Formula::until(gen(depth - 1, bound), gen(depth - 1, bound));
            case 3: return Formula::globally(gen(depth - 1, bound));
            case 4: return Formula::finally(gen(depth - 1, bound));
            case 5: return Formula::next(gen(depth - 1, bound));
            default: return freeze(depth, bound);
        }
    }

    Formula freeze(int depth, std::vector<std::string> bound) {
        ClockSet ys;
        for (const auto& c : o_.clocks)
            if (chance(rng_, 0.5)) ys.push_back(c);
        if (ys.empty()) ys.push_back(pick(rng_, o_.clocks));
        for (const auto& y : ys)
            if (std::find(bound.begin(), bound.end(), y) == bound.end()) bound.push_back(y);
        return Formula::freeze(ys, gen(depth - 1, bound));
    }

private:
    Formula leaf(const std::vector<std::string>& bound) {
        if (!bound.empty() && chance(rng_, 0.35)) return Formula::constraint(pick(rng_, bound), one_sided(rng_, o_.max_constant));
        if (chance(rng_, 0.05)) return Formula::top();
        const std::string& a = pick(rng_, o_.atoms);
        return chance(rng_, 0.25) ? Formula::neg_atom(a) : Formula::atom(a);
    }

    Rng& rng_;
    const FormulaGenOptions& o_;
};

}  // namespace

Formula random_fragment_formula(Rng& rng, const FormulaGenOptions& opts) {
    FormulaGen g(rng, opts);
    while (true) {
        Formula f = chance(rng, 0.75) ? g.freeze(opts.max_depth, {}) : g.gen(opts.max_depth, {});
        if (!f.is_closed() || formula_size(f) > opts.max_size) continue;
        if (!classify(f).in_fragment) continue;
        return f;
    }
}

TimedWord random_word(Rng& rng, const std::vector<std::string>& letters, const WordGenOptions& opts) {
    auto len = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(opts.min_length),
                                                static_cast<std::int64_t>(opts.max_length)));
    std::vector<Rational> times;
    for (std::size_t i = 0; i < len; ++i) {
        std::int64_t d = uniform(rng, 1, opts.max_denominator);
        times.push_back(Rational(uniform(rng, 0, opts.max_time * d), d));
    }
    std::sort(times.begin(), times.end());
    TimedWord w;
    for (const auto& t : times) w.push_back({pick(rng, letters), t});
    return w;
}

std::vector<std::string> word_letters(const Formula& f) {
    auto atoms = atoms_of(f);
    std::vector<std::string> out(atoms.begin(), atoms.end());
    std::string other = "z";
    while (atoms.count(other)) other += "z";
    out.push_back(other);
    return out;
}

MitlFormula random_mitl(Rng& rng, int depth, std::int64_t max_constant, const std::vector<std::string>& atoms) {
    auto interval = [&]() {
        if (chance(rng, 0.25)) return Interval::at_least(0);
        std::int64_t l = uniform(rng, 0, max_constant);
        bool lc = chance(rng, 0.5);
        bool unbounded = chance(rng, 0.3);
        if (unbounded) return Interval{l, std::nullopt, lc, false};
        std::int64_t u = uniform(rng, l + 1, l + 1 + max_constant);
        return Interval{l, u, lc, chance(rng, 0.5)};
    };
    if (depth <= 0 || chance(rng, 0.25)) {
        if (chance(rng, 0.05)) return MitlFormula::top();
        return MitlFormula::atom(pick(rng, atoms));
    }
    switch (uniform(rng, 0, 5)) {
        case 0: return MitlFormula::negation(random_mitl(rng, depth - 1, max_constant, atoms));
        case 1: return MitlFormula::conj(random_mitl(rng, depth - 1, max_constant, atoms), random_mitl(rng, depth - 1, max_constant, atoms));
        case 2: return MitlFormula::disj(random_mitl(rng, depth - 1, max_constant, atoms), random_mitl(rng, depth - 1, max_constant, atoms));
        case 3: return MitlFormula::until(interval(), random_mitl(rng, depth - 1, max_constant, atoms), random_mitl(rng, depth - 1, max_constant, atoms));
        case 4: return MitlFormula::finally(interval(), random_mitl(rng, depth - 1, max_constant, atoms));
        default: return MitlFormula::globally(interval(), random_mitl(rng, depth - 1, max_constant, atoms));
    }
}

std::vector<CorpusEntry> fragment_corpus(std::uint64_t seed, std::size_t formulas, std::size_t words_per_formula,
                                         const FormulaGenOptions& fopts, const WordGenOptions& wopts) {
    Rng rng(seed);
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < formulas; ++i) {
        Formula f = random_fragment_formula(rng, fopts);
        CorpusEntry e{f, {}};
        auto letters = word_letters(f);
        for (std::size_t k = 0; k < words_per_formula; ++k) e.words.push_back(random_word(rng, letters, wopts));
        out.push_back(std::move(e));
    }
    return out;
}

nlohmann::json corpus_to_json(const std::vector<CorpusEntry>& corpus, std::uint64_t seed) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& e : corpus) {
        nlohmann::json words = nlohmann::json::array();
        for (const auto& w : e.words) words.push_back(w.to_json());
        items.push_back({{"formula", e.formula.to_string()}, {"size", formula_size(e.formula)}, {"words", words}});
    }
    return {{"seed", seed}, {"entries", items}};
}

}  // namespace tptl
