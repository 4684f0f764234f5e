#include "tptl/compile.hpp"

#include <optional>

#include "tptl/errors.hpp"
#include "tptl/normalize.hpp"

namespace tptl {

namespace {

// formula occurrence annotated with its location (temporal nodes only)
struct Occurrence {
    Formula f;
    int loc = -1;
    std::vector<Occurrence> kids;
};

class Compiler {
public:
    explicit Compiler(const Formula& f) {
        auto cs = clocks_of(f);
        out_.ata.clocks.assign(cs.begin(), cs.end());
        if (out_.ata.clocks.size() > kMaxClocks) throw std::invalid_argument("too many clocks");
        for (const auto& p : atoms_of(f)) out_.ata.alphabet.push_back(p);
        out_.ata.alphabet.push_back(kOtherLetter);
        add_location(f, "q0");
        root_ = annotate(f);
    }

    CompileOutput run() {
        Ata& a = out_.ata;
        const std::size_t letters = a.alphabet.size();
        a.delta.assign(a.locations.size(), std::vector<TransitionFormula>(letters));
        for (std::size_t l = 0; l < letters; ++l) {
            a.delta[0][l] = frm(*root_, a.alphabet[l]);
            fill(*root_, a.alphabet[l], l);
        }
        a.accepting.assign(a.locations.size(), false);
        for (std::size_t q = 1; q < a.locations.size(); ++q)
            a.accepting[q] = out_.location_formula[q].op() == Op::Globally;
        const Formula& f = out_.location_formula[0];
        const Formula& body = f.op() == Op::Freeze ? f.child() : f;
        a.accepting[0] = body.op() == Op::Globally;
        a.initial = 0;
        try {
            a.partition = validate_unilateral(a);
        } catch (const NoValidPartition&) {
            a.partition.reset();
        }
        return std::move(out_);
    }

private:
    int add_location(const Formula& f, std::string name) {
        out_.ata.locations.push_back(std::move(name));
        out_.location_formula.push_back(f);
        return static_cast<int>(out_.ata.locations.size() - 1);
    }

    Occurrence annotate(const Formula& f) {
        Occurrence o{f, -1, {}};
        if (f.is_temporal()) o.loc = add_location(f, "q" + std::to_string(out_.ata.locations.size()));
        for (const auto& k : f.kids()) o.kids.push_back(annotate(k));
        return o;
    }

    ClockMask mask(const ClockSet& ys) const {
        ClockMask m = 0;
        for (const auto& y : ys) m |= 1u << out_.ata.clock_index(y);
        return m;
    }

    TransitionFormula frm(const Occurrence& o, const std::string& letter) const {
        const Formula& f = o.f;
        switch (f.op()) {
            case Op::Atom: return f.name() == letter ? TransitionFormula::top() : TransitionFormula::bottom();
            case Op::NegAtom: return f.name() == letter ? TransitionFormula::bottom() : TransitionFormula::top();
            case Op::Top: return TransitionFormula::top();
            case Op::Bottom: return TransitionFormula::bottom();
            case Op::Constraint: return TransitionFormula::guard(out_.ata.clock_index(f.clock()), f.interval());
            case Op::And: return TransitionFormula::conj({frm(o.kids[0], letter), frm(o.kids[1], letter)});
            case Op::Or: return TransitionFormula::disj({frm(o.kids[0], letter), frm(o.kids[1], letter)});
            case Op::Freeze:
                if (o.kids[0].loc < 0) throw NotNormalized("freeze does not scope a temporal formula: " + f.to_string());
                return TransitionFormula::bind(mask(f.clocks()), o.kids[0].loc);
            default: return TransitionFormula::location(o.loc);
        }
    }

    void fill(const Occurrence& o, const std::string& letter, std::size_t l) {
        if (o.loc >= 0) {
            TransitionFormula self = TransitionFormula::location(o.loc);
            TransitionFormula& d = out_.ata.delta[o.loc][l];
            switch (o.f.op()) {
                case Op::Until:
                    d = TransitionFormula::disj(
                        {frm(o.kids[1], letter), TransitionFormula::conj({frm(o.kids[0], letter), self})});
                    break;
                case Op::Globally: d = TransitionFormula::conj({frm(o.kids[0], letter), self}); break;
                case Op::Finally: d = TransitionFormula::disj({frm(o.kids[0], letter), self}); break;
                case Op::Next: d = frm(o.kids[0], letter); break;
                default: break;
            }
        }
        for (const auto& k : o.kids) fill(k, letter, l);
    }

    CompileOutput out_;
    std::optional<Occurrence> root_;
};

}  // namespace

CompileOutput compile_tptl_to_vwata(const Formula& f) {
    if (!f.is_closed()) throw OpenFormula("formula has free clocks: " + f.to_string());
    if (!is_normalized(f)) throw NotNormalized("formula is not pushed and strictly closed: " + f.to_string());
    return Compiler(f).run();
}

TimedWord alphabet_projection(const Ata& a, const TimedWord& w) {
    TimedWord out;
    for (const auto& e : w.entries()) {
        int l = a.letter_index(e.symbol);
        if (l < 0) throw std::invalid_argument("symbol '" + e.symbol + "' is not readable by the automaton");
        out.push_back({a.alphabet[l], e.time});
    }
    return out;
}

}  // namespace tptl
