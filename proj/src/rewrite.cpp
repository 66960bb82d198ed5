#include "nilreg/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilreg {

RewriteSystem RewriteSystem::bergman(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("nilpotency degree n must be >= 2");
    return RewriteSystem(PresentationKind::S, n);
}

RewriteSystem RewriteSystem::nilpotent_free(std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("nilpotency degree m must be >= 1");
    return RewriteSystem(PresentationKind::R, m);
}

std::vector<Rule> RewriteSystem::rules() const {
    std::vector<Rule> out;
    if (kind_ == PresentationKind::S) {
        Word x = Word::letter(Letter::x);
        Word q = Word::letter(Letter::q);
        out.push_back({Word::letter(Letter::x, degree_), std::nullopt});
        out.push_back({x * q * x, x});
        out.push_back({q * x * q, q});
    } else {
        out.push_back({Word::letter(Letter::a, degree_), std::nullopt});
    }
    return out;
}

void RewriteSystem::check_alphabet(const Word& w) const {
    if (!w.empty() && alphabet_of(w.first_letter()) != alphabet())
        throw std::invalid_argument("word " + w.to_string() +
                                    " is not over the alphabet of " + describe());
}

std::string RewriteSystem::describe() const {
    if (kind_ == PresentationKind::S)
        return "S(n=" + std::to_string(degree_) + ")";
    return "R(m=" + std::to_string(degree_) + ")";
}

namespace {

// Left-to-right normalizer. The stack always holds a normal word, so a new
// redex can only end at the letter being pushed.
class Normalizer {
  public:
    explicit Normalizer(const RewriteSystem& sys)
        : nil_(sys.nilpotent_letter()),
          degree_(sys.nilpotency_degree()),
          bergman_(sys.kind() == PresentationKind::S) {}

    void push(Letter s, std::uint32_t e) {
        if (zero_ || e == 0) return;
        const auto& blocks = stack_.blocks();
        if (bergman_ && blocks.size() >= 2 && blocks.back().letter != s &&
            blocks.back().exponent == 1 && blocks[blocks.size() - 2].letter == s) {
            // s t s -> s
            stack_.pop_back(1);
            ++steps_;
            e -= 1;
            if (e == 0) return;
        }
        stack_.push_back(s, e);
        if (s == nil_ && stack_.back().exponent >= degree_) {
            zero_ = true;
            ++steps_;
        }
    }

    void push(const Word& w) {
        for (const Block& b : w.blocks()) push(b.letter, b.exponent);
    }

    ReductionOutcome outcome() && {
        if (zero_) return {std::nullopt, steps_};
        return {std::move(stack_), steps_};
    }

  private:
    Letter nil_;
    std::uint32_t degree_;
    bool bergman_;
    Word stack_;
    bool zero_ = false;
    std::uint32_t steps_ = 0;
};

}  // namespace

ReductionOutcome reduce(const Word& w, const RewriteSystem& sys) {
    sys.check_alphabet(w);
    Normalizer norm(sys);
    norm.push(w);
    return std::move(norm).outcome();
}

ReductionOutcome concat_reduce(const Word& u, const Word& v, const RewriteSystem& sys) {
    sys.check_alphabet(u);
    sys.check_alphabet(v);
    Normalizer norm(sys);
    norm.push(u);
    norm.push(v);
    return std::move(norm).outcome();
}

bool is_basis_word(const Word& w, const RewriteSystem& sys) {
    if (w.empty()) return true;
    if (alphabet_of(w.first_letter()) != sys.alphabet()) return false;
    const auto& blocks = w.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        if (b.letter == sys.nilpotent_letter() && b.exponent >= sys.nilpotency_degree())
            return false;
        bool interior = i > 0 && i + 1 < blocks.size();
        if (sys.kind() == PresentationKind::S && interior && b.exponent < 2) return false;
    }
    return true;
}

std::vector<Word> enumerate_basis(std::size_t max_len, const RewriteSystem& sys) {
    // Normal forms are closed under taking prefixes, so grow layer by layer.
    const Letter lo = sys.alphabet() == Alphabet::xq ? Letter::x : Letter::a;
    const Letter hi = sys.alphabet() == Alphabet::xq ? Letter::q : Letter::b;
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer) {
            for (Letter l : {lo, hi}) {
                Word ext = w;
                ext.push_back(l);
                if (is_basis_word(ext, sys)) next.push_back(std::move(ext));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::vector<RedexSite> find_redexes(const std::vector<Letter>& w,
                                    const std::vector<Rule>& rules) {
    std::vector<RedexSite> sites;
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const std::vector<Letter> lhs = rules[r].lhs.letters();
        if (lhs.size() > w.size()) continue;
        for (std::size_t p = 0; p + lhs.size() <= w.size(); ++p) {
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(p)))
                sites.push_back({r, p});
        }
    }
    return sites;
}

std::optional<std::vector<Letter>> apply_rule(const std::vector<Letter>& w,
                                              const Rule& rule,
                                              std::size_t position) {
    if (!rule.rhs) return std::nullopt;
    const std::size_t len = rule.lhs.length();
    std::vector<Letter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(position));
    const std::vector<Letter> rhs = rule.rhs->letters();
    out.insert(out.end(), rhs.begin(), rhs.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(position + len), w.end());
    return out;
}

ReductionOutcome reduce_random_strategy(const Word& w, const RewriteSystem& sys,
                                        std::mt19937_64& rng) {
    sys.check_alphabet(w);
    const std::vector<Rule> rules = sys.rules();
    std::vector<Letter> cur = w.letters();
    std::uint32_t steps = 0;
    for (;;) {
        std::vector<RedexSite> sites = find_redexes(cur, rules);
        if (sites.empty()) return {Word::from_letters(cur), steps};
        std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
        const RedexSite site = sites[pick(rng)];
        ++steps;
        auto next = apply_rule(cur, rules[site.rule], site.position);
        if (!next) return {std::nullopt, steps};
        cur = std::move(*next);
    }
}

namespace {

ReductionOutcome branch(const std::vector<Letter>& overlap, const Rule& rule,
                        std::size_t position, const RewriteSystem& sys) {
    auto once = apply_rule(overlap, rule, position);
    if (!once) return {std::nullopt, 1};
    ReductionOutcome rest = reduce(Word::from_letters(*once), sys);
    rest.steps += 1;
    return rest;
}

}  // namespace

std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys) {
    const std::vector<Rule> rules = sys.rules();
    std::vector<CriticalPair> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const std::vector<Letter> li = rules[i].lhs.letters();
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const std::vector<Letter> lj = rules[j].lhs.letters();
            // Proper overlaps: a suffix of li equals a prefix of lj.
            for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
                if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin()))
                    continue;
                std::vector<Letter> overlap = li;
                overlap.insert(overlap.end(), lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
                out.push_back({Word::from_letters(overlap), i, j,
                               branch(overlap, rules[i], 0, sys),
                               branch(overlap, rules[j], li.size() - k, sys)});
            }
            // Inclusions: lj sits strictly inside li.
            if (i != j && lj.size() < li.size()) {
                for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
                    if (!std::equal(lj.begin(), lj.end(), li.begin() + static_cast<std::ptrdiff_t>(p)))
                        continue;
                    out.push_back({rules[i].lhs, i, j, branch(li, rules[i], 0, sys),
                                   branch(li, rules[j], p, sys)});
                }
            }
        }
    }
    return out;
}

}  // namespace nilreg
