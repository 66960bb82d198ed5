#include "nilreg/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nilreg {

namespace {

void require_bergman(const RewriteSystem& sys) {
    if (sys.kind() != PresentationKind::S)
        throw std::invalid_argument("shape words live in S, not " + sys.describe());
}

void require_n3(const RewriteSystem& sys, const char* what) {
    if (sys.kind() != PresentationKind::S || sys.nilpotency_degree() != 3)
        throw std::invalid_argument(std::string(what) + " requires S with n = 3, got " +
                                    sys.describe());
}

const Word& qx_word() {
    static const Word w = Word::letter(Letter::q) * Word::letter(Letter::x);
    return w;
}

const Word& xq_word() {
    static const Word w = Word::letter(Letter::x) * Word::letter(Letter::q);
    return w;
}

bool starts_q_ends_x(const Word& w) {
    return !w.empty() && w.first_letter() == Letter::q && w.last_letter() == Letter::x;
}

Word blocks_range(const Word& w, std::size_t begin, std::size_t end) {
    const auto& b = w.blocks();
    return Word(std::vector<Block>(b.begin() + static_cast<std::ptrdiff_t>(begin),
                                   b.begin() + static_cast<std::ptrdiff_t>(std::min(end, b.size()))));
}

}  // namespace

bool LeftShapeWord::conforms(const Word& w, const RewriteSystem& sys) {
    if (sys.kind() != PresentationKind::S || !is_basis_word(w, sys)) return false;
    return w.empty() || (w.first_letter() == Letter::q && w.last_letter() == Letter::q);
}

LeftShapeWord::LeftShapeWord(Word w, const RewriteSystem& sys) : word_(std::move(w)) {
    if (!conforms(word_, sys))
        throw std::invalid_argument(word_.to_string() + " is not of the form 1, q, q^2 or qzq");
}

bool RightShapeWord::conforms(const Word& w, const RewriteSystem& sys) {
    if (sys.kind() != PresentationKind::S || !is_basis_word(w, sys)) return false;
    return w.empty() || (w.first_letter() == Letter::x && w.last_letter() == Letter::x);
}

RightShapeWord::RightShapeWord(Word w, const RewriteSystem& sys) : word_(std::move(w)) {
    if (!conforms(word_, sys))
        throw std::invalid_argument(word_.to_string() + " is not of the form 1, x, x^2 or xzx");
}

std::vector<LeftShapeWord> left_shape_words(std::size_t max_len, const RewriteSystem& sys) {
    require_bergman(sys);
    std::vector<LeftShapeWord> out;
    for (Word& w : enumerate_basis(max_len, sys))
        if (LeftShapeWord::conforms(w, sys)) out.emplace_back(std::move(w), sys);
    return out;
}

std::vector<RightShapeWord> right_shape_words(std::size_t max_len, const RewriteSystem& sys) {
    require_bergman(sys);
    std::vector<RightShapeWord> out;
    for (Word& w : enumerate_basis(max_len, sys))
        if (RightShapeWord::conforms(w, sys)) out.emplace_back(std::move(w), sys);
    return out;
}

ReductionOutcome type_I(const LeftShapeWord& w, const RightShapeWord& y, const RewriteSystem& sys) {
    return concat_reduce(w.word(), y.word(), sys);
}

ReductionOutcome type_II(const LeftShapeWord& w, const RightShapeWord& y, const RewriteSystem& sys) {
    return reduce(w.word() * qx_word() * y.word(), sys);
}

const char* to_string(InterfaceClass c) {
    switch (c) {
        case InterfaceClass::Zero: return "zero";
        case InterfaceClass::Reduced: return "reduced";
        case InterfaceClass::NoReduction: return "no-reduction";
    }
    return "?";
}

InterfaceClass classify_interface(const Word& w, const Word& y, const RewriteSystem& sys) {
    if (!is_basis_word(w, sys) || !is_basis_word(y, sys))
        throw std::invalid_argument("classify_interface expects basis words");
    ReductionOutcome r = concat_reduce(w, y, sys);
    if (r.is_zero()) return InterfaceClass::Zero;
    return r.steps > 0 ? InterfaceClass::Reduced : InterfaceClass::NoReduction;
}

const char* to_string(TermKind k) {
    switch (k) {
        case TermKind::TypeI: return "type-I";
        case TermKind::TypeII: return "type-II";
        case TermKind::Boundary: return "boundary";
    }
    return "?";
}

std::size_t CSet::multiplicity(const Word& w) const {
    return static_cast<std::size_t>(std::count_if(
        occurrences.begin(), occurrences.end(), [&](const COccurrence& o) { return o.word == w; }));
}

std::vector<Word> CSet::distinct_words() const {
    std::vector<Word> out;
    for (const COccurrence& o : occurrences)
        if (std::find(out.begin(), out.end(), o.word) == out.end()) out.push_back(o.word);
    std::sort(out.begin(), out.end(),
              [](const Word& u, const Word& v) { return lex_compare(u, v) < 0; });
    return out;
}

CSet build_c_set(const LeftFamily& left, const RightFamily& right, const RewriteSystem& sys) {
    require_bergman(sys);
    auto validate = [](const auto& family, const char* side) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (family[i].first.is_zero())
                throw std::invalid_argument(std::string("zero scalar in ") + side);
            for (std::size_t j = 0; j < i; ++j)
                if (family[j].second.word() == family[i].second.word())
                    throw std::invalid_argument(std::string("repeated word ") +
                                                family[i].second.word().to_string() + " in " + side);
        }
    };
    validate(left, "L");
    validate(right, "R");

    CSet c;
    c.expansion_terms = 8 * left.size() * right.size();
    const Word one;
    for (const auto& [a, w] : left) {
        for (const auto& [b, y] : right) {
            for (int e1 = 0; e1 < 2; ++e1) {
                for (int e2 = 0; e2 < 2; ++e2) {
                    for (int e3 = 0; e3 < 2; ++e3) {
                        Word term = (e1 ? xq_word() : one) * w.word() * (e2 ? qx_word() : one) *
                                    y.word() * (e3 ? xq_word() : one);
                        ReductionOutcome r = reduce(term, sys);
                        if (r.is_zero() || !starts_q_ends_x(*r.result)) continue;
                        TermKind kind = (!e1 && !e2 && !e3) ? TermKind::TypeI
                                        : (!e1 && e2 && !e3) ? TermKind::TypeII
                                                             : TermKind::Boundary;
                        Scalar coeff = a * b;
                        if ((e1 + e2 + e3) % 2 == 1) coeff = -coeff;
                        c.occurrences.push_back(
                            {std::move(*r.result), w.word(), y.word(), kind, coeff, r.steps});
                    }
                }
            }
        }
    }
    return c;
}

LeftFamily unit_family(const std::vector<LeftShapeWord>& words, const Field& field) {
    LeftFamily out;
    for (const auto& w : words) out.emplace_back(field.one(), w);
    return out;
}

RightFamily unit_family(const std::vector<RightShapeWord>& words, const Field& field) {
    RightFamily out;
    for (const auto& y : words) out.emplace_back(field.one(), y);
    return out;
}

std::optional<TauForm> TauForm::match(const Word& w) {
    if (!starts_q_ends_x(w)) return std::nullopt;
    const auto& b = w.blocks();
    TauForm t;
    for (std::size_t k = 0; k < b.size(); k += 2) {
        // Blocks alternate q, x starting with q, and the word ends in x.
        if (b[k].letter != Letter::q || k + 1 >= b.size()) return std::nullopt;
        if (k > 0 && b[k].exponent < 2) return std::nullopt;
        t.q_exponents.push_back(b[k].exponent);
        const std::uint32_t xe = b[k + 1].exponent;
        bool last = k + 2 == b.size();
        if (last) {
            if (xe != 1 && xe != 2) return std::nullopt;
            t.tail = xe;
        } else if (xe != 2) {
            return std::nullopt;
        }
    }
    return t;
}

Word TauForm::word() const {
    Word w;
    for (std::size_t t = 0; t < q_exponents.size(); ++t) {
        w.push_back(Letter::q, q_exponents[t]);
        w.push_back(Letter::x, t + 1 == q_exponents.size() ? tail : 2);
    }
    return w;
}

Word find_tau(const CSet& c, const RewriteSystem& sys) {
    if (c.empty()) throw std::invalid_argument("find_tau on an empty C-set");
    const Word* best = &c.occurrences.front().word;
    for (const COccurrence& o : c.occurrences)
        if (lex_compare(o.word, *best) > 0) best = &o.word;
    if (sys.kind() == PresentationKind::S && sys.nilpotency_degree() == 3 && !TauForm::match(*best))
        throw std::logic_error("largest word " + best->to_string() + " of C is not of tau shape");
    return *best;
}

const char* to_string(TauFormKind f) {
    switch (f) {
        case TauFormKind::Form1: return "form-1";
        case TauFormKind::Form2: return "form-2";
        case TauFormKind::Form3: return "form-3";
    }
    return "?";
}

nlohmann::json TauOccurrence::to_json() const {
    nlohmann::json j;
    j["w"] = left.to_string();
    j["y"] = right.to_string();
    j["kind"] = to_string(kind);
    j["reduced"] = reduced;
    if (boundary) j["boundary"] = true;
    j["form"] = form ? nlohmann::json(to_string(*form)) : nlohmann::json(nullptr);
    if (form) j["r"] = r;
    if (form == TauFormKind::Form2) {
        j["a"] = a;
        j["b"] = b;
    }
    return j;
}

namespace {

struct FormCandidate {
    Word left;
    Word right;
    TauFormKind form;
    std::uint32_t r;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
};

// Every (w, y) the three admissible shapes allow for this tau.
std::vector<FormCandidate> form_candidates(const Word& tau, const TauForm& t) {
    std::vector<FormCandidate> out;
    const std::size_t groups = t.groups();
    const auto& i = t.q_exponents;  // i[r - 1] is the r-th q exponent
    auto later_exceeds_two = [&](std::size_t r) {
        for (std::size_t s = r; s < groups; ++s)
            if (i[s] > 2) return true;
        return false;
    };
    const Word x = Word::letter(Letter::x);

    for (std::uint32_t r = 1; r <= groups; ++r) {
        // tau = [blocks 0 .. 2r-2] [blocks 2r-1 ..]; the split sits right
        // after the r-th q group.
        const Word through_q = blocks_range(tau, 0, 2 * r - 1);
        const Word after_q = blocks_range(tau, 2 * r - 1, tau.blocks().size());
        out.push_back({through_q, after_q, TauFormKind::Form1, r});

        const Word before_group = blocks_range(tau, 0, 2 * r - 2);
        const std::uint32_t ir = i[r - 1];
        for (std::uint32_t a = 1; a + 1 <= ir; ++a) {
            const std::uint32_t b = ir - a + 1;
            if (!(b > 2 || (b == 2 && later_exceeds_two(r)))) continue;
            Word w = before_group;
            w.push_back(Letter::q, a);
            Word y = x;
            y.push_back(Letter::q, b);
            out.push_back({w, y * after_q, TauFormKind::Form2, r, a, b});
        }

        bool tail_all_two = !later_exceeds_two(r);
        if (r < groups && tail_all_two) {
            Word w = through_q;
            w.pop_back(1);
            out.push_back({w, x * blocks_range(tau, 2 * r, tau.blocks().size()),
                           TauFormKind::Form3, r});
        }
    }
    if (t.tail == 2) {
        Word w = blocks_range(tau, 0, 2 * groups - 1);
        w.pop_back(1);
        out.push_back({w, x, TauFormKind::Form3, static_cast<std::uint32_t>(groups)});
    }
    return out;
}

}  // namespace

std::vector<TauOccurrence> classify_tau_occurrences(const std::vector<LeftShapeWord>& left,
                                                    const std::vector<RightShapeWord>& right,
                                                    const Word& tau, const RewriteSystem& sys) {
    require_n3(sys, "tau classification");
    const CSet c = build_c_set(unit_family(left, Field::rationals()),
                               unit_family(right, Field::rationals()), sys);
    if (c.empty() || !(find_tau(c, sys) == tau))
        throw std::invalid_argument(tau.to_string() + " is not the largest word of C");
    const TauForm shape = *TauForm::match(tau);
    const std::vector<FormCandidate> candidates = form_candidates(tau, shape);

    std::vector<TauOccurrence> out;
    auto classify = [&](TauOccurrence occ) {
        occ.boundary = occ.left.empty() || occ.right.empty();
        if (!occ.boundary) {
            TauFormKind wanted = occ.kind == TermKind::TypeII ? TauFormKind::Form3
                                 : occ.reduced               ? TauFormKind::Form2
                                                             : TauFormKind::Form1;
            for (const FormCandidate& cand : candidates) {
                if (cand.form == wanted && cand.left == occ.left && cand.right == occ.right) {
                    occ.form = cand.form;
                    occ.r = cand.r;
                    occ.a = cand.a;
                    occ.b = cand.b;
                    break;
                }
            }
        }
        out.push_back(std::move(occ));
    };

    for (const LeftShapeWord& w : left) {
        for (const RightShapeWord& y : right) {
            ReductionOutcome one = type_I(w, y, sys);
            if (!one.is_zero() && *one.result == tau) {
                TauOccurrence occ;
                occ.left = w.word();
                occ.right = y.word();
                occ.kind = TermKind::TypeI;
                occ.reduced = one.steps > 0;
                classify(std::move(occ));
            }
            ReductionOutcome two = type_II(w, y, sys);
            if (!two.is_zero() && *two.result == tau) {
                TauOccurrence occ;
                occ.left = w.word();
                occ.right = y.word();
                occ.kind = TermKind::TypeII;
                occ.reduced = two.steps > 0;
                classify(std::move(occ));
            }
        }
    }
    return out;
}

TauAnalysis analyze_tau(const std::vector<LeftShapeWord>& left,
                        const std::vector<RightShapeWord>& right, const RewriteSystem& sys) {
    require_n3(sys, "tau analysis");
    TauAnalysis an;
    const Word q = Word::letter(Letter::q);
    const Word x = Word::letter(Letter::x);
    const Word one;
    auto has_left = [&](const Word& w) {
        return std::any_of(left.begin(), left.end(), [&](const auto& s) { return s.word() == w; });
    };
    auto has_right = [&](const Word& w) {
        return std::any_of(right.begin(), right.end(), [&](const auto& s) { return s.word() == w; });
    };
    an.q_in_left = has_left(q);
    an.x_in_right = has_right(x);

    const CSet c = build_c_set(unit_family(left, Field::rationals()),
                               unit_family(right, Field::rationals()), sys);
    if (has_left(one) && has_right(one)) {
        for (const COccurrence& o : c.occurrences) {
            if (!(o.word == qx_word())) continue;
            bool from_unit_pair = o.left.empty() && o.right.empty() && o.kind == TermKind::TypeII;
            bool from_q_x = o.left == q && o.right == x && o.kind == TermKind::TypeI;
            if (!from_unit_pair && !from_q_x) an.qx_cancellers_outside_q_x.push_back(o);
        }
    }
    if (c.empty()) return an;

    an.c_empty = false;
    an.tau = find_tau(c, sys);
    an.occurrences = classify_tau_occurrences(left, right, an.tau, sys);
    for (const TauOccurrence& occ : an.occurrences) {
        if (occ.boundary) {
            if (an.q_in_left && an.x_in_right) an.unclassified.push_back(occ);
            continue;
        }
        if (!occ.form) {
            an.unclassified.push_back(occ);
            continue;
        }
        if (*occ.form == TauFormKind::Form1) {
            ++an.form1;
            ReductionOutcome wqx = reduce(occ.left * qx_word(), sys);
            if (wqx.is_zero() || lex_compare(*wqx.result, an.tau) <= 0)
                an.closing_failures.push_back(occ);
        } else {
            ++an.form2_or_form3;
        }
    }
    return an;
}

nlohmann::json TauAnalysis::to_json() const {
    nlohmann::json j;
    j["c_empty"] = c_empty;
    if (c_empty) return j;
    j["tau"] = tau.to_string();
    j["q_in_L"] = q_in_left;
    j["x_in_R"] = x_in_right;
    j["occurrences"] = nlohmann::json::array();
    for (const auto& o : occurrences) j["occurrences"].push_back(o.to_json());
    j["form2_or_form3"] = form2_or_form3;
    return j;
}

nlohmann::json words_to_json(const std::vector<LeftShapeWord>& left) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& w : left) j.push_back(w.word().to_string());
    return j;
}

nlohmann::json words_to_json(const std::vector<RightShapeWord>& right) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& y : right) j.push_back(y.word().to_string());
    return j;
}

}  // namespace nilreg
