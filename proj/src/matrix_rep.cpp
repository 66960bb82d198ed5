#include "nilreg/matrix_rep.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "parallel.hpp"

namespace nilreg {

namespace {

constexpr std::uint32_t kCachedPowers = 8;

AlgebraElement r_word(const RewriteSystem& ring, const Field& f, const char* text) {
    return AlgebraElement::of_word(ring, f, parse_word(text));
}

AlgebraElement one_minus_ba(const RewriteSystem& ring, const Field& f) {
    return AlgebraElement::one(ring, f) - r_word(ring, f, "b a");
}

void require_same(const MatrixElement& p, const MatrixElement& r) {
    if (!(p.ring() == r.ring()) || !(p.field() == r.field()))
        throw std::invalid_argument("matrix operands over different rings or fields");
}

}  // namespace

RewriteSystem entry_ring(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    return RewriteSystem::nilpotent_free(n - 1);
}

MatrixElement::MatrixElement(RewriteSystem ring, Field field)
    : ring_(ring), field_(field), entries_(4, AlgebraElement(ring, field)) {
    if (ring.kind() != PresentationKind::R)
        throw std::invalid_argument("matrix entries must lie in R, got " + ring.describe());
}

MatrixElement MatrixElement::identity(RewriteSystem ring, Field field) {
    MatrixElement m(ring, field);
    m.at(0, 0) = AlgebraElement::one(ring, field);
    m.at(1, 1) = AlgebraElement::one(ring, field);
    return m;
}

MatrixElement MatrixElement::unit(std::size_t i, std::size_t j, const AlgebraElement& r) {
    MatrixElement m(r.system(), r.field());
    m.at(i, j) = r;
    return m;
}

bool MatrixElement::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

std::size_t MatrixElement::degree() const {
    std::size_t d = 0;
    for (const auto& e : entries_) d = std::max(d, e.degree());
    return d;
}

MatrixElement& MatrixElement::operator+=(const MatrixElement& o) {
    require_same(*this, o);
    for (std::size_t k = 0; k < 4; ++k) entries_[k] += o.entries_[k];
    return *this;
}

MatrixElement& MatrixElement::operator-=(const MatrixElement& o) {
    require_same(*this, o);
    for (std::size_t k = 0; k < 4; ++k) entries_[k] -= o.entries_[k];
    return *this;
}

MatrixElement MatrixElement::scaled(const Scalar& c) const {
    MatrixElement out = *this;
    for (auto& e : out.entries_) e = e.scaled(c);
    return out;
}

MatrixElement operator*(const MatrixElement& p, const MatrixElement& r) {
    require_same(p, r);
    MatrixElement out(p.ring_, p.field_);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                if (p.at(i, k).is_zero() || r.at(k, j).is_zero()) continue;
                out.at(i, j) += p.at(i, k) * r.at(k, j);
            }
    return out;
}

bool operator==(const MatrixElement& p, const MatrixElement& r) {
    return p.ring_ == r.ring_ && p.field_ == r.field_ && p.entries_ == r.entries_;
}

std::string MatrixElement::to_string() const {
    return "[[" + at(0, 0).to_string() + ", " + at(0, 1).to_string() + "], [" +
           at(1, 0).to_string() + ", " + at(1, 1).to_string() + "]]";
}

nlohmann::json MatrixElement::to_json() const {
    return nlohmann::json::array({nlohmann::json::array({at(0, 0).to_json(), at(0, 1).to_json()}),
                                  nlohmann::json::array({at(1, 0).to_json(), at(1, 1).to_json()})});
}

MatrixElement MatrixElement::from_json(const nlohmann::json& j, RewriteSystem ring, Field field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw std::invalid_argument("matrix JSON must be a 2x2 nested array");
    MatrixElement m(ring, field);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) m.at(i, k) = AlgebraElement::from_json(j[i][k], ring, field);
    return m;
}

MatrixElement parse_matrix(std::string_view text, RewriteSystem ring, Field field) {
    MatrixElement m(ring, field);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos), pos);
        ++pos;
    };
    auto entry = [&](char terminator) {
        const std::size_t start = pos;
        const std::size_t end = text.find(terminator, start);
        if (end == std::string_view::npos)
            throw ParseError(std::string("expected '") + terminator + "' after position " +
                                 std::to_string(start), text.size());
        try {
            AlgebraElement e = parse_element(text.substr(start, end - start), ring, field);
            pos = end;
            return e;
        } catch (const ParseError& err) {
            throw ParseError(std::string("matrix entry: ") + err.what(), start + err.position());
        }
    };
    expect('[');
    for (std::size_t i = 0; i < 2; ++i) {
        if (i) expect(',');
        expect('[');
        m.at(i, 0) = entry(',');
        expect(',');
        m.at(i, 1) = entry(']');
        expect(']');
    }
    expect(']');
    skip();
    if (pos != text.size())
        throw ParseError("trailing input at position " + std::to_string(pos), pos);
    return m;
}

MatrixElement generator_X(RewriteSystem ring, Field field) {
    MatrixElement m(ring, field);
    m.at(0, 0) = r_word(ring, field, "a");
    m.at(1, 0) = AlgebraElement::one(ring, field);
    return m;
}

MatrixElement generator_Q(RewriteSystem ring, Field field) {
    MatrixElement m(ring, field);
    m.at(0, 0) = r_word(ring, field, "b");
    m.at(0, 1) = one_minus_ba(ring, field);
    return m;
}

DegreeBoundExceeded::DegreeBoundExceeded(std::size_t needed, std::size_t cap)
    : std::runtime_error("membership solve needs degree " + std::to_string(needed) +
                         ", above the cap " + std::to_string(cap)),
      needed_(needed),
      cap_(cap) {}

nlohmann::json TMembership::to_json() const {
    nlohmann::json j = {{"in_T", in_T}};
    if (s12) j["s12"] = s12->to_string();
    if (c22) j["c22"] = c22->to_string();
    if (s22) j["s22"] = s22->to_string();
    if (!reason.empty()) j["reason"] = reason;
    return j;
}

std::optional<IdealSolution> solve_in_ideal(const AlgebraElement& entry, bool allow_constant,
                                            std::size_t max_degree) {
    const RewriteSystem& ring = entry.system();
    const Field& f = entry.field();
    if (ring.kind() != PresentationKind::R)
        throw std::invalid_argument("ideal membership is over R");
    const std::size_t bound = entry.degree() + 2;
    if (bound > max_degree) throw DegreeBoundExceeded(bound, max_degree);

    const AlgebraElement gen = one_minus_ba(ring, f);
    const std::vector<Word> unknowns = enumerate_basis(bound, ring);
    std::vector<AlgebraElement> columns;
    if (allow_constant) columns.push_back(AlgebraElement::one(ring, f));
    for (const Word& u : unknowns) columns.push_back(AlgebraElement::of_word(ring, f, u) * gen);

    std::map<Word, std::size_t, LengthLexLess> rows;
    auto index_terms = [&](const AlgebraElement& e) {
        for (const auto& [w, c] : e.terms()) rows.emplace(w, rows.size());
    };
    index_terms(entry);
    for (const auto& col : columns) index_terms(col);

    ScalarMatrix a(f, rows.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [w, c] : columns[j].terms()) a(rows.at(w), j) = c;
    std::vector<Scalar> rhs(rows.size(), f.zero());
    for (const auto& [w, c] : entry.terms()) rhs[rows.at(w)] = c;

    auto x = solve(a, rhs);
    if (!x) return std::nullopt;
    IdealSolution out{f.zero(), AlgebraElement(ring, f)};
    std::size_t k = 0;
    if (allow_constant) out.constant = (*x)[k++];
    for (const Word& u : unknowns) {
        const Scalar& c = (*x)[k++];
        if (!c.is_zero()) out.s.add_term(u, c);
    }
    return out;
}

TMembership membership_T(const MatrixElement& m, std::size_t max_degree) {
    TMembership out;
    auto s12 = solve_in_ideal(m.at(0, 1), false, max_degree);
    if (!s12) {
        out.reason = "entry (1,2) is not in R(1 - ba)";
        return out;
    }
    auto s22 = solve_in_ideal(m.at(1, 1), true, max_degree);
    if (!s22) {
        out.reason = "entry (2,2) is not in F + R(1 - ba)";
        return out;
    }
    out.in_T = true;
    out.s12 = s12->s;
    out.c22 = s22->constant;
    out.s22 = s22->s;
    return out;
}

PhiMap::PhiMap(std::uint32_t n, Field field)
    : source_(RewriteSystem::bergman(n)), ring_(entry_ring(n)), field_(field) {
    const MatrixElement gens[2] = {generator_X(ring_, field_), generator_Q(ring_, field_)};
    for (std::size_t g = 0; g < 2; ++g) {
        powers_[g].push_back(MatrixElement::identity(ring_, field_));
        for (std::uint32_t k = 1; k <= kCachedPowers; ++k) powers_[g].push_back(powers_[g].back() * gens[g]);
    }
}

const MatrixElement& PhiMap::generator_power(Letter l, std::uint32_t e) const {
    return powers_[l == Letter::q ? 1 : 0][e];
}

MatrixElement PhiMap::of_word(const Word& w) const {
    source_.check_alphabet(w);
    MatrixElement out = MatrixElement::identity(ring_, field_);
    for (const Block& b : w.blocks()) {
        std::uint32_t e = b.exponent;
        while (e > 0) {
            const std::uint32_t step = std::min(e, kCachedPowers);
            out = out * generator_power(b.letter, step);
            e -= step;
        }
    }
    return out;
}

MatrixElement PhiMap::operator()(const AlgebraElement& e) const {
    if (!(e.system() == source_) || !(e.field() == field_))
        throw std::invalid_argument("phi expects an element of " + source_.describe() + " over " +
                                    field_.name());
    MatrixElement out(ring_, field_);
    for (const auto& [w, c] : e.terms()) out += of_word(w).scaled(c);
    return out;
}

MatrixElement phi(const AlgebraElement& e) {
    if (e.system().kind() != PresentationKind::S)
        throw std::invalid_argument("phi is defined on S");
    return PhiMap(e.system().nilpotency_degree(), e.field())(e);
}

ScalarMatrix pi_eval(const AlgebraElement& r) {
    const RewriteSystem& ring = r.system();
    if (ring.kind() != PresentationKind::R || ring.nilpotency_degree() < 2)
        throw std::invalid_argument("pi is defined on R with a^m = 0, m >= 2");
    const Field& f = r.field();
    ScalarMatrix pa(f, 2, 2), pb(f, 2, 2);
    pa(1, 0) = f.one();
    pb(0, 1) = f.one();
    ScalarMatrix out(f, 2, 2);
    for (const auto& [w, c] : r.terms()) {
        ScalarMatrix term = ScalarMatrix::identity(f, 2);
        for (Letter l : w.letters()) term = term * (l == Letter::a ? pa : pb);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) out(i, j) += c * term(i, j);
    }
    return out;
}

namespace {

struct CoordinateLess {
    bool operator()(const std::pair<std::size_t, Word>& u, const std::pair<std::size_t, Word>& v) const {
        if (u.first != v.first) return u.first < v.first;
        return LengthLexLess{}(u.second, v.second);
    }
};

// Coordinates of a list of matrices over (position, R-word), as columns.
ScalarMatrix flatten(const std::vector<MatrixElement>& images, const Field& f) {
    std::map<std::pair<std::size_t, Word>, std::size_t, CoordinateLess> rows;
    for (const auto& m : images)
        for (std::size_t p = 0; p < 4; ++p)
            for (const auto& [w, c] : m.at(p / 2, p % 2).terms()) rows.emplace(std::pair{p, w}, rows.size());
    ScalarMatrix out(f, rows.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (std::size_t p = 0; p < 4; ++p)
            for (const auto& [w, c] : images[j].at(p / 2, p % 2).terms()) out(rows.at({p, w}), j) = c;
    return out;
}

bool only_entry(const MatrixElement& m, std::size_t i, std::size_t j) {
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            if ((a != i || b != j) && !m.at(a, b).is_zero()) return false;
    return true;
}

// Rank of the span of S elements, over their word coordinates.
std::size_t element_rank(const std::vector<AlgebraElement>& elems, const Field& f) {
    std::map<Word, std::size_t, LengthLexLess> rows;
    for (const auto& e : elems)
        for (const auto& [w, c] : e.terms()) rows.emplace(w, rows.size());
    ScalarMatrix m(f, rows.size(), elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j)
        for (const auto& [w, c] : elems[j].terms()) m(rows.at(w), j) = c;
    return rank(m);
}

}  // namespace

VerificationReport verify_phi_faithful(std::size_t max_len, const Field& f, std::uint32_t n,
                                       unsigned workers) {
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "phi-faithful";
    rep.parameters = {{"n", n}, {"max_len", max_len}, {"field", f.name()}};

    const PhiMap map(n, f);
    const RewriteSystem& sys = map.source();
    const RewriteSystem& ring = map.ring();
    const std::vector<Word> basis = enumerate_basis(max_len, sys);

    std::vector<MatrixElement> images(basis.size(), MatrixElement(ring, f));
    detail::parallel_chunks(basis.size(), workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; ++k) images[k] = map.of_word(basis[k]);
    });
    rep.candidates_examined = basis.size();

    ScalarMatrix flat = flatten(images, f);
    const std::vector<std::size_t> pivots = row_reduce(flat);
    rep.details = {{"basis_words", basis.size()}, {"coordinates", flat.rows()}, {"rank", pivots.size()}};

    if (pivots.size() < basis.size()) {
        // First free column gives a kernel vector of the reduced system.
        std::size_t free_col = 0;
        for (std::size_t p = 0; p < pivots.size() && pivots[p] == free_col; ++p) ++free_col;
        AlgebraElement kernel(sys, f);
        kernel.add_term(basis[free_col], f.one());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!flat(r, free_col).is_zero()) kernel.add_term(basis[pivots[r]], -flat(r, free_col));
        rep.fail_with({{"kernel_element", kernel.to_string()},
                       {"image_is_zero", map(kernel).is_zero()}});
    }

    if (n < 3) {
        rep.elapsed_ms = clock.elapsed_ms();
        return rep;
    }

    // Corner checks.
    const AlgebraElement one = AlgebraElement::one(sys, f);
    const AlgebraElement qx = AlgebraElement::of_word(sys, f, parse_word("q x"));
    const AlgebraElement e_bar = one - qx;
    const AlgebraElement one_r = AlgebraElement::one(ring, f);
    if (!(map(qx) == MatrixElement::unit(0, 0, one_r)))
        rep.fail_with({{"corner", "phi(qx) != e11"}, {"image", map(qx).to_string()}});
    if (!(map(e_bar) == MatrixElement::unit(1, 1, one_r)))
        rep.fail_with({{"corner", "phi(1 - qx) != e22"}, {"image", map(e_bar).to_string()}});

    std::size_t e11_checked = 0;
    for (const Word& w : basis) {
        const AlgebraElement c = qx * AlgebraElement::of_word(sys, f, w) * qx;
        const MatrixElement img = map(c);
        ++e11_checked;
        if (!only_entry(img, 0, 0))
            rep.fail_with({{"corner", "qx S qx image leaves the e11 corner"}, {"word", w.to_string()},
                           {"image", img.to_string()}});
    }

    // a -> qx^2, b -> q^2x identifies R with qx S qx.
    const AlgebraElement to_a = AlgebraElement::of_word(sys, f, parse_word("q x^2"));
    const AlgebraElement to_b = AlgebraElement::of_word(sys, f, parse_word("q^2 x"));
    const std::size_t corner_len = std::min<std::size_t>(max_len, 4);
    const std::vector<Word> r_words = enumerate_basis(corner_len, ring);
    std::vector<AlgebraElement> lifted;
    for (const Word& u : r_words) {
        AlgebraElement s = qx;
        for (Letter l : u.letters()) s = s * (l == Letter::a ? to_a : to_b);
        lifted.push_back(s);
        const MatrixElement expected = MatrixElement::unit(0, 0, AlgebraElement::of_word(ring, f, u));
        if (!(map(s) == expected))
            rep.fail_with({{"corner", "phi of the lifted R-word is not e11 u"}, {"u", u.to_string()},
                           {"image", map(s).to_string()}});
    }
    const std::size_t lifted_rank = element_rank(lifted, f);
    if (lifted_rank != r_words.size())
        rep.fail_with({{"corner", "lifted R-words are dependent in S"}, {"rank", lifted_rank}});

    // (1 - qx) S (1 - qx) against e22 (F + I), compared with the brute-force corner.
    std::vector<AlgebraElement> bar_corner;
    std::vector<AlgebraElement> bar_entries;
    std::size_t membership_checked = 0;
    for (const Word& w : enumerate_basis(corner_len, sys)) {
        const AlgebraElement c = e_bar * AlgebraElement::of_word(sys, f, w) * e_bar;
        if (c.is_zero()) continue;
        bar_corner.push_back(c);
        const MatrixElement img = map(c);
        if (!only_entry(img, 1, 1)) {
            rep.fail_with({{"corner", "(1-qx) S (1-qx) image leaves the e22 corner"},
                           {"word", w.to_string()}, {"image", img.to_string()}});
            continue;
        }
        bar_entries.push_back(img.at(1, 1));
        ++membership_checked;
        if (!solve_in_ideal(img.at(1, 1), true, 16))
            rep.fail_with({{"corner", "e22 entry not in F + R(1 - ba)"}, {"word", w.to_string()},
                           {"entry", img.at(1, 1).to_string()}});
    }
    const std::size_t bar_rank = element_rank(bar_corner, f);
    const std::size_t bar_image_rank = element_rank(bar_entries, f);
    if (bar_rank != bar_image_rank)
        rep.fail_with({{"corner", "(1-qx) corner rank differs from its image rank"},
                       {"corner_rank", bar_rank}, {"image_rank", bar_image_rank}});
    const MatrixElement xq_bar = map(e_bar * AlgebraElement::of_word(sys, f, parse_word("x q")) * e_bar);
    if (!(xq_bar == MatrixElement::unit(1, 1, one_minus_ba(ring, f))))
        rep.fail_with({{"corner", "phi((1-qx) xq (1-qx)) != e22 (1 - ba)"}, {"image", xq_bar.to_string()}});

    rep.details["e11_corner_words"] = e11_checked;
    rep.details["lifted_r_words"] = r_words.size();
    rep.details["e22_corner_rank"] = bar_rank;
    rep.details["e22_memberships"] = membership_checked;
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

VerificationReport check_determinant_obstruction(std::uint64_t seed, std::size_t trials, const Field& f) {
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "determinant";
    rep.parameters = {{"seed", seed}, {"trials", trials}, {"field", f.name()}};

    const RewriteSystem ring = RewriteSystem::nilpotent_free(2);
    const ScalarMatrix p = pi_eval(one_minus_ba(ring, f));
    ScalarMatrix expected(f, 2, 2);
    expected(1, 1) = f.one();
    if (!(p == expected))
        rep.fail_with({{"reason", "pi(1 - ba) != [[0, 0], [0, 1]]"}});
    const Scalar det = determinant(p);
    if (!det.is_zero()) rep.fail_with({{"reason", "det pi(1 - ba) != 0"}, {"det", det.to_string()}});
    const ScalarMatrix id = ScalarMatrix::identity(f, 2);
    if (!determinant(id).is_one()) rep.fail_with({{"reason", "det I != 1"}});

    std::mt19937_64 rng(seed);
    const long span = f.is_rational() ? 7 : static_cast<long>(f.characteristic());
    const long shift = f.is_rational() ? 3 : 0;
    std::uniform_int_distribution<long> entry(0, span - 1);
    auto random_matrix = [&] {
        ScalarMatrix m(f, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(i, j) = f.from_int(entry(rng) - shift);
        return m;
    };
    for (std::size_t t = 0; t < trials; ++t) {
        const ScalarMatrix c = random_matrix();
        const ScalarMatrix d = random_matrix();
        ++rep.candidates_examined;
        if (c * p * d == id) {
            rep.fail_with({{"reason", "C pi(1 - ba) D = I"}, {"trial", t}});
            break;
        }
    }
    rep.details = {{"pi_one_minus_ba", {{p(0, 0).to_string(), p(0, 1).to_string()},
                                        {p(1, 0).to_string(), p(1, 1).to_string()}}},
                   {"det", det.to_string()}};
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

VerificationReport n2_variant_check(const Field& f) {
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "n2-variant";
    rep.parameters = {{"n", 2}, {"field", f.name()}};
    rep.details["checks"] = nlohmann::json::array();
    auto record = [&](const std::string& name, bool holds) {
        ++rep.candidates_examined;
        rep.details["checks"].push_back({{"check", name}, {"holds", holds}});
        if (!holds) rep.fail_with({{"check", name}});
    };

    const PhiMap map(2, f);
    const RewriteSystem& sys = map.source();
    const RewriteSystem& ring = map.ring();  // a = 0, so R = F[b]
    const MatrixElement X = generator_X(ring, f);
    const MatrixElement Q = generator_Q(ring, f);
    const MatrixElement zero(ring, f);
    const MatrixElement id = MatrixElement::identity(ring, f);
    record("X = [[0, 0], [1, 0]]", X.to_string() == "[[0, 0], [1, 0]]");
    record("Q = [[b, 1], [0, 0]]", Q.to_string() == "[[b, 1], [0, 0]]");
    record("X Q X = X", X * Q * X == X);
    record("Q X Q = Q", Q * X * Q == Q);
    record("X^2 = 0", (X * X).is_zero());

    auto el = [&](const char* text) { return parse_element(text, sys, f); };
    const AlgebraElement e = el("1 - q x - x q + x q^2 x");
    const AlgebraElement x = el("x"), q = el("q");
    record("e != 0", !e.is_zero());
    record("e^2 = e", e * e == e);
    record("e x = x e", e * x == x * e);
    record("e q = q e", e * q == q * e);

    // T' = M2(F[b]) x F; the F component is the augmentation x, q -> 0.
    const MatrixElement phi_e = map(e);
    const Scalar aug_e = e.coefficient(Word{});
    record("phi(e) = 0", phi_e.is_zero());
    record("augmentation(e) = 1", aug_e.is_one());
    const AlgebraElement comp = AlgebraElement::one(sys, f) - e;
    record("phi(1 - e) = I", map(comp) == id);
    record("augmentation(1 - e) = 0", comp.coefficient(Word{}).is_zero());
    rep.details["e"] = e.to_string();
    rep.details["image_of_e"] = {{"matrix", phi_e.to_string()}, {"scalar", aug_e.to_string()}};
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

}  // namespace nilreg
