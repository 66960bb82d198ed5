// nilreg command-line front end.
#include <CLI11.hpp>

#include <iostream>

#include "nilreg/element.hpp"
#include "nilreg/verify.hpp"

using namespace nilreg;

namespace {

constexpr int kUsageError = 2;

int cmd_reduce(const std::vector<std::string>& factors, const RunConfig& cfg) {
    const RewriteSystem sys = cfg.system();
    AlgebraElement product = AlgebraElement::one(sys, cfg.field);
    for (const auto& text : factors) product = product * parse_element(text, sys, cfg.field);
    if (cfg.json) {
        nlohmann::json j = {{"presentation", sys.describe()},
                            {"field", cfg.field.name()},
                            {"input", factors},
                            {"normal_form", product.to_string()},
                            {"terms", product.to_json()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << product.to_string() << "\n";
    }
    return 0;
}

int cmd_basis(std::size_t max_len, const RunConfig& cfg) {
    const RewriteSystem sys = cfg.system();
    const std::vector<Word> basis = enumerate_basis(max_len, sys);
    if (cfg.json) {
        nlohmann::json words = nlohmann::json::array();
        for (const Word& w : basis) words.push_back(w.to_string());
        std::cout << nlohmann::json{{"presentation", sys.describe()},
                                    {"max_len", max_len},
                                    {"count", basis.size()},
                                    {"words", words}}
                         .dump(2)
                  << "\n";
    } else {
        for (const Word& w : basis) std::cout << w.to_string() << "\n";
        std::cout << basis.size() << " words\n";
    }
    return 0;
}

int cmd_verify(const std::string& check, const RunConfig& cfg) {
    const VerificationReport rep = run_check(check, cfg);
    if (cfg.json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << render_text(rep);
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal forms and bounded verification for S = F[x]/(x^n)<q | xqx = x, qxq = q>"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string presentation = "S";
    std::string field = "gf2";
    std::optional<std::size_t> trials;
    app.add_option("--n", cfg.n, "Nilpotency index of x (default 3)")->check(CLI::Range(2u, 64u));
    app.add_option("--field", field, "gf2, gf3, gf<p> or rational");
    app.add_option("--presentation", presentation, "S, or R (a^(n-1) = 0)");
    app.add_option("--max-len", cfg.max_len, "Word-length bound (default 6)");
    app.add_option("--max-word-len", cfg.max_word_len, "Support-word length bound (default 3)");
    app.add_option("--seed", cfg.seed, "Seed for randomized checks");
    app.add_option("--trials", trials, "Random trials, where a check uses them");
    app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--json", cfg.json, "Emit JSON");

    std::vector<std::string> factors;
    auto* reduce = app.add_subcommand("reduce", "Normal form of an element, or of a product of several");
    reduce->add_option("expr", factors, "Element literal(s), e.g. \"q^2 x q x q^3 x^2 q\"")->required();

    std::string check;
    auto* verify = app.add_subcommand("verify", "Run a bounded check");
    verify->add_option("check", check, "Check name")->required();

    std::size_t basis_len = 0;
    auto* basis = app.add_subcommand("basis", "List basis words up to a length");
    basis->add_option("max_len", basis_len, "Maximum word length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (presentation == "S" || presentation == "s")
            cfg.presentation = PresentationKind::S;
        else if (presentation == "R" || presentation == "r")
            cfg.presentation = PresentationKind::R;
        else
            throw std::invalid_argument("unknown presentation '" + presentation + "'");
        cfg.field = Field::parse(field);
        cfg.trials = trials;

        if (*reduce) return cmd_reduce(factors, cfg);
        if (*basis) return cmd_basis(basis_len, cfg);
        return cmd_verify(check, cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
}
