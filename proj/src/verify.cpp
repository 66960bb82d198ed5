#include "nilreg/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "nilreg/checks.hpp"
#include "nilreg/matrix_rep.hpp"

namespace nilreg {

RewriteSystem RunConfig::system() const {
    if (presentation == PresentationKind::S) return RewriteSystem::bergman(n);
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    return RewriteSystem::nilpotent_free(n - 1);
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "types-lemma", "tau-forms",   "tau-unique", "unit-regular-search",
        "regularity",  "separativity", "primeness", "confluence",
        "basis-oracle", "phi-faithful", "determinant", "n2-variant"};
    return names;
}

VerificationReport run_check(const std::string& name, const RunConfig& cfg) {
    if (name == "types-lemma") return check_types_lemma(cfg.system(), cfg.max_len, cfg.workers);
    if (name == "tau-forms" || name == "tau-unique") {
        TauHarnessOptions opts;
        opts.exhaustive_max_len = cfg.max_word_len;
        opts.random_trials = cfg.trials.value_or(opts.random_trials);
        opts.random_max_len = cfg.max_len;
        opts.seed = cfg.seed;
        opts.workers = cfg.workers;
        if (cfg.n != 3) throw std::invalid_argument("tau checks are defined for n = 3");
        return run_tau_harness(name == "tau-forms" ? TauCheck::forms : TauCheck::uniqueness, opts);
    }
    if (name == "unit-regular-search") {
        SearchOptions opts;
        opts.max_word_len = cfg.max_word_len;
        opts.field = cfg.field;
        opts.workers = cfg.workers;
        opts.n = cfg.n;
        return search_unit_regular_witness(opts);
    }
    if (name == "regularity") return check_regularity_identities(cfg.system(), cfg.field);
    if (name == "separativity") return check_separativity_identities(cfg.system(), cfg.field);
    if (name == "primeness")
        return check_primeness_bounded(cfg.system(), cfg.field, cfg.max_len, cfg.seed,
                                       cfg.trials.value_or(1000));
    if (name == "confluence") return check_confluence(cfg.system(), cfg.max_len, cfg.seed);
    if (name == "basis-oracle") return check_basis_oracle(cfg.system(), cfg.max_len);
    if (name == "phi-faithful") return verify_phi_faithful(cfg.max_len, cfg.field, cfg.n, cfg.workers);
    if (name == "determinant")
        return check_determinant_obstruction(cfg.seed, cfg.trials.value_or(1000), cfg.field);
    if (name == "n2-variant") return n2_variant_check(cfg.field);
    std::string known;
    for (const auto& n : check_names()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown check '" + name + "' (known: " + known + ")");
}

std::string render_text(const VerificationReport& rep) {
    std::ostringstream out;
    out << rep.check << ": " << to_string(rep.status) << "\n";
    out << "  parameters: " << rep.parameters.dump() << "\n";
    out << "  candidates examined: " << rep.candidates_examined << "\n";
    out << "  elapsed: " << rep.elapsed_ms << " ms\n";
    if (rep.witness) out << "  witness: " << rep.witness->dump() << "\n";
    if (!rep.details.empty()) out << "  details: " << rep.details.dump() << "\n";
    return out.str();
}

}  // namespace nilreg
