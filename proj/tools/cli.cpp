#include "cli.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grmod/corpus.hpp"
#include "grmod/errors.hpp"
#include "grmod/verifiers.hpp"

namespace grmod {
namespace cli {

namespace {

struct CommonOpts {
    std::string file;
    std::string format = "text";
    std::optional<std::uint32_t> char_override;
};

std::pair<int, int> parse_window(const std::string& w) {
    std::size_t colon = w.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--window", "expected lo:hi");
    return {std::stoi(w.substr(0, colon)), std::stoi(w.substr(colon + 1))};
}

const InputIdeal& find_ideal_or_throw(const InputDocument& doc, const std::string& name,
                                      const InputSection** section_out) {
    auto found = doc.find_ideal(name);
    if (!found)
        throw parse_error("no ideal named '" + name + "' in input", 0, 0);
    *section_out = found->section;
    return *found->ideal;
}

int cmd_betti(const CommonOpts& opts, const std::string& ideal_name, std::ostream& out) {
    InputDocument doc = parse_input_file(opts.file, opts.char_override);
    const InputSection* section = nullptr;
    const InputIdeal& ideal = find_ideal_or_throw(doc, ideal_name, &section);
    const Ring& R = section->ring;

    PresentedModule M = PresentedModule::quotient_ring(R, ideal.gens);
    BettiTable B = betti_table(minimal_free_resolution(R, M));
    if (opts.format == "json") {
        Json arr = Json::array();
        for (const auto& [ij, v] : B.entries) {
            Json cell;
            cell["i"] = ij.first;
            cell["j"] = ij.second;
            cell["beta"] = v;
            arr.push_back(cell);
        }
        Json j;
        j["ideal"] = ideal_name;
        j["betti"] = arr;
        out << j.dump(2) << "\n";
    } else {
        out << B.staircase();
    }
    return 0;
}

int cmd_invariants(const CommonOpts& opts, const std::string& ideal_name, std::ostream& out) {
    InputDocument doc = parse_input_file(opts.file, opts.char_override);
    const InputSection* section = nullptr;
    const InputIdeal& ideal = find_ideal_or_throw(doc, ideal_name, &section);
    const Ring& R = section->ring;

    PresentedModule M = PresentedModule::quotient_ring(R, ideal.gens);
    FreeResolution res = minimal_free_resolution(R, M);
    BettiTable B = betti_table(res);
    DepthCodim dc = depth_and_codim(R, M, res);

    long long mu = B.total(1);
    std::optional<int> a = M.hilbert().submodule_initial_degree;
    long long e = M.hilbert().multiplicity;
    int reg = B.regularity();

    if (opts.format == "json") {
        Json j;
        j["ideal"] = ideal_name;
        j["mu"] = mu;
        j["a"] = a ? Json(*a) : Json(nullptr);
        j["dim"] = dc.dim;
        j["depth"] = dc.depth;
        j["codim"] = dc.codim;
        j["e"] = e;
        j["reg"] = reg;
        j["cohen_macaulay"] = dc.cohen_macaulay;
        out << j.dump(2) << "\n";
    } else {
        out << "ideal   " << ideal_name << "\n";
        out << "mu      " << mu << "\n";
        out << "a       " << (a ? std::to_string(*a) : std::string("none")) << "\n";
        out << "dim     " << dc.dim << "\n";
        out << "depth   " << dc.depth << "\n";
        out << "codim   " << dc.codim << "\n";
        out << "e       " << e << "\n";
        out << "reg     " << reg << "\n";
        out << "CM      " << (dc.cohen_macaulay ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_green(const CommonOpts& opts, const std::string& ideal_name, int s, std::uint64_t seed,
              bool strong, const std::string& forms_name, std::optional<std::pair<int, int>> window,
              std::ostream& out) {
    InputDocument doc = parse_input_file(opts.file, opts.char_override);
    const InputSection* section = nullptr;
    const InputIdeal& ideal = find_ideal_or_throw(doc, ideal_name, &section);
    const Ring& R = section->ring;

    PresentedModule M = PresentedModule::quotient_ring(R, ideal.gens);
    std::vector<DeficiencyModule> defs = deficiency_modules(R, M);

    LinearSystem L;
    bool require_cert = true;
    if (!forms_name.empty()) {
        const InputForms* forms = nullptr;
        for (const InputSection& sec : doc.sections)
            for (const InputForms& f : sec.forms)
                if (f.name == forms_name)
                    forms = &f;
        if (!forms)
            throw parse_error("no forms named '" + forms_name + "' in input", 0, 0);
        L = explicit_linear_system(R, M, defs, forms->forms, true);
        L.seed = seed;
        /* explicit systems (e.g. the variables themselves) may run without a
         * certificate unless --strong insists on one */
        require_cert = strong;
    } else {
        L = sample_generic_forms(R, M, defs, s, true, seed);
    }

    auto [lo, hi] = window ? *window : default_window(R, M);
    GreenTable T = green_table(R, M, defs, L, lo, hi, require_cert);

    Json j;
    j["ideal"] = ideal_name;
    j["s"] = static_cast<int>(L.forms.size());
    j["seed"] = seed;
    j["strong"] = L.strong;
    j["certified"] = L.certified;
    j["attempts"] = L.attempts;
    j["window"] = Json::array({lo, hi});
    Json forms_json = Json::array();
    for (const auto& row : L.coefficients)
        forms_json.push_back(row);
    j["forms"] = forms_json;
    Json cells = Json::array();
    for (const auto& [ij, hf] : T.entries) {
        Json cell;
        cell["i"] = ij.first;
        cell["j"] = ij.second;
        Json hfj = Json::object();
        for (const auto& [n, v] : hf.support)
            hfj[std::to_string(n)] = v;
        cell["hf"] = hfj;
        cells.push_back(cell);
    }
    j["table"] = cells;

    if (opts.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << "ideal " << ideal_name << ", s=" << L.forms.size() << ", seed=" << seed
            << (L.certified ? " (certified)" : " (uncertified)") << "\n";
        for (const auto& [ij, hf] : T.entries) {
            out << "H_" << ij.first << "(l; H_m^" << ij.second << "):";
            for (const auto& [n, v] : hf.support)
                out << "  " << n << "->" << v;
            out << "  (length " << hf.total_length << ")\n";
        }
    }
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& claims_csv, std::uint64_t seed,
               std::ostream& out) {
    InputDocument doc = parse_input_file(opts.file, opts.char_override);
    std::vector<CorpusEntry> entries = corpus_from_document(doc);

    std::vector<std::string> claims;
    if (!claims_csv.empty()) {
        std::stringstream ss(claims_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                claims.push_back(item);
    }

    std::vector<VerificationReport> reports = run_corpus(entries, claims, seed);
    if (opts.format == "json")
        out << reports_to_json(reports).dump(2) << "\n";
    else
        out << reports_to_text(reports);
    return any_falsified(reports) ? 1 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact graded-module calculator over a prime field: Betti tables, "
                 "local cohomology via duality, Green modules, and bound verification"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string ideal_name, claims_csv, forms_name, window_str;
    int s = 1;
    std::uint64_t seed = 0;
    bool strong = false;
    std::uint32_t char_value = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_ideal) {
        cmd->add_option("file", opts.file, "input file")->required();
        if (needs_ideal)
            cmd->add_option("ideal", ideal_name, "ideal name")->required();
        cmd->add_option("--format", opts.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--char", char_value, "override the coefficient characteristic");
    };

    CLI::App* betti = app.add_subcommand("betti", "graded Betti table of R/I");
    add_common(betti, true);

    CLI::App* invariants = app.add_subcommand("invariants", "mu, a, dim, depth, codim, e, reg");
    add_common(invariants, true);

    CLI::App* green = app.add_subcommand("green", "Green module table for generic linear forms");
    add_common(green, true);
    green->add_option("-s,--s", s, "number of linear forms")->required();
    green->add_option("--seed", seed, "random seed");
    green->add_flag("--strong", strong, "require the strong certificate for explicit forms");
    green->add_option("--forms", forms_name, "use a named forms block instead of sampling");
    green->add_option("--window", window_str, "degree window lo:hi");

    CLI::App* verify = app.add_subcommand("verify", "run the bound verifiers over all ideals");
    add_common(verify, false);
    verify->add_option("--claims", claims_csv, "comma-separated claim ids (default: all)");
    verify->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            /* --help and friends */
            std::ostringstream help;
            int code = app.exit(e, out, err);
            return code;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (char_value != 0)
        opts.char_override = char_value;

    try {
        if (betti->parsed())
            return cmd_betti(opts, ideal_name, out);
        if (invariants->parsed())
            return cmd_invariants(opts, ideal_name, out);
        if (green->parsed()) {
            std::optional<std::pair<int, int>> window;
            if (!window_str.empty())
                window = parse_window(window_str);
            return cmd_green(opts, ideal_name, s, seed, strong, forms_name, window, out);
        }
        if (verify->parsed())
            return cmd_verify(opts, claims_csv, seed, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const falsification_error& e) {
        err << "FALSIFIED: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace cli
}  // namespace grmod
