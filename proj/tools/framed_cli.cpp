// framed: command-line front end for structure-code checks, module calculus,
// stabilizer data and McKay-Thompson series.
//
// Exit codes: 0 success, 1 check failed, 2 usage or parse error,
// 3 resource budget exceeded, 4 internal consistency error.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "framed/codeio.hpp"
#include "framed/modules.hpp"
#include "framed/moonshine.hpp"
#include "framed/qseries.hpp"
#include "framed/selfdual.hpp"
#include "framed/stabilizer.hpp"
#include "framed/structcheck.hpp"

namespace {

using nlohmann::json;
using namespace framed;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

LinearCode load(const std::string& path) {
    const CodeFile f = read_code_file(path);
    if (f.code.dimension() != f.declared_rows) {
        std::cerr << "note: " << path << " declares " << f.declared_rows << " rows but has rank "
                  << f.code.dimension() << '\n';
    }
    return f.code;
}

Codeword word_arg(const std::string& text, std::size_t n, const char* what) {
    try {
        return parse_word(text, n);
    } catch (const ParseError& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

// Drops an optional "@codefile" suffix from a label.
std::string strip_code_suffix(const std::string& label) { return label.substr(0, label.find('@')); }

json clause_json(const Clause& c) {
    json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    j["witness"] = c.witness ? json(c.witness->to_bits()) : json(nullptr);
    return j;
}

json report_json(const StructureReport& r) {
    json j{{"pass", r.pass()}, {"clauses", json::array()}};
    for (const auto& c : r.clauses) j["clauses"].push_back(clause_json(c));
    return j;
}

void print_report(const StructureReport& r) {
    for (const auto& c : r.clauses) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.pass) {
            std::cout << ": " << c.detail;
            if (c.witness) std::cout << "; witness " << c.witness->to_bits();
        }
        std::cout << '\n';
    }
    std::cout << (r.pass() ? "pass" : "fail") << '\n';
}

std::string rational_text(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string label_text(const ModuleLabel& m, const std::string& code_path) {
    return m.to_string() + "@" + code_path;
}

struct Options {
    bool json = false;
    Limits limits;
};

int check_pair(const Options& o, const std::string& cpath, const std::string& dpath) {
    const LinearCode c = load(cpath);
    const LinearCode d = load(dpath);
    const StructureReport r = validate_structure_codes(c, d, o.limits);
    if (o.json) {
        json j = report_json(r);
        j["holomorphic"] = r.pass() && c == dual(d);
        std::cout << j.dump(2) << '\n';
    } else {
        print_report(r);
        if (r.pass()) std::cout << "holomorphic: " << (c == dual(d) ? "yes" : "no") << '\n';
    }
    return r.pass() ? kOk : kCheckFailed;
}

int check_admissible(const Options& o, const std::string& cpath) {
    const LinearCode c = load(cpath);
    const StructureReport r = is_f_admissible(c, o.limits);
    const bool via_dual = is_f_admissible_via_dual(c, o.limits);
    if (r.pass() != via_dual) {
        std::cerr << "internal error: clause check says " << (r.pass() ? "admissible" : "not admissible")
                  << " but the triply-even dual check says " << (via_dual ? "admissible" : "not admissible")
                  << '\n';
        return kInternal;
    }
    if (o.json) {
        json j = report_json(r);
        j["triply_even_dual"] = via_dual;
        std::cout << j.dump(2) << '\n';
    } else {
        print_report(r);
        std::cout << "triply even dual route: " << (via_dual ? "pass" : "fail") << '\n';
    }
    return r.pass() ? kOk : kCheckFailed;
}

int selfdual_subcode(const Options& o, const std::string& cpath, const std::string& beta_text, bool doubly_even) {
    const LinearCode c = load(cpath);
    const Codeword beta = word_arg(beta_text, c.length(), "--beta");
    const auto h = find_self_dual_subcode_wrt(c, beta, doubly_even, o.limits);
    if (o.json) {
        json j{{"found", h.has_value()}, {"beta", beta.to_bits()}, {"doubly_even", doubly_even}};
        if (h) {
            j["dimension"] = h->dimension();
            j["basis"] = json::array();
            for (const auto& r : h->basis()) j["basis"].push_back(r.to_bits());
        }
        std::cout << j.dump(2) << '\n';
    } else if (h) {
        write_code(std::cout, *h, std::string(doubly_even ? "doubly even " : "") + "self-dual subcode w.r.t. " +
                                      beta.to_bits());
    } else {
        std::cout << "none\n";
    }
    return h ? kOk : kCheckFailed;
}

int stabilizer(const Options& o, const std::string& cpath, const std::string& dpath, const std::string& xi_text) {
    const LinearCode c = load(cpath);
    const LinearCode d = load(dpath);
    const StabilizerDescription s = describe_stabilizer(c, d);
    json j{{"p_dimension", s.p.dimension()},
           {"tau_rank", s.tau_rank},
           {"sigma_rank", s.sigma_rank},
           {"group_order_log2", s.tau_rank + s.sigma_rank},
           {"generators", json::array()},
           {"noncommuting_pairs", json::array()}};
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
        j["generators"].push_back({{"xi", s.generators[i].to_bits()}, {"order", s.orders[i]}});
        for (std::size_t k = i + 1; k < s.generators.size(); ++k) {
            if (s.noncommuting[i][k]) j["noncommuting_pairs"].push_back({i, k});
        }
    }
    if (!xi_text.empty()) {
        const Codeword xi = word_arg(xi_text, c.length(), "--xi");
        if (!s.p.contains(xi)) {
            std::cerr << "xi " << xi.to_bits() << " is not in P\n";
            return kCheckFailed;
        }
        const GradedSplit g = graded_split(c, d, xi);
        json x{{"xi", xi.to_bits()}, {"order", order_of_lift(c, d, xi)}, {"d0_basis", json::array()}};
        for (const auto& r : g.d0.basis()) x["d0_basis"].push_back(r.to_bits());
        x["d1_rep"] = g.d1_rep ? json(g.d1_rep->to_bits()) : json(nullptr);
        x["c0_dimension"] = g.c0.dimension();
        j["lift"] = x;
    }
    if (o.json) {
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    std::cout << "dim P = " << s.p.dimension() << '\n'
              << "tau rank = " << s.tau_rank << '\n'
              << "sigma rank = " << s.sigma_rank << '\n'
              << "group order = 2^" << (s.tau_rank + s.sigma_rank) << '\n';
    for (const auto& g : j["generators"]) {
        std::cout << "generator " << g["xi"].get<std::string>() << " order " << g["order"].get<int>() << '\n';
    }
    for (const auto& p : j["noncommuting_pairs"]) {
        std::cout << "noncommuting " << p[0].get<std::size_t>() << ' ' << p[1].get<std::size_t>() << '\n';
    }
    if (j.contains("lift")) {
        const auto& x = j["lift"];
        std::cout << "xi " << x["xi"].get<std::string>() << " order " << x["order"].get<int>() << '\n';
        for (const auto& r : x["d0_basis"]) std::cout << "D0 " << r.get<std::string>() << '\n';
        if (!x["d1_rep"].is_null()) std::cout << "D1 rep " << x["d1_rep"].get<std::string>() << '\n';
    }
    return kOk;
}

int fusion(const Options& o, const std::string& cpath, const std::string& m1, const std::string& m2) {
    auto c = std::make_shared<const LinearCode>(load(cpath));
    const ModuleLabel a = parse_label(c, strip_code_suffix(m1));
    const ModuleLabel b = parse_label(c, strip_code_suffix(m2));
    const ModuleSum sum = fuse(a, b, o.limits);
    if (o.json) {
        json j = json::array();
        for (const auto& [label, mult] : sum) {
            j.push_back({{"label", label_text(label, cpath)}, {"multiplicity", mult}});
        }
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& [label, mult] : sum) std::cout << mult << ' ' << label_text(label, cpath) << '\n';
    }
    return kOk;
}

int module_info(const Options& o, const std::string& cpath, const std::string& text) {
    auto c = std::make_shared<const LinearCode>(load(cpath));
    const ModuleLabel m = parse_label(c, strip_code_suffix(text));
    const json j{{"label", label_text(m, cpath)},
                 {"top_weight", rational_text(top_weight(m, o.limits))},
                 {"top_level_dimension", top_level_dimension(m, o.limits).str()},
                 {"dual", label_text(dual_label(m), cpath)},
                 {"self_dual", is_self_dual_module(m)},
                 {"simple_current", is_simple_current(m, o.limits)},
                 {"labels_with_this_beta", count_modules_with_tau(*c, m.beta).str()}};
    if (o.json) {
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& [k, v] : j.items()) {
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    }
    return kOk;
}

int mt_series(const Options& o, const std::string& dpath, const std::string& xi_text, std::int64_t trunc) {
    const LinearCode d = load(dpath);
    const Codeword xi = word_arg(xi_text, d.length(), "--xi");
    LinearCode dxi = d;
    dxi.insert(xi);
    const QSeries s = mckay_thompson(weight_enumerator(d, o.limits), weight_enumerator(dxi, o.limits), trunc);
    if (o.json) {
        json j{{"truncation", trunc}, {"terms", json::array()}};
        for (const auto& [e, coeff] : s.terms()) j["terms"].push_back({{"exponent48", e}, {"coefficient", coeff.str()}});
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << s.to_string() << '\n';
    }
    return kOk;
}

int moonshine_demo(const Options& o, std::int64_t trunc, const std::string& export_dir) {
    if (!export_dir.empty()) {
        const moonshine::Frame f = moonshine::build_moonshine_codes();
        std::filesystem::create_directories(export_dir);
        write_code_file(export_dir + "/moonshine_C.code", f.c, "moonshine frame: C = D^⊥");
        write_code_file(export_dir + "/moonshine_D.code", f.d, "moonshine frame: D");
    }
    const moonshine::DemoReport r = moonshine::run_demo(trunc, o.limits);
    std::cout << (o.json ? r.to_json() + "\n" : r.to_text());
    return r.pass() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structure codes of framed vertex operator algebras"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Machine-readable JSON output");
    app.add_option("--max-enum-dim", o.limits.max_enumeration_dim, "Largest dimension enumerated directly");
    app.add_option("--max-coset-weight", o.limits.max_coset_weight, "Weight bound of coset searches");
    app.add_option("--max-nodes", o.limits.max_search_nodes, "Node budget of self-dual subcode searches");

    std::string cpath, dpath, beta, xi, m1, m2, label, export_dir;
    bool doubly_even = false;
    std::int64_t trunc = kDefaultTruncation;
    std::function<int()> run;

    auto* pair = app.add_subcommand("check-pair", "Validate a structure-code pair (C, D)");
    pair->add_option("C", cpath, "Code file of C")->required();
    pair->add_option("D", dpath, "Code file of D")->required();
    pair->add_flag("--json", o.json);
    pair->callback([&] { run = [&] { return check_pair(o, cpath, dpath); }; });

    auto* adm = app.add_subcommand("check-admissible", "Check F-admissibility of C by both routes");
    adm->add_option("C", cpath)->required();
    adm->add_flag("--json", o.json);
    adm->callback([&] { run = [&] { return check_admissible(o, cpath); }; });

    auto* sd = app.add_subcommand("selfdual-subcode", "Find a subcode of C self-dual w.r.t. beta");
    sd->add_option("C", cpath)->required();
    sd->add_option("--beta", beta, "Support word (bits or hex)")->required();
    sd->add_flag("--doubly-even", doubly_even);
    sd->add_flag("--json", o.json);
    sd->callback([&] { run = [&] { return selfdual_subcode(o, cpath, beta, doubly_even); }; });

    auto* stab = app.add_subcommand("stabilizer", "Pointwise frame stabilizer data of (C, D)");
    stab->add_option("C", cpath)->required();
    stab->add_option("D", dpath)->required();
    stab->add_option("--xi", xi, "Element of P to classify");
    stab->add_flag("--json", o.json);
    stab->callback([&] { run = [&] { return stabilizer(o, cpath, dpath, xi); }; });

    auto* fus = app.add_subcommand("fusion", "Fuse two modules of V_C");
    fus->add_option("C", cpath)->required();
    fus->add_option("--m1", m1, "Label beta:gamma")->required();
    fus->add_option("--m2", m2, "Label beta:gamma")->required();
    fus->add_flag("--json", o.json);
    fus->callback([&] { run = [&] { return fusion(o, cpath, m1, m2); }; });

    auto* info = app.add_subcommand("module-info", "Top weight, duality and simple-current data of a module");
    info->add_option("C", cpath)->required();
    info->add_option("--label", label, "Label beta:gamma")->required();
    info->add_flag("--json", o.json);
    info->callback([&] { run = [&] { return module_info(o, cpath, label); }; });

    auto* mt = app.add_subcommand("mt-series", "McKay-Thompson series from D and xi");
    mt->add_option("D", dpath)->required();
    mt->add_option("--xi", xi)->required();
    mt->add_option("--trunc", trunc, "Exponent bound in units of 1/48")->check(CLI::PositiveNumber);
    mt->add_flag("--json", o.json);
    mt->callback([&] { run = [&] { return mt_series(o, dpath, xi, trunc); }; });

    auto* demo = app.add_subcommand("moonshine-demo", "Check the moonshine frame example end to end");
    demo->add_option("--trunc", trunc, "Exponent bound in units of 1/48")->check(CLI::PositiveNumber);
    demo->add_option("--export", export_dir, "Also write moonshine_C.code and moonshine_D.code here");
    demo->add_flag("--json", o.json);
    demo->callback([&] { run = [&] { return moonshine_demo(o, trunc, export_dir); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run();
    } catch (const ResourceExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
