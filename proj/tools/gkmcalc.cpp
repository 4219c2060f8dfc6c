// gkmcalc: command-line front end over the library.  Subcommands wrap the
// engine one-to-one: validate, filter, basis, member, export-dot.  Exit
// codes: 0 success, 2 mathematical failure (no filtration, not divisive,
// not a member, no basis), 1 usage or IO problems.  GKM_LOG=info|debug turns
// on progress lines on standard error.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gkm/builtins.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/document.hpp"

using namespace gkm;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMath = 2;

int log_verbosity() {
    const char* env = std::getenv("GKM_LOG");
    if (!env || !*env) return 0;
    std::string v(env);
    if (v == "0" || v == "off" || v == "quiet") return 0;
    if (v == "2" || v == "debug") return 2;
    return 1;
}

class Stopwatch {
  public:
    long long ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void note(int level, const std::string& msg) {
    if (log_verbosity() >= level) std::cerr << "gkmcalc: " << msg << "\n";
}

GKMComplex load_input(const std::string& arg, std::vector<std::string>& notes) {
    Stopwatch t;
    std::optional<GKMComplex> builtin = builtin_complex(arg);
    GKMComplex gc = builtin ? std::move(*builtin) : parse_document(arg, &notes);
    note(1, "loaded " + arg + " in " + std::to_string(t.ms()) + " ms (" +
                std::to_string(gc.complex.labels.size()) + " vertices, " +
                std::to_string(gc.total.edges.size()) + " edges)");
    return gc;
}

void write_json(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
    if (!out) throw input_error("failed writing '" + path + "'");
    note(1, "wrote " + path);
}

std::string okey(const GKMComplex& gc, const OEdge& e) {
    return gc.complex.labels[static_cast<size_t>(e.first)] + "->" +
           gc.complex.labels[static_cast<size_t>(e.second)];
}

std::string seed_or_default(const GKMComplex& gc, const std::string& seed) {
    return seed.empty() ? gc.complex.labels.front() : seed;
}

struct TheoryFlags {
    std::string theory = "H";
    int trunc = 3;
    bool trunc_given = false;
    bool rational = false;
};

TheorySpec spec_for(const GKMComplex& gc, const TheoryFlags& tf) {
    Theory th = parse_theory(tf.theory);
    if (tf.rational && th != Theory::H) throw input_error("--rational applies to theory H only");
    if (tf.trunc_given && th != Theory::MU) throw input_error("--trunc applies to theory MU only");
    if (tf.trunc < 1) throw input_error("--trunc must be at least 1");
    return TheorySpec::make(th, gc.rank, tf.trunc, tf.rational);
}

int cmd_validate(const GKMComplex& gc, const std::string& out_path) {
    auto comp = validate_complex(gc.complex);
    auto axial = validate_axial(gc);
    auto conn = validate_connection(gc);

    auto section = [](const char* name, bool ok, const std::vector<std::string>& issues) {
        std::cout << name << ": " << (ok ? "ok" : "FAILED") << "\n";
        for (const auto& issue : issues) std::cout << "  - " << issue << "\n";
    };
    section("complex axioms", comp.ok, comp.issues);
    section("axial axioms", axial.ok, axial.issues);
    section("connection axioms", conn.ok, conn.issues);
    if (conn.ok && !conn.witnesses.empty()) {
        std::cout << "congruence witnesses c(e, e'):\n";
        for (const auto& w : conn.witnesses)
            std::cout << "  " << okey(gc, w.e) << ", " << okey(gc, w.eprime) << ": c = "
                      << to_string(w.c) << "\n";
    }

    json j;
    j["ok"] = comp.ok && axial.ok && conn.ok;
    j["complex_issues"] = comp.issues;
    j["axial_issues"] = axial.issues;
    j["connection_issues"] = conn.issues;
    json jw = json::array();
    for (const auto& w : conn.witnesses)
        jw.push_back({{"e", okey(gc, w.e)}, {"eprime", okey(gc, w.eprime)}, {"c", to_string(w.c)}});
    j["witnesses"] = std::move(jw);
    write_json(out_path, j);
    return j["ok"].get<bool>() ? kOk : kMath;
}

struct FiltrationOrFailure {
    int exit = kOk;
    Filtration filt;
};

FiltrationOrFailure filtration_step(const GKMComplex& gc, const std::string& seed,
                                    const std::string& out_path) {
    Stopwatch t;
    auto out = filter_complex(gc.complex, seed);
    note(1, "filtration from '" + seed + "' in " + std::to_string(t.ms()) + " ms");
    if (out.status == FilterStatus::Ok) return {kOk, std::move(out.filtration)};
    const char* status = out.status == FilterStatus::Disconnected ? "disconnected" : "no_filtration";
    std::cout << "no filtration from seed '" << seed << "': " << out.detail << "\n";
    write_json(out_path, json{{"status", status}, {"detail", out.detail}});
    return {kMath, {}};
}

int cmd_filter(const GKMComplex& gc, const std::string& seed_flag, const std::string& out_path) {
    std::string seed = seed_or_default(gc, seed_flag);
    auto step = filtration_step(gc, seed, out_path);
    if (step.exit != kOk) return step.exit;
    const Filtration& f = step.filt;

    std::cout << "filtration from seed '" << seed << "':\n";
    json jorder = json::array(), jd = json::array(), jdown = json::array();
    for (size_t p = 0; p < f.order.size(); ++p) {
        const std::string& name = gc.complex.labels[static_cast<size_t>(f.order[p])];
        std::cout << "  " << p << ": " << name << "  d = " << f.d[p];
        json batch = json::array();
        if (!f.added[p].empty()) {
            std::cout << "  downward to";
            for (const auto& [s, tgt] : f.added[p]) {
                std::cout << " " << gc.complex.labels[static_cast<size_t>(s)];
                batch.push_back(okey(gc, {tgt, s}));
            }
        }
        std::cout << "\n";
        jorder.push_back(name);
        jd.push_back(f.d[p]);
        jdown.push_back(std::move(batch));
    }
    write_json(out_path, json{{"status", "ok"},
                              {"seed", seed},
                              {"order", std::move(jorder)},
                              {"d", std::move(jd)},
                              {"downward", std::move(jdown)}});
    return kOk;
}

json basis_json(const CongruenceSystem& sys, const std::vector<BasisClass>& basis) {
    json out = json::array();
    for (const auto& bc : basis) {
        json values = json::object();
        for (int v = 0; v < sys.nverts(); ++v)
            values[sys.labels[static_cast<size_t>(v)]] =
                sys.spec.render(bc.cls.values[static_cast<size_t>(v)]);
        out.push_back({{"j", bc.j},
                       {"stratum", sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(bc.j)])]},
                       {"values", std::move(values)}});
    }
    return out;
}

struct SystemOrFailure {
    int exit = kOk;
    CongruenceSystem sys;
};

SystemOrFailure system_step(const GKMComplex& gc, const Filtration& filt, const TheorySpec& spec,
                            const std::string& out_path) {
    Stopwatch t;
    auto so = build_system(gc, filt, spec);
    note(1, "congruence system in " + std::to_string(t.ms()) + " ms");
    if (so.ok()) return {kOk, std::move(so.sys)};
    const char* kind = so.error == SystemError::not_divisive ? "not_divisive" : "coprimality_failure";
    std::cout << (so.error == SystemError::not_divisive ? "not divisive: " : "coprimality failure: ")
              << so.detail << "\n";
    write_json(out_path, json{{"status", kind}, {"detail", so.detail}});
    return {kMath, {}};
}

int cmd_basis(const GKMComplex& gc, const std::string& seed_flag, const TheoryFlags& tf,
              int degree_cap, const std::string& out_path) {
    std::string seed = seed_or_default(gc, seed_flag);
    TheorySpec spec = spec_for(gc, tf);
    auto step = filtration_step(gc, seed, out_path);
    if (step.exit != kOk) return step.exit;
    auto sys_step = system_step(gc, step.filt, spec, out_path);
    if (sys_step.exit != kOk) return sys_step.exit;
    const CongruenceSystem& sys = sys_step.sys;

    int cap = degree_cap;
    if (cap <= 0) {
        int maxd = 0;
        for (int d : sys.filt.d) maxd = std::max(maxd, d);
        cap = std::max(1, 2 * maxd);
        note(1, "degree cap defaulted to " + std::to_string(cap));
    }

    Stopwatch t;
    auto bo = compute_basis(sys, cap);
    note(1, "basis in " + std::to_string(t.ms()) + " ms");
    if (!bo.ok()) {
        const char* kind =
            bo.error == BasisError::no_integral_extension ? "no_integral_extension" : "cap_exceeded";
        std::cout << (bo.error == BasisError::no_integral_extension
                          ? "no integral extension: "
                          : "degree cap exceeded: ")
                  << bo.detail << "\n";
        write_json(out_path, json{{"status", kind}, {"detail", bo.detail}});
        return kMath;
    }

    std::cout << "basis over " << theory_name(spec.theory) << (spec.rational ? " (rational)" : "")
              << ", " << bo.classes.size() << " classes:\n";
    for (const auto& bc : bo.classes) {
        std::cout << "phi_" << bc.j << " (stratum '"
                  << sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(bc.j)])]
                  << "'):\n";
        for (int v = 0; v < sys.nverts(); ++v)
            std::cout << "  " << sys.labels[static_cast<size_t>(v)] << ": "
                      << spec.render(bc.cls.values[static_cast<size_t>(v)]) << "\n";
    }

    json j{{"status", "ok"},
           {"theory", theory_name(spec.theory)},
           {"rational", spec.rational},
           {"seed", seed},
           {"degree_cap", cap},
           {"classes", basis_json(sys, bo.classes)}};
    if (spec.theory == Theory::MU) j["trunc"] = spec.trunc;
    write_json(out_path, j);
    return kOk;
}

CohomologyClass read_class_file(const TheorySpec& spec, const GKMComplex& gc,
                                const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
    if (!j.is_object())
        throw input_error(path + ": expected an object mapping vertex labels to expressions");
    CohomologyClass x{spec, std::vector<Coefficient>(gc.complex.labels.size(), spec.zero())};
    std::set<std::string> seen;
    for (const auto& item : j.items()) {
        int v = gc.total.vertex(item.key());
        if (!item.value().is_string())
            throw input_error(path + ": value for '" + item.key() + "' must be a string");
        x.values[static_cast<size_t>(v)] = spec.parse(item.value().get<std::string>());
        seen.insert(item.key());
    }
    for (const auto& label : gc.complex.labels)
        if (!seen.count(label)) throw input_error(path + ": missing value for vertex '" + label + "'");
    return x;
}

int cmd_member(const GKMComplex& gc, const std::string& seed_flag, const TheoryFlags& tf,
               const std::string& class_file, const std::string& out_path) {
    std::string seed = seed_or_default(gc, seed_flag);
    TheorySpec spec = spec_for(gc, tf);
    auto step = filtration_step(gc, seed, out_path);
    if (step.exit != kOk) return step.exit;
    auto sys_step = system_step(gc, step.filt, spec, out_path);
    if (sys_step.exit != kOk) return sys_step.exit;
    const CongruenceSystem& sys = sys_step.sys;

    auto x = read_class_file(spec, gc, class_file);
    auto chk = is_member(sys, x);
    if (chk.member) {
        std::cout << "member\n";
        write_json(out_path, json{{"member", true}});
        return kOk;
    }
    const std::string& at = sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(chk.j)])];
    const std::string& against =
        sys.labels[static_cast<size_t>(sys.filt.order[static_cast<size_t>(chk.s)])];
    std::cout << "not a member: the congruence at '" << at << "' against '" << against
              << "' fails; witness " << chk.witness << "\n";
    write_json(out_path, json{{"member", false},
                              {"stratum", chk.j},
                              {"at", at},
                              {"against", against},
                              {"witness", chk.witness}});
    return kMath;
}

int cmd_export_dot(const GKMComplex& gc, const std::string& seed_flag, const std::string& out_path) {
    std::string seed = seed_or_default(gc, seed_flag);
    auto step = filtration_step(gc, seed, "");
    if (step.exit != kOk) return step.exit;
    std::string dot = render_dot(gc, &step.filt);
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw input_error("cannot write '" + out_path + "'");
        out << dot;
        if (!out) throw input_error("failed writing '" + out_path + "'");
        std::cout << "wrote " << out_path << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GKM graph complexes: validation, filtrations, and equivariant cohomology"};
    app.require_subcommand(1);

    std::string input, seed, theory = "H", class_file, out_path;
    int trunc = 3, degree_cap = -1;
    bool rational = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input,
                        "document path or builtin: complete(m), fig3(c0,c1,c2,c3), wpl(q0,q1)")
            ->required();
        cmd->add_option("--out", out_path, "write a machine-readable JSON result here");
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "filtration seed vertex (default: first declared)");
    };
    auto add_theory = [&](CLI::App* cmd) {
        cmd->add_option("--theory", theory, "coefficient theory (default H)")
            ->check(CLI::IsMember({"H", "K", "MU"}));
        cmd->add_option("--trunc", trunc, "series window for MU (default 3)");
        cmd->add_flag("--rational", rational, "rational coefficients (H only)");
    };

    auto* cval = app.add_subcommand("validate", "check the complex, axial, and connection axioms");
    add_input(cval);
    auto* cfil = app.add_subcommand("filter", "compute the step filtration");
    add_input(cfil);
    add_seed(cfil);
    auto* cbas = app.add_subcommand("basis", "compute the free module basis of the cohomology ring");
    add_input(cbas);
    add_seed(cbas);
    add_theory(cbas);
    cbas->add_option("--degree-cap", degree_cap,
                     "search bound for basis values (default: twice the largest batch size)")
        ->check(CLI::PositiveNumber);
    auto* cmem = app.add_subcommand("member", "test whether a class belongs to the ring");
    add_input(cmem);
    add_seed(cmem);
    add_theory(cmem);
    cmem->add_option("--class", class_file, "JSON file mapping vertex labels to expressions")
        ->required();
    auto* cdot = app.add_subcommand("export-dot", "render the total graph with the filtration");
    add_input(cdot);
    add_seed(cdot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        std::vector<std::string> notes;
        GKMComplex gc = load_input(input, notes);
        for (const auto& n : notes) std::cout << "note: " << n << "\n";

        TheoryFlags tf{theory, trunc, false, rational};
        if (cval->parsed()) return cmd_validate(gc, out_path);
        if (cfil->parsed()) return cmd_filter(gc, seed, out_path);
        if (cbas->parsed()) {
            tf.trunc_given = cbas->count("--trunc") > 0;
            return cmd_basis(gc, seed, tf, degree_cap, out_path);
        }
        if (cmem->parsed()) {
            tf.trunc_given = cmem->count("--trunc") > 0;
            return cmd_member(gc, seed, tf, class_file, out_path);
        }
        if (cdot->parsed()) return cmd_export_dot(gc, seed, out_path);
        return kUsage;
    } catch (const internal_error& e) {
        std::cerr << "internal error (please report): " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
